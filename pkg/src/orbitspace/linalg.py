"""Exact linear algebra over Z and Q on tuples of ints and Fractions."""

from fractions import Fraction
from math import gcd, lcm


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def primitive(v):
    """Scale a rational vector to the primitive integer vector on its ray.

    The zero vector is returned unchanged (as integers).
    """
    if all(type(x) is int for x in v):
        ints = list(v)
    else:
        den = 1
        for x in v:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def rref(rows, n):
    """Reduced row echelon form over Q; returns ``(rows, pivot_columns)``."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, n):
    return len(rref(rows, n)[1])


def nullspace(rows, n):
    """Integer basis of ``{x : <r, x> = 0 for r in rows}``.

    Derived from the reduced row echelon form, so it depends only on the
    row space of ``rows``.
    """
    red, pivots = rref(rows, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def subspace_basis(vectors, n):
    """Canonical integer basis of the span: primitive rows of the RREF."""
    red, _ = rref(vectors, n)
    return [primitive(r) for r in red]


def project_into(v, complement_basis, n):
    """Representative of ``v + span(complement_basis)`` orthogonal to that span.

    Used to pick a canonical member of a coset (a facet normal modulo the
    equations of a cone, or a ray modulo its lineality space).
    """
    if not complement_basis:
        return tuple(v)
    E = complement_basis
    k = len(E)
    gram = [[Fraction(dot(E[i], E[j])) for j in range(k)] for i in range(k)]
    rhs = [Fraction(dot(E[i], v)) for i in range(k)]
    aug = [gram[i] + [rhs[i]] for i in range(k)]
    red, _ = rref(aug, k + 1)
    coeffs = [row[k] for row in red]
    out = [Fraction(x) for x in v]
    for c, e in zip(coeffs, E):
        if c:
            out = [x - c * y for x, y in zip(out, e)]
    return primitive(out)
