"""Exact rational simplex for small maximisation problems.

Only the form needed for strict-feasibility questions is supported:
maximise ``c @ x`` subject to ``A @ x <= b`` and ``x >= 0`` with ``b >= 0``,
so the all-slack basis is feasible and no phase one is needed.  Bland's
rule is used throughout; the problems are highly degenerate at the origin.
"""

from fractions import Fraction


class UnboundedLP(ArithmeticError):
    pass


def maximize(c, A, b):
    """Return ``(value, x)`` for the LP described in the module docstring."""
    m = len(A)
    n = len(c)
    if any(bi < 0 for bi in b):
        raise ValueError("right-hand side must be nonnegative")
    # tableau rows: [A | I | b]; objective row holds reduced costs -c
    T = [
        [Fraction(x) for x in A[i]]
        + [Fraction(1 if j == i else 0) for j in range(m)]
        + [Fraction(b[i])]
        for i in range(m)
    ]
    z = [Fraction(-x) for x in c] + [Fraction(0)] * m + [Fraction(0)]
    basis = [n + i for i in range(m)]
    width = n + m

    while True:
        enter = next((j for j in range(width) if z[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave is None:
            raise UnboundedLP("objective is unbounded")
        piv = T[leave][enter]
        row = [x / piv for x in T[leave]]
        T[leave] = row
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], row)]
        if z[enter] != 0:
            f = z[enter]
            z = [x - f * y for x, y in zip(z, row)]
        basis[leave] = enter

    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = T[i][-1]
    return z[-1], x
