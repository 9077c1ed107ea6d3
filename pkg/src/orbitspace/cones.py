"""Rational polyhedral cones held in canonical double representation."""

from fractions import Fraction
from itertools import combinations

from .dd import double_description
from .linalg import dot, primitive, project_into, subspace_basis
from .lp import maximize


class GeometryError(ValueError):
    """Invalid geometric input (rank mismatch, non-pointed tail, ...)."""


def _as_int_vectors(vectors, rank):
    out = []
    for v in vectors:
        v = tuple(v)
        if len(v) != rank:
            raise GeometryError(f"vector {v} does not have length {rank}")
        p = primitive([Fraction(x) for x in v])
        if any(p):
            out.append(p)
    return sorted(set(out))


def _canonical_side(lineality, rays, rank):
    """Canonical form of the generator side: RREF lineality, projected rays."""
    lin = subspace_basis(lineality, rank)
    canon = {project_into(r, lin, rank) for r in rays}
    canon.discard((0,) * rank)
    return tuple(lin), tuple(sorted(canon))


class Cone:
    """A rational convex polyhedral cone in ``Q^rank``.

    Stored in both representations, each in canonical form::

        cone = span(lineality) + cone(rays)
             = {x : <e, x> = 0 for e in equations,
                    <u, x> >= 0 for u in inequalities}

    ``rays`` and ``inequalities`` are primitive integer vectors, irredundant,
    taken orthogonal to ``lineality`` and ``equations`` respectively, and
    sorted.  The two bases are the primitive rows of a reduced row echelon
    form.  Equality compares the halfspace side only.

    Use :meth:`from_generators` or :meth:`from_halfspaces` to build one.
    """

    __slots__ = ("rank", "lineality", "rays", "equations", "inequalities")

    def __init__(self, rank, lineality, rays, equations, inequalities):
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "lineality", lineality)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "equations", equations)
        object.__setattr__(self, "inequalities", inequalities)

    def __setattr__(self, name, value):
        raise AttributeError("Cone is immutable")

    def __reduce__(self):
        return (Cone, (self.rank, self.lineality, self.rays, self.equations, self.inequalities))

    @classmethod
    def from_generators(cls, generators, rank):
        gens = _as_int_vectors(generators, rank)
        # halfspace side = generators of the dual cone
        eqs, ineqs = _canonical_side(*double_description(gens, rank), rank)
        dual_gens = list(ineqs) + list(eqs) + [tuple(-x for x in e) for e in eqs]
        lin, rays = _canonical_side(*double_description(dual_gens, rank), rank)
        return cls(rank, lin, rays, eqs, ineqs)

    @classmethod
    def from_halfspaces(cls, inequalities, rank, equations=()):
        rows = _as_int_vectors(inequalities, rank)
        for e in _as_int_vectors(equations, rank):
            rows.append(e)
            rows.append(tuple(-x for x in e))
        lin, rays = _canonical_side(*double_description(rows, rank), rank)
        gens = list(rays) + list(lin) + [tuple(-x for x in v) for v in lin]
        eqs, ineqs = _canonical_side(*double_description(gens, rank), rank)
        return cls(rank, lin, rays, eqs, ineqs)

    @classmethod
    def zero(cls, rank):
        return cls.from_generators([], rank)

    @classmethod
    def full(cls, rank):
        return cls.from_halfspaces([], rank)

    @property
    def generators(self):
        """Rays followed by both signs of each lineality basis vector."""
        return self.rays + self.lineality + tuple(tuple(-x for x in v) for v in self.lineality)

    @property
    def halfspaces(self):
        """Inner normals ``u`` with ``cone = {x : <u, x> >= 0}``."""
        return (
            self.inequalities
            + self.equations
            + tuple(tuple(-x for x in e) for e in self.equations)
        )

    @property
    def lineality_rank(self):
        return len(self.lineality)

    @property
    def dimension(self):
        return self.rank - len(self.equations)

    @property
    def is_pointed(self):
        return not self.lineality

    @property
    def is_full_dimensional(self):
        return not self.equations

    def contains(self, x):
        if any(dot(e, x) != 0 for e in self.equations):
            return False
        return all(dot(u, x) >= 0 for u in self.inequalities)

    def contains_in_interior(self, x):
        """Relative-interior membership."""
        if any(dot(e, x) != 0 for e in self.equations):
            return False
        return all(dot(u, x) > 0 for u in self.inequalities)

    def relative_interior_point(self):
        """Sum of the rays; lies in the relative interior."""
        return tuple(sum(col) for col in zip(*self.rays)) if self.rays else (0,) * self.rank

    def _key(self):
        return (self.rank, self.equations, self.inequalities)

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        return self._key() < other._key()

    def __repr__(self):
        parts = [f"rank={self.rank}", f"rays={list(self.rays)}"]
        if self.lineality:
            parts.append(f"lineality={list(self.lineality)}")
        return f"Cone({', '.join(parts)})"


def dual_cone(c):
    """``{u : <u, x> >= 0 for all x in c}``."""
    return Cone(c.rank, c.equations, c.inequalities, c.lineality, c.rays)


def cone_dimension(c):
    return c.dimension


def intersect_cones(cs):
    cs = list(cs)
    if not cs:
        raise GeometryError("cannot intersect an empty list of cones")
    rank = cs[0].rank
    if any(c.rank != rank for c in cs):
        raise GeometryError("cones live in different ambient ranks")
    if len(cs) == 1:
        return cs[0]
    ineqs = [u for c in cs for u in c.inequalities]
    eqs = [e for c in cs for e in c.equations]
    return Cone.from_halfspaces(ineqs, rank, eqs)


def common_interior_point(cs):
    """A point lying in the relative interior of every cone, or ``None``.

    Solves the exact LP: maximise ``s`` subject to ``<u, x> >= s`` for every
    inequality of every cone, ``<e, x> = 0`` for every equation, and
    ``sum |x_j| <= 1``, ``s <= 1``.  Strictly positive optimum means the
    relative interiors meet.  The returned witness is a primitive integer
    vector.
    """
    cs = list(cs)
    if not cs:
        return None
    rank = cs[0].rank
    ineqs = sorted({u for c in cs for u in c.inequalities})
    eqs = sorted({e for c in cs for e in c.equations})
    if not ineqs:
        return (0,) * rank
    # variables: x_plus (rank), x_minus (rank), s
    A, b = [], []
    for u in ineqs:
        A.append([-x for x in u] + list(u) + [1])
        b.append(0)
    for e in eqs:
        A.append(list(e) + [-x for x in e] + [0])
        b.append(0)
        A.append([-x for x in e] + list(e) + [0])
        b.append(0)
    A.append([1] * (2 * rank) + [0])
    b.append(1)
    A.append([0] * (2 * rank) + [1])
    b.append(1)
    c = [0] * (2 * rank) + [1]
    value, sol = maximize(c, A, b)
    if value <= 0:
        return None
    x = [sol[j] - sol[rank + j] for j in range(rank)]
    return primitive(x)


def pairwise_interiors_meet(cs):
    """True iff every two cones share a relative-interior point."""
    cs = list(dict.fromkeys(cs))
    return all(common_interior_point(pair) is not None for pair in combinations(cs, 2))
