"""Polyhedra with a pointed tail cone, their normal quasifans and Minkowski sums."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cones import Cone, GeometryError, cone_dimension, dual_cone, intersect_cones
from .linalg import dot, primitive


class UnboundedSupport(ArithmeticError):
    """The linear form is unbounded below on the polyhedron."""


class NotAVertex(GeometryError):
    pass


def as_rational_vector(v, rank=None):
    out = tuple(Fraction(x) for x in v)
    if rank is not None and len(out) != rank:
        raise GeometryError(f"vector {v} does not have length {rank}")
    return out


def _vertex_normal_cone(v, others, tail):
    ineqs = [primitive([a - b for a, b in zip(w, v)]) for w in others if w != v]
    ineqs.extend(tail.rays)
    return Cone.from_halfspaces(ineqs, tail.rank)


class Polyhedron:
    """``conv(vertices) + tail`` with a pointed tail cone.

    Vertices are stored sorted.  Construction checks that every listed
    point is extreme (its normal cone is full-dimensional); use
    :func:`reduce_to_vertices` for arbitrary point sets.
    """

    __slots__ = ("rank", "vertices", "tail", "_normal_cones")

    def __init__(self, vertices, tail, *, _normal_cones=None):
        rank = tail.rank
        if not tail.is_pointed:
            raise GeometryError("tail cone must be pointed")
        verts = sorted({as_rational_vector(v, rank) for v in vertices})
        if not verts:
            raise GeometryError("a polyhedron needs at least one vertex")
        if _normal_cones is None:
            _normal_cones = {v: _vertex_normal_cone(v, verts, tail) for v in verts}
            for v, cone in _normal_cones.items():
                if not cone.is_full_dimensional:
                    raise NotAVertex(f"point {_fmt(v)} is not a vertex")
        self.rank = rank
        self.vertices = tuple(verts)
        self.tail = tail
        self._normal_cones = _normal_cones

    def __eq__(self, other):
        if not isinstance(other, Polyhedron):
            return NotImplemented
        return self.vertices == other.vertices and self.tail == other.tail

    def __hash__(self):
        return hash((self.vertices, self.tail))

    def __repr__(self):
        return f"Polyhedron(vertices=[{', '.join(_fmt(v) for v in self.vertices)}], tail={self.tail!r})"

    def normal_cone(self, v):
        try:
            return self._normal_cones[as_rational_vector(v)]
        except KeyError:
            raise NotAVertex(f"point {_fmt(v)} is not a vertex") from None

    def translate(self, w):
        w = as_rational_vector(w, self.rank)
        shifted = {tuple(a + b for a, b in zip(v, w)): c for v, c in self._normal_cones.items()}
        return Polyhedron(shifted, self.tail, _normal_cones=shifted)


def _fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def evaluate_support(p, u):
    """``min <u, v>`` over ``p``; raises :class:`UnboundedSupport` if none."""
    u = as_rational_vector(u, p.rank)
    if any(dot(u, r) < 0 for r in p.tail.rays):
        raise UnboundedSupport(f"linear form {_fmt(u)} is unbounded below")
    return min(dot(u, v) for v in p.vertices)


def normal_cone_at_vertex(p, v):
    """``{u : <u, w - v> >= 0 for all w in p}`` for a vertex ``v`` of ``p``."""
    return p.normal_cone(v)


def reduce_to_vertices(points, tail):
    """The polyhedron ``conv(points) + tail``, keeping only extreme points."""
    if not tail.is_pointed:
        raise GeometryError("tail cone must be pointed")
    pts = sorted({as_rational_vector(v, tail.rank) for v in points})
    if not pts:
        raise GeometryError("a polyhedron needs at least one point")
    cones = {}
    for v in pts:
        c = _vertex_normal_cone(v, pts, tail)
        if c.is_full_dimensional:
            cones[v] = c
    # non-extreme points only contribute redundant constraints
    return Polyhedron(cones, tail, _normal_cones=cones)


def minkowski_sum(ps, tail=None):
    """Sum of polyhedra sharing one tail cone.

    The empty sum is ``{0} + tail`` and needs ``tail`` to be given.
    """
    ps = list(ps)
    if not ps:
        if tail is None:
            raise GeometryError("empty Minkowski sum needs an explicit tail")
        return Polyhedron([(0,) * tail.rank], tail)
    tail = ps[0].tail if tail is None else tail
    if any(p.tail != tail for p in ps):
        raise GeometryError("Minkowski summands must share the same tail cone")
    if len(ps) == 1:
        return ps[0]
    sums = {
        tuple(sum(coords) for coords in zip(*combo))
        for combo in product(*(p.vertices for p in ps))
    }
    return reduce_to_vertices(sums, tail)


def is_vertex_of_sum(ps, vs):
    """Whether ``sum(vs)`` is a vertex of ``sum(ps)``.

    Decided by intersecting the normal cones of the summands; the sum
    itself is never formed.
    """
    ps = list(ps)
    vs = list(vs)
    if len(ps) != len(vs):
        raise GeometryError("need one vertex per polyhedron")
    if not ps:
        return True
    lam = intersect_cones([p.normal_cone(v) for p, v in zip(ps, vs)])
    return cone_dimension(lam) == ps[0].rank


@dataclass(frozen=True)
class NormalQuasifan:
    source: Polyhedron
    maximal_cones: dict

    def cone_of_face(self, u):
        """Normal cone of the face of ``source`` on which ``u`` is minimal."""
        p = self.source
        u = as_rational_vector(u, p.rank)
        values = [dot(u, v) for v in p.vertices]
        low = min(values)
        face = [v for v, val in zip(p.vertices, values) if val == low]
        base = face[0]
        ineqs = [primitive([a - b for a, b in zip(w, base)]) for w in p.vertices if w != base]
        ineqs.extend(p.tail.rays)
        eqs = [primitive([a - b for a, b in zip(w, base)]) for w in face[1:]]
        eqs.extend(r for r in p.tail.rays if dot(u, r) == 0)
        return Cone.from_halfspaces(ineqs, p.rank, eqs)


def normal_quasifan(p):
    return NormalQuasifan(p, {v: p.normal_cone(v) for v in p.vertices})


def quasifan_contains(qf, c):
    """Whether ``c`` is one of the cones ``lambda(F)`` of the quasifan."""
    if c.rank != qf.source.rank:
        return False
    omega = dual_cone(qf.source.tail)
    if not all(omega.contains(g) for g in c.generators):
        return False
    u = c.relative_interior_point()
    return qf.cone_of_face(u) == c
