"""Pp-divisors, admissible and coherent vertex collections, orbit-space flags."""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .cones import (
    Cone,
    GeometryError,
    common_interior_point,
    dual_cone,
    intersect_cones,
)
from .polyhedra import (
    as_rational_vector,
    minkowski_sum,
    normal_quasifan,
    quasifan_contains,
)


class NotAdmissible(ValueError):
    pass


class NotCoherent(ValueError):
    pass


class PPDivisor:
    """``sum_i  Delta_i (x) D_i`` given by labelled coefficient polyhedra.

    All coefficients share the pointed tail cone ``tail``.
    """

    __slots__ = ("rank", "tail", "labels", "polyhedra")

    def __init__(self, tail, coefficients):
        if not tail.is_pointed:
            raise GeometryError("tail cone must be pointed")
        labels = []
        polys = []
        for label, poly in coefficients:
            if label in labels:
                raise GeometryError(f"duplicate coefficient label {label!r}")
            if poly.rank != tail.rank:
                raise GeometryError(f"coefficient {label!r} has rank {poly.rank}, expected {tail.rank}")
            if poly.tail != tail:
                raise GeometryError(f"coefficient {label!r} does not have the common tail cone")
            labels.append(label)
            polys.append(poly)
        self.rank = tail.rank
        self.tail = tail
        self.labels = tuple(labels)
        self.polyhedra = tuple(polys)

    @property
    def coefficients(self):
        return tuple(zip(self.labels, self.polyhedra))

    def __len__(self):
        return len(self.polyhedra)

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown coefficient label {label!r}") from None


@dataclass(frozen=True)
class Identification:
    """Declares that the contraction for every ``u`` in the relative interior
    of ``u_cone`` maps some point of stratum ``a`` and some point of stratum
    ``b`` to the same image."""

    stratum_a: frozenset
    stratum_b: frozenset
    u_cone: Cone


@dataclass(frozen=True)
class Stratification:
    """Index sets ``{i : y in D_i}`` realised by points ``y``, plus declared
    identifications.

    The empty set and all singletons are always added.
    """

    strata: frozenset
    identifications: tuple = ()

    @classmethod
    def build(cls, r, strata=(), identifications=()):
        family = {frozenset(s) for s in strata}
        family.add(frozenset())
        family.update(frozenset([i]) for i in range(r))
        for s in family:
            bad = [i for i in s if not 0 <= i < r]
            if bad:
                raise GeometryError(f"stratum index {bad[0]} out of range")
        idents = tuple(identifications)
        for ident in idents:
            for s in (ident.stratum_a, ident.stratum_b):
                if s not in family:
                    raise GeometryError(f"identification refers to unknown stratum {sorted(s)}")
        return cls(frozenset(family), idents)

    def ordered(self):
        return sorted(self.strata, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class VertexCollection:
    choices: tuple

    def __iter__(self):
        return iter(self.choices)

    def __len__(self):
        return len(self.choices)


@dataclass(frozen=True)
class OrbitSpaceRecord:
    collection: VertexCollection
    stratum_cones: dict
    projective: bool
    toric_embeddable: bool
    witness: tuple = None


def _collection(d, c):
    if not isinstance(c, VertexCollection):
        c = VertexCollection(tuple(as_rational_vector(v, d.rank) for v in c))
    if len(c) != len(d):
        raise GeometryError(f"collection has {len(c)} entries, divisor has {len(d)} coefficients")
    for label, poly, v in zip(d.labels, d.polyhedra, c.choices):
        poly.normal_cone(v)
    return c


def weight_cone(d):
    return dual_cone(d.tail)


def fiber_polyhedron(d, stratum):
    return minkowski_sum([d.polyhedra[i] for i in sorted(stratum)], tail=d.tail)


def stratum_cone(d, c, stratum):
    """Intersection of the normal cones at the chosen vertices over ``stratum``."""
    c = _collection(d, c)
    if not stratum:
        return weight_cone(d)
    return intersect_cones([d.polyhedra[i].normal_cone(c.choices[i]) for i in sorted(stratum)])


def is_admissible(d, s, c):
    c = _collection(d, c)
    return all(stratum_cone(d, c, I).is_full_dimensional for I in s.strata)


def _coherent_given_cones(d, s, cones):
    for ident in s.identifications:
        for a, b in ((ident.stratum_a, ident.stratum_b), (ident.stratum_b, ident.stratum_a)):
            lam_a, lam_b = cones[a], cones[b]
            if lam_a == lam_b:
                continue
            if not quasifan_contains(normal_quasifan(fiber_polyhedron(d, a)), lam_b):
                continue
            if common_interior_point([ident.u_cone, lam_b]) is not None:
                return False
    return True


def is_coherent(d, s, c):
    """Coherence of an admissible collection against the declared identifications."""
    c = _collection(d, c)
    if not is_admissible(d, s, c):
        raise NotAdmissible("collection is not admissible")
    cones = {I: stratum_cone(d, c, I) for I in s.strata}
    return _coherent_given_cones(d, s, cones)


def _strata_closing_at(s, r):
    """Group strata by their largest index so each is checked once assigned."""
    by_last = [[] for _ in range(r)]
    for I in s.strata:
        if I:
            by_last[max(I)].append(sorted(I))
    return by_last


def _search(d, s, prefix):
    """Depth-first enumeration below a fixed choice of the first vertices.

    Returns ``(admissible_count, coherent_index_tuples)``.
    """
    r = len(d)
    normal = [[p.normal_cone(v) for v in p.vertices] for p in d.polyhedra]
    closing = _strata_closing_at(s, r)
    omega = weight_cone(d)
    admissible = 0
    coherent = []

    def cone_for(I, idx):
        if len(I) == 1:
            return normal[I[0]][idx[I[0]]]
        return intersect_cones([normal[i][idx[i]] for i in I])

    def walk(idx):
        nonlocal admissible
        k = len(idx)
        if k == r:
            admissible += 1
            if s.identifications:
                cones = {frozenset(): omega}
                for I in s.strata:
                    if I:
                        cones[I] = cone_for(sorted(I), idx)
                if not _coherent_given_cones(d, s, cones):
                    return
            coherent.append(tuple(idx))
            return
        for j in range(len(d.polyhedra[k].vertices)):
            idx.append(j)
            if all(cone_for(I, idx).is_full_dimensional for I in closing[k]):
                walk(idx)
            idx.pop()

    prefix = list(prefix)
    for k in range(len(prefix)):
        if not all(cone_for(I, prefix).is_full_dimensional for I in closing[k]):
            return 0, []
    walk(prefix)
    return admissible, coherent


def _worker_count():
    raw = os.environ.get("ORBITSPACE_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def search(d, s, workers=None):
    """Return ``(admissible_count, coherent_collections)``.

    Collections come in lexicographic order of vertex indices, vertices of
    each coefficient being sorted.  With ``workers > 1`` the branches below
    the first coefficient run in separate processes; the result order is
    unaffected.
    """
    if workers is None:
        workers = _worker_count()
    if len(d) == 0:
        return 1, [VertexCollection(())]
    first = range(len(d.polyhedra[0].vertices))
    if workers > 1 and len(first) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(first))) as pool:
            parts = list(pool.map(_search, [d] * len(first), [s] * len(first), [[j] for j in first]))
    else:
        parts = [_search(d, s, [])]
    admissible = sum(p[0] for p in parts)
    out = []
    for _, found in parts:
        for idx in found:
            out.append(VertexCollection(tuple(d.polyhedra[i].vertices[j] for i, j in enumerate(idx))))
    return admissible, out


def enumerate_coherent(d, s, workers=None):
    """All coherent vertex collections, in lexicographic index order."""
    return search(d, s, workers)[1]


def classify(d, s, c):
    """Projectivity and toric-embeddability flags of a coherent collection."""
    c = _collection(d, c)
    if not is_coherent(d, s, c):
        raise NotCoherent("collection is not coherent")
    cones = {I: stratum_cone(d, c, I) for I in s.ordered()}
    distinct = list(dict.fromkeys(cones.values()))
    witness = common_interior_point(distinct)
    embeddable = all(
        common_interior_point([a, b]) is not None for a, b in combinations(distinct, 2)
    )
    return OrbitSpaceRecord(
        collection=c,
        stratum_cones=cones,
        projective=witness is not None,
        toric_embeddable=embeddable,
        witness=witness,
    )
