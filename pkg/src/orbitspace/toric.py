"""Strata of a divisor arrangement read off a toric fan."""

from dataclasses import dataclass
from itertools import chain, combinations

from .cones import Cone, intersect_cones
from .linalg import dot, primitive, rank


class UnsupportedInput(ValueError):
    """Input outside the supported class (non-simplicial maximal cones)."""


@dataclass(frozen=True)
class Fan:
    rank: int
    rays: tuple
    maximal_cones: tuple

    @classmethod
    def build(cls, rank, rays, maximal_cones):
        return cls(
            rank,
            tuple(tuple(r) for r in rays),
            tuple(tuple(sorted(set(c))) for c in maximal_cones),
        )

    def cone(self, idx):
        return Cone.from_generators([self.rays[i] for i in idx], self.rank)

    def is_simplicial(self, idx):
        return rank([self.rays[i] for i in idx], self.rank) == len(idx)


@dataclass(frozen=True)
class DivisorMarking:
    marks: dict  # label -> ray index


@dataclass(frozen=True)
class Split:
    parts: tuple
    meet: bool = False


@dataclass(frozen=True)
class SplittingSpec:
    splits: dict  # label -> Split


def _face_rays(c, ray_idx, rays, subset):
    """Rays of ``c`` on the smallest face containing the rays in ``subset``."""
    tight = [u for u in c.inequalities if all(dot(u, rays[i]) == 0 for i in subset)]
    return {i for i in ray_idx if all(dot(u, rays[i]) == 0 for u in tight)}


def validate_fan(f):
    """List of human-readable violations; empty iff the fan is well formed."""
    problems = []
    seen = {}
    for i, r in enumerate(f.rays):
        if len(r) != f.rank:
            problems.append(f"ray {i} has length {len(r)}, expected {f.rank}")
            continue
        if not any(r):
            problems.append(f"ray {i} is zero")
            continue
        if primitive(r) != tuple(r):
            problems.append(f"ray {i} is not primitive")
        if tuple(r) in seen:
            problems.append(f"ray {i} duplicates ray {seen[tuple(r)]}")
        else:
            seen[tuple(r)] = i
    if problems:
        return problems

    cones = {}
    for k, idx in enumerate(f.maximal_cones):
        bad = [i for i in idx if not 0 <= i < len(f.rays)]
        if bad:
            problems.append(f"cone {k} refers to unknown ray {bad[0]}")
            continue
        c = f.cone(idx)
        if not c.is_pointed:
            problems.append(f"cone {k} is not pointed")
            continue
        extreme = set(c.rays)
        lost = [i for i in idx if f.rays[i] not in extreme]
        if lost:
            problems.append(f"cone {k}: ray {lost[0]} is not an extreme ray")
            continue
        cones[k] = c
    for a, b in combinations(range(len(f.maximal_cones)), 2):
        sa, sb = set(f.maximal_cones[a]), set(f.maximal_cones[b])
        if sa <= sb or sb <= sa:
            problems.append(f"cones {a} and {b}: one ray set contains the other")
            continue
        if a not in cones or b not in cones:
            continue
        common = sorted(sa & sb)
        meet = intersect_cones([cones[a], cones[b]])
        if meet != Cone.from_generators([f.rays[i] for i in common], f.rank):
            problems.append(f"cones {a} and {b} overlap beyond their common rays")
            continue
        for k, idx in ((a, sa), (b, sb)):
            if _face_rays(cones[k], idx, f.rays, common) != set(common):
                problems.append(f"cones {a} and {b}: intersection is not a face of cone {k}")
                break
    return problems


def occurring_strata(f, m):
    """All label sets ``{labels of marked rays in tau}`` for faces ``tau``.

    Only simplicial maximal cones are supported; there every subset of the
    rays spans a face, so each maximal cone contributes the power set of
    its marked labels.
    """
    by_ray = {ray: label for label, ray in m.marks.items()}
    out = {frozenset()}
    for k, idx in enumerate(f.maximal_cones):
        if not f.is_simplicial(idx):
            raise UnsupportedInput(f"maximal cone {k} is not simplicial")
        labels = sorted((by_ray[i] for i in idx if i in by_ray), key=str)
        for subset in chain.from_iterable(combinations(labels, n) for n in range(len(labels) + 1)):
            out.add(frozenset(subset))
    return out


def apply_splitting(strata, spec):
    """Replace split labels by their parts."""
    present = set().union(*strata) if strata else set()
    for label in spec.splits:
        if label not in present:
            raise KeyError(f"split label {label!r} does not occur in any stratum")
    out = set()
    for s in strata:
        variants = [frozenset()]
        for label in s:
            split = spec.splits.get(label)
            if split is None:
                options = [frozenset([label])]
            else:
                options = [frozenset([p]) for p in split.parts]
                if split.meet:
                    options = [
                        frozenset(c)
                        for n in range(1, len(split.parts) + 1)
                        for c in combinations(split.parts, n)
                    ]
            variants = [v | o for v in variants for o in options]
        out.update(variants)
    return out
