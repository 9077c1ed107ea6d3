"""Seeded random instances for property and acceptance tests."""

import random
from fractions import Fraction

from orbitspace import Cone, reduce_to_vertices


def random_pointed_tail(rng, rank, max_rays=3):
    """Random pointed cone: rays on the positive side of a random direction."""
    k = rng.randint(0, max_rays)
    if k == 0:
        return Cone.zero(rank)
    while True:
        w = [rng.randint(-3, 3) for _ in range(rank)]
        if any(w):
            break
    rays = []
    while len(rays) < k:
        r = [rng.randint(-4, 4) for _ in range(rank)]
        if sum(a * b for a, b in zip(r, w)) > 0:
            rays.append(r)
    return Cone.from_generators(rays, rank)


def random_polyhedron(rng, tail, max_points=5, box=4):
    n = rng.randint(1, max_points)
    pts = [[rng.randint(-box, box) for _ in range(tail.rank)] for _ in range(n)]
    if rng.random() < 0.3:
        pts = [[Fraction(x, 2) for x in p] for p in pts]
    return reduce_to_vertices(pts, tail)


def rng_for(seed):
    return random.Random(seed)
