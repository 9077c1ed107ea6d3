import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from orbitspace import Cone, PPDivisor, Polyhedron  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "src" / "orbitspace" / "data"


def cone(*gens):
    return Cone.from_generators(gens, len(gens[0]))


@pytest.fixture
def sigma():
    return cone((-1, 1), (5, -1))


@pytest.fixture
def deltas(sigma):
    """Coefficient polyhedra of the K^6 example."""
    return {
        1: Polyhedron([(0, 0), (2, -1)], sigma),
        2: Polyhedron([(-1, 1)], sigma),
        3: Polyhedron([(0, 0), (3, -1)], sigma),
        4: Polyhedron([(0, 0), (4, -1)], sigma),
    }


@pytest.fixture
def ambient(sigma, deltas):
    return PPDivisor(sigma, [(str(i), deltas[i]) for i in (1, 2, 3, 4)])


# strata of the 12-cone fan (indices 0..3 for D1..D4)
AMBIENT_STRATA = [
    set(), {0}, {1}, {2}, {3}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 2, 3}, {1, 2, 3},
]
