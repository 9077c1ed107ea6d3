"""Complete orbit spaces of affine torus actions, via pp-divisors.

The geometry kernel (:mod:`orbitspace.cones`, :mod:`orbitspace.polyhedra`)
is exact: every number is an ``int`` or a :class:`fractions.Fraction`.
"""

__version__ = "0.1.0"

from .cones import (
    Cone,
    GeometryError,
    common_interior_point,
    cone_dimension,
    dual_cone,
    intersect_cones,
)
from .polyhedra import (
    NormalQuasifan,
    NotAVertex,
    Polyhedron,
    UnboundedSupport,
    evaluate_support,
    is_vertex_of_sum,
    minkowski_sum,
    normal_cone_at_vertex,
    normal_quasifan,
    quasifan_contains,
    reduce_to_vertices,
)
from .ppdivisor import (
    Identification,
    NotAdmissible,
    NotCoherent,
    OrbitSpaceRecord,
    PPDivisor,
    Stratification,
    VertexCollection,
    classify,
    enumerate_coherent,
    fiber_polyhedron,
    is_admissible,
    is_coherent,
    stratum_cone,
    weight_cone,
)
from .problem import ProblemDescription, ProblemError, parse_problem
from .toric import (
    DivisorMarking,
    Fan,
    Split,
    SplittingSpec,
    UnsupportedInput,
    apply_splitting,
    occurring_strata,
    validate_fan,
)
