"""Exact invariants of symbolic powers of near-pencil point ideals in the plane.

Given l >= 3 points on a line and one point off it, this package computes,
in exact arithmetic, the Hilbert functions and minimal-generator tables of
the symbolic powers I^(m), the reverse-lexicographic generic initial
staircases, their Newton polytopes, and the limiting shape of the scaled
polytopes; every divisor-theoretic result can be cross-checked against an
independent rational linear-algebra oracle.
"""

from .divisors import (
    Configuration,
    DivisorClass,
    NegCurveSet,
    canonical_class,
    exceptional_class,
    fatpoint_class,
    intersect,
    line_class,
    neg_curves,
)
from .generators import (
    GeneratorTable,
    closed_form_table,
    generator_table,
    hilbert_function,
    next_degree_gen_count,
)
from .nef import (
    ReductionResult,
    closed_form_reduction,
    h0,
    is_nef,
    reduce_to_nef,
    scan_ceiling,
)
from .oracle import (
    MonomialOrderContext,
    PointSet,
    condition_matrix,
    default_points,
    oracle_generator_counts,
    oracle_gin,
    oracle_hilbert,
)
from .ratmat import RationalMatrix
from .staircase import (
    GinStaircase,
    Polytope2D,
    build_staircase,
    limiting_shape,
    newton_polytope,
    polytope_area,
    scaled_polytope,
)

__version__ = "0.1.0"

__all__ = [
    "Configuration",
    "DivisorClass",
    "GeneratorTable",
    "GinStaircase",
    "MonomialOrderContext",
    "NegCurveSet",
    "PointSet",
    "Polytope2D",
    "RationalMatrix",
    "ReductionResult",
    "build_staircase",
    "canonical_class",
    "closed_form_reduction",
    "closed_form_table",
    "condition_matrix",
    "default_points",
    "exceptional_class",
    "fatpoint_class",
    "generator_table",
    "h0",
    "hilbert_function",
    "intersect",
    "is_nef",
    "limiting_shape",
    "line_class",
    "neg_curves",
    "newton_polytope",
    "next_degree_gen_count",
    "oracle_generator_counts",
    "oracle_gin",
    "oracle_hilbert",
    "polytope_area",
    "reduce_to_nef",
    "scaled_polytope",
    "scan_ceiling",
]
