"""Exact combinatorics of bigraded Hilbert schemes attached to grid antichains.

The package computes, without any floating point: antichains of the grid
poset and their order ideals, the square-free ideals they generate, bigraded
Hilbert functions, the torus-weight decomposition of the tangent space at an
antichain ideal (by a closed-form census and, independently, by exact
rational linear algebra over syzygy constraints), and the Hilbert-scheme
dimension via the cutting recursion.  Every closed-form count is
cross-checked against the linear-algebra route by the verification harness.
"""

from .dimension import (
    DimensionTrace,
    cs_recognize,
    hilbert_scheme_dimension,
    linear_part_offset,
)
from .errors import DomainError, InvariantViolation, PreconditionError, UnsupportedCutError
from .grid import (
    Antichain,
    CutResult,
    GridShape,
    OrderIdeal,
    cut,
    cutting_threshold,
    enumerate_antichains,
    normalize_antichain,
    order_ideal,
)
from .ideals import (
    HilbertTable,
    Monomial,
    SquareFreeIdeal,
    antichain_of_ideal,
    default_box,
    hilbert_table,
    ideal_intersection,
    ideal_of_antichain,
    ideal_sum,
    is_borel_fixed_radical,
    lift_cut_ideals,
)
from .oracle import (
    HomBasis,
    RationalMatrix,
    rational_kernel,
    tangent_dimension_oracle,
    tangent_hom_space,
    weight_decomposition,
)
from .tangent import (
    FineWeight,
    TangentReport,
    formula_weights,
    linear_tangent_weights,
    quadratic_tangent_weights,
    tangent_dimension_formula,
)

__version__ = "0.1.0"

__all__ = [
    "Antichain",
    "CutResult",
    "DimensionTrace",
    "DomainError",
    "FineWeight",
    "GridShape",
    "HilbertTable",
    "HomBasis",
    "InvariantViolation",
    "Monomial",
    "OrderIdeal",
    "PreconditionError",
    "RationalMatrix",
    "SquareFreeIdeal",
    "TangentReport",
    "UnsupportedCutError",
    "antichain_of_ideal",
    "cs_recognize",
    "cut",
    "cutting_threshold",
    "default_box",
    "enumerate_antichains",
    "formula_weights",
    "hilbert_scheme_dimension",
    "hilbert_table",
    "ideal_intersection",
    "ideal_of_antichain",
    "ideal_sum",
    "is_borel_fixed_radical",
    "lift_cut_ideals",
    "linear_part_offset",
    "linear_tangent_weights",
    "normalize_antichain",
    "order_ideal",
    "quadratic_tangent_weights",
    "rational_kernel",
    "tangent_dimension_formula",
    "tangent_dimension_oracle",
    "tangent_hom_space",
    "weight_decomposition",
]
