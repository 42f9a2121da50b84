"""Singular-value Tsirelson bounds for CHSH-type Bell inequalities.

Given a real coefficient matrix g, this package computes the exact classical
(local-realistic) bound, the singular-value upper bound sqrt(m1*m2)*||g||_2 on
the quantum value, an attainability certificate with optimal measurement
directions and an explicit quantum realization, fixed-dimension quantum maxima
(dimension-witness thresholds), and rotated-frame variants of the inequality.
"""

__version__ = "0.1.0"

from .core import (
    BellCoefficients,
    CorrelationTable,
    DeterministicAssignment,
    classical_bound,
    correlations_from_assignment,
    evaluate_bell,
    load_matrix,
)
from .errors import (
    BellsvError,
    DimensionMismatchError,
    EnumerationBudgetError,
    NoAlphaSolutionError,
    NoRealAlphaSolutionError,
    NumericalError,
    ValidationError,
)
from .estimators import BellBoundAnalyzer, DimensionWitness
from .rotation import rotate_bob, rotated_chsh, violation_curve
from .seesaw import (
    BoundReport,
    SeesawConfig,
    WitnessThresholds,
    certify,
    classify_dimension,
    seesaw_bound,
    witness_thresholds,
)
from .strategies import (
    GeneratorSet,
    QuantumRealization,
    VectorStrategy,
    anticommuting_generators,
    directions_from_alpha,
    maximally_entangled_state,
    observable_from_polarizer_angle,
    realize,
    strategy_value,
)
from .svd import (
    SingularDecomposition,
    TruncatedSVD,
    compute_svd,
    singular_value_bound,
    truncate_max,
)
from .tightness import (
    INFINITE,
    AlphaSolution,
    ConstraintRows,
    EllipsoidReport,
    alpha_certificate,
    build_constraint_rows,
    ellipsoid_semiaxes,
    is_tight,
    solve_alpha_gram,
)

__all__ = [
    "__version__",
    "BellCoefficients",
    "CorrelationTable",
    "DeterministicAssignment",
    "classical_bound",
    "correlations_from_assignment",
    "evaluate_bell",
    "load_matrix",
    "BellsvError",
    "DimensionMismatchError",
    "EnumerationBudgetError",
    "NoAlphaSolutionError",
    "NoRealAlphaSolutionError",
    "NumericalError",
    "ValidationError",
    "BellBoundAnalyzer",
    "DimensionWitness",
    "rotate_bob",
    "rotated_chsh",
    "violation_curve",
    "BoundReport",
    "SeesawConfig",
    "WitnessThresholds",
    "certify",
    "classify_dimension",
    "seesaw_bound",
    "witness_thresholds",
    "GeneratorSet",
    "QuantumRealization",
    "VectorStrategy",
    "anticommuting_generators",
    "directions_from_alpha",
    "maximally_entangled_state",
    "observable_from_polarizer_angle",
    "realize",
    "strategy_value",
    "SingularDecomposition",
    "TruncatedSVD",
    "compute_svd",
    "singular_value_bound",
    "truncate_max",
    "INFINITE",
    "AlphaSolution",
    "ConstraintRows",
    "EllipsoidReport",
    "alpha_certificate",
    "build_constraint_rows",
    "ellipsoid_semiaxes",
    "is_tight",
    "solve_alpha_gram",
]
