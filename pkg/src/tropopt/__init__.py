"""Constrained max-plus (tropical) optimization in closed form."""

from .applications import (
    ApproximationProblem,
    LocationProblem,
    approximate,
    locate,
    reduced_matrix_lower,
    reduced_two_sided,
)
from .linalg import (
    NotColumnRegularError,
    NotRegularError,
    ShapeMismatchError,
    TropMatrix,
    TropVector,
    ZeroVectorError,
    conjugate,
    distance,
    mat_add,
    mat_leq,
    mat_mul,
    max_solution_leq,
    scalar_mul,
    vec_leq,
)
from .oracle import (
    GRID_POINT_CAP,
    BestUnderObjective,
    GridSpec,
    GridTooLargeError,
    MatrixLowerObjective,
    OracleReport,
    TwoSidedObjective,
    VerificationFailedError,
    best_under_box,
    grid_min,
    matrix_lower_box,
    two_sided_box,
    verify_interval,
    verify_point,
)
from .semifield import (
    MAX_PLUS,
    MIN_PLUS,
    NEG_INF,
    InvalidScalarError,
    MaxPlus,
    MinPlus,
    Semifield,
    TropicalError,
    UndefinedPowerError,
    ZeroInverseError,
)
from .solvers import (
    InfeasibleBoundsError,
    IntervalSolution,
    MatrixLowerProblem,
    PointSolution,
    TwoSidedProblem,
    best_underestimator,
    matrix_lower_terms,
    objective_matrix,
    objective_two_sided,
    solve_matrix_lower,
    solve_two_sided,
    two_sided_terms,
)

__version__ = "0.1.0"

__all__ = [
    "ApproximationProblem",
    "BestUnderObjective",
    "GRID_POINT_CAP",
    "GridSpec",
    "GridTooLargeError",
    "InfeasibleBoundsError",
    "IntervalSolution",
    "InvalidScalarError",
    "LocationProblem",
    "MAX_PLUS",
    "MIN_PLUS",
    "MatrixLowerObjective",
    "MatrixLowerProblem",
    "MaxPlus",
    "MinPlus",
    "NEG_INF",
    "NotColumnRegularError",
    "NotRegularError",
    "OracleReport",
    "PointSolution",
    "Semifield",
    "ShapeMismatchError",
    "TropMatrix",
    "TropVector",
    "TropicalError",
    "TwoSidedObjective",
    "TwoSidedProblem",
    "UndefinedPowerError",
    "VerificationFailedError",
    "ZeroInverseError",
    "ZeroVectorError",
    "approximate",
    "best_under_box",
    "best_underestimator",
    "conjugate",
    "distance",
    "grid_min",
    "locate",
    "mat_add",
    "mat_leq",
    "mat_mul",
    "matrix_lower_box",
    "matrix_lower_terms",
    "max_solution_leq",
    "objective_matrix",
    "objective_two_sided",
    "reduced_matrix_lower",
    "reduced_two_sided",
    "scalar_mul",
    "solve_matrix_lower",
    "solve_two_sided",
    "two_sided_box",
    "two_sided_terms",
    "vec_leq",
    "verify_interval",
    "verify_point",
]
