"""Chebyshev location and approximation front ends.

Both applications are substitutions into the core solvers: the two-point
location problem reduces to the two-sided bounded problem with
``p = r + s`` and ``q~ = r~ + s~``, and the approximation problem is the
matrix problem with ``q = p``.  Callers needing the general ``q`` should
use ``solve_matrix_lower`` directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import NotRegularError, ShapeMismatchError, TropMatrix, TropVector, conjugate, mat_add
from .solvers import (
    IntervalSolution,
    MatrixLowerProblem,
    PointSolution,
    TwoSidedProblem,
    solve_matrix_lower,
    solve_two_sided,
)


@dataclass(frozen=True)
class LocationProblem:
    """Place x to minimize the larger Chebyshev distance to r and s,
    within the optional box ``g <= x <= h``."""

    r: TropVector
    s: TropVector
    g: TropVector | None = None
    h: TropVector | None = None

    def __post_init__(self) -> None:
        for name, v in (("r", self.r), ("s", self.s)):
            if v.orientation != "col":
                raise ShapeMismatchError(f"{name} must be a column vector")
            if not v.is_regular:
                raise NotRegularError(f"{name} must be regular")
        reduced_two_sided(self)  # bound invariants match the reduced problem


@dataclass(frozen=True)
class ApproximationProblem:
    """Approximate p by A x in Chebyshev distance, subject to ``x >= g``."""

    A: TropMatrix
    p: TropVector
    g: TropVector

    def __post_init__(self) -> None:
        reduced_matrix_lower(self)


def reduced_two_sided(prob: LocationProblem) -> TwoSidedProblem:
    """Two-sided instance whose objective equals the larger of the two
    Chebyshev distances at every regular point."""
    p = mat_add(prob.r, prob.s)
    q = conjugate(mat_add(conjugate(prob.r), conjugate(prob.s)))
    return TwoSidedProblem(p=p, q=q, g=prob.g, h=prob.h)


def locate(prob: LocationProblem) -> IntervalSolution:
    """Complete solution of the constrained two-point location problem.

    The returned value is the least achievable max distance and the
    interval is the full set of optimal placements.
    """
    return solve_two_sided(reduced_two_sided(prob))


def reduced_matrix_lower(prob: ApproximationProblem) -> MatrixLowerProblem:
    return MatrixLowerProblem(A=prob.A, p=prob.p, q=prob.p, g=prob.g)


def approximate(prob: ApproximationProblem) -> PointSolution:
    """Least Chebyshev error of ``A x`` against ``p`` over ``x >= g``,
    with a vector attaining it."""
    return solve_matrix_lower(reduced_matrix_lower(prob))
