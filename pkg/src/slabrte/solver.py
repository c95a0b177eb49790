"""Direct solution of the dense collocation system with diagnostics.

LU with partial pivoting (LAPACK via scipy) at the problem sizes used
here (N <= 625); the report carries the relative residual against the
original matrix and a 1-norm condition estimate from the LU factors,
since small or large shape parameters push RBF systems toward
ill-conditioning.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import get_lapack_funcs, lu_factor, lu_solve

# Pivot smaller than this fraction of the largest pivot signals rank deficiency.
PIVOT_RTOL = 1e-14
# Condition estimates beyond this draw a warning; results are still returned.
CONDITION_WARN_THRESHOLD = 1e12
# Relative solve residuals beyond this flag the run as degraded.
RESIDUAL_FLAG_THRESHOLD = 1e-8


class SingularMatrixError(np.linalg.LinAlgError):
    """The collocation matrix is numerically singular.

    Usually a degenerate node layout (duplicate nodes) or an extreme shape
    parameter.
    """


class IllConditionedWarning(UserWarning):
    """Condition estimate exceeds CONDITION_WARN_THRESHOLD."""


class DegradedSolveWarning(UserWarning):
    """Relative solve residual exceeds RESIDUAL_FLAG_THRESHOLD."""


@dataclass(frozen=True)
class SolveReport:
    """Solution vector plus solve diagnostics."""

    coefficients: np.ndarray
    relative_residual: float
    condition_estimate: float


def solve_dense(a, b):
    """Solve a x = b by LU with partial pivoting and report diagnostics.

    Raises
    ------
    SingularMatrixError
        If a pivot underflows PIVOT_RTOL times the largest pivot.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if b.shape != (a.shape[0],):
        raise ValueError("right-hand side length must match the matrix dimension")

    with warnings.catch_warnings():
        # scipy warns on exact zero pivots; the pivot test below handles them.
        warnings.simplefilter("ignore")
        lu, piv = lu_factor(a)

    pivots = np.abs(np.diag(lu))
    if not np.all(np.isfinite(lu)) or pivots.min() <= PIVOT_RTOL * pivots.max():
        raise SingularMatrixError(
            "collocation matrix is numerically singular "
            f"(pivot ratio {pivots.min():.3e} / {pivots.max():.3e})"
        )

    x = lu_solve((lu, piv), b)

    residual = np.linalg.norm(a @ x - b)
    scale = np.linalg.norm(b)
    relative_residual = float(residual / scale) if scale > 0.0 else float(residual)

    (gecon,) = get_lapack_funcs(("gecon",), (a,))
    rcond, info = gecon(lu, np.linalg.norm(a, 1), norm="1")
    condition = float(1.0 / rcond) if rcond > 0.0 else float("inf")
    if condition > CONDITION_WARN_THRESHOLD:
        warnings.warn(
            f"collocation matrix condition estimate {condition:.3e} exceeds "
            f"{CONDITION_WARN_THRESHOLD:.0e}; results may lose accuracy",
            IllConditionedWarning,
            stacklevel=2,
        )
    if relative_residual > RESIDUAL_FLAG_THRESHOLD:
        warnings.warn(
            f"relative solve residual {relative_residual:.3e} exceeds "
            f"{RESIDUAL_FLAG_THRESHOLD:.0e}",
            DegradedSolveWarning,
            stacklevel=2,
        )

    return SolveReport(
        coefficients=x,
        relative_residual=relative_residual,
        condition_estimate=condition,
    )


def solve_system(system):
    """Solve an assembled LinearSystem; see solve_dense."""
    return solve_dense(system.a, system.b)
