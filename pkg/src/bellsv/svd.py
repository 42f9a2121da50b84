"""Singular value decomposition, truncation, and the singular-value bound.

The quantum value of a correlation Bell inequality with coefficient matrix g
is bounded above by sqrt(m1 * m2) * ||g||_2, where ||g||_2 is the largest
singular value.  The degenerate leading block of the decomposition is the
input to the tightness analysis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import BellCoefficients
from .errors import NumericalError, ValidationError

__all__ = [
    "SingularDecomposition",
    "TruncatedSVD",
    "compute_svd",
    "truncate_max",
    "default_degeneracy_tol",
    "singular_value_bound",
]

_ORTHO_TOL = 1e-10
_RECON_TOL = 1e-9

# Relative degeneracy tolerance used when no explicit tolerance is given.
DEFAULT_DEGENERACY_RTOL = 1e-6


@dataclass(frozen=True)
class SingularDecomposition:
    """Full decomposition g = V diag(s) W^T with orthogonal V, W."""

    v: np.ndarray
    s: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        for arr in (self.v, self.s, self.w):
            arr.flags.writeable = False


@dataclass(frozen=True)
class TruncatedSVD:
    """Leading block of an SVD: the (near-)degenerate maximal singular value.

    ``v_d`` and ``w_d`` hold the first ``degeneracy_d`` left/right singular
    vectors as columns; their rows are the per-setting vectors entering the
    tightness constraints.
    """

    s_max: float
    degeneracy_d: int
    v_d: np.ndarray
    w_d: np.ndarray
    tol_used: float

    def __post_init__(self):
        self.v_d.flags.writeable = False
        self.w_d.flags.writeable = False


def compute_svd(g: BellCoefficients) -> SingularDecomposition:
    """Full SVD of the coefficient matrix, with self-checks.

    Raises NumericalError if the decomposition routine does not converge or
    the factors fail orthogonality/reconstruction checks.
    """
    try:
        u, s, vh = np.linalg.svd(g.entries, full_matrices=True)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"SVD did not converge: {exc}") from exc
    v, w = u, vh.T
    m1, m2 = g.entries.shape
    if (
        np.abs(v.T @ v - np.eye(m1)).max() > _ORTHO_TOL
        or np.abs(w.T @ w - np.eye(m2)).max() > _ORTHO_TOL
    ):
        raise NumericalError("SVD factors are not orthogonal to tolerance")
    smat = np.zeros((m1, m2))
    np.fill_diagonal(smat, s)
    recon_err = np.abs(v @ smat @ w.T - g.entries).max()
    if recon_err > _RECON_TOL * max(1.0, np.abs(g.entries).max()):
        raise NumericalError(f"SVD reconstruction error {recon_err} too large")
    return SingularDecomposition(v=v, s=s.copy(), w=w)


def default_degeneracy_tol(s_max: float) -> float:
    """Default (relative) tolerance for counting degenerate singular values."""
    return DEFAULT_DEGENERACY_RTOL * s_max


def truncate_max(svd: SingularDecomposition, tol: float | None = None) -> TruncatedSVD:
    """Keep the singular values within ``tol`` of the maximum.

    ``tol`` is absolute; by default it is 1e-6 relative to the maximal
    singular value.
    """
    s_max = float(svd.s[0])
    if tol is None:
        tol = default_degeneracy_tol(s_max)
    if tol < 0:
        raise ValidationError("degeneracy tolerance must be >= 0")
    d = int(np.sum(svd.s >= s_max - tol))
    return TruncatedSVD(
        s_max=s_max,
        degeneracy_d=d,
        v_d=svd.v[:, :d].copy(),
        w_d=svd.w[:, :d].copy(),
        tol_used=float(tol),
    )


def singular_value_bound(g: BellCoefficients) -> float:
    """Tsirelson upper bound sqrt(m1 * m2) * ||g||_2."""
    svd = compute_svd(g)
    return float(np.sqrt(g.m1 * g.m2) * svd.s[0])
