"""Attainability certificate for the singular-value bound.

The bound is attained iff there is a d x d' matrix alpha such that the
vectors alpha^T V_row(x) and sqrt(m2/m1) * alpha^T W_row(y) are all unit
vectors.  The Gram ansatz solves the quadratic system through the linear
surrogate Q c = 1 with Q_ij = (A A^T)_ij^2, then X = A^T diag(c) A and
alpha = X^(1/2).  A failure of the ansatz means "not certified tight",
not a proof that the bound is unattainable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import BellCoefficients
from .errors import NoAlphaSolutionError, NoRealAlphaSolutionError
from .svd import TruncatedSVD, compute_svd, truncate_max

__all__ = [
    "ConstraintRows",
    "AlphaSolution",
    "EllipsoidReport",
    "INFINITE",
    "build_constraint_rows",
    "solve_alpha_gram",
    "alpha_certificate",
    "is_tight",
    "ellipsoid_semiaxes",
]

# Distinguished semi-axis value for zero eigenvalues of alpha alpha^T.
INFINITE = math.inf

DEFAULT_RESIDUAL_TOL = 1e-6

_PINV_RCOND = 1e-10
_PSD_RTOL = 1e-8
_RANK_RTOL = 1e-8


@dataclass(frozen=True)
class ConstraintRows:
    """Stacked unit-norm constraint rows: V-block over sqrt(m2/m1) W-block."""

    a: np.ndarray
    m1: int
    m2: int

    def __post_init__(self):
        self.a.flags.writeable = False


@dataclass(frozen=True)
class AlphaSolution:
    """Solution of the normalization system.

    ``x_matrix`` is the PSD Gram matrix X = alpha alpha^T; ``alpha`` is one
    d x d' factor (consumers must not depend on the specific factorization);
    ``residual`` is max_i |A_i X A_i^T - 1|.
    """

    x_matrix: np.ndarray
    alpha: np.ndarray
    rank_dprime: int
    residual: float

    def __post_init__(self):
        self.x_matrix.flags.writeable = False
        self.alpha.flags.writeable = False


@dataclass(frozen=True)
class EllipsoidReport:
    """Semi-axes 1/sqrt(lambda_i) of the ellipsoid r^T X r = 1.

    Zero eigenvalues of X give INFINITE semi-axes (degenerate ellipsoid,
    lower-dimensional measurement directions suffice).
    """

    semi_axes: tuple[float, ...]


def build_constraint_rows(t: TruncatedSVD, m1: int, m2: int) -> ConstraintRows:
    """Assemble the (m1+m2) x d constraint matrix A, Bob weighted by sqrt(m2/m1)."""
    a = np.vstack([t.v_d, np.sqrt(m2 / m1) * t.w_d])
    return ConstraintRows(a=a, m1=m1, m2=m2)


def solve_alpha_gram(
    rows: ConstraintRows, residual_tol: float = DEFAULT_RESIDUAL_TOL
) -> AlphaSolution:
    """Solve the normalization system via the Gram ansatz.

    Raises NoAlphaSolutionError when the linear surrogate leaves a residual
    above ``residual_tol``, and NoRealAlphaSolutionError when the resulting
    X has a significantly negative eigenvalue.
    """
    a = rows.a
    n = a.shape[0]
    q = (a @ a.T) ** 2
    # Min-norm least-squares solution of Q c = 1; the cutoff makes the
    # degenerate case deterministic.
    c = np.linalg.pinv(q, rcond=_PINV_RCOND) @ np.ones(n)
    x = a.T @ (c[:, None] * a)
    x = (x + x.T) / 2
    residual = float(np.abs(np.einsum("ij,jk,ik->i", a, x, a) - 1.0).max())
    if residual > residual_tol:
        raise NoAlphaSolutionError(
            f"No solution alpha found (residual {residual:.3e} > {residual_tol:.1e})"
        )
    lam, u = np.linalg.eigh(x)
    lam_max = float(lam[-1])
    if lam[0] < -_PSD_RTOL * max(1.0, lam_max):
        raise NoRealAlphaSolutionError(
            f"No real solution alpha found (eigenvalue {lam[0]:.3e} < 0)"
        )
    lam = np.clip(lam, 0.0, None)
    keep = lam > _RANK_RTOL * lam_max
    alpha = u[:, keep] * np.sqrt(lam[keep])
    return AlphaSolution(
        x_matrix=x,
        alpha=alpha,
        rank_dprime=int(np.count_nonzero(keep)),
        residual=residual,
    )


def alpha_certificate(
    g: BellCoefficients,
    degeneracy_tol: float | None = None,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
) -> tuple[TruncatedSVD, AlphaSolution]:
    """Full pipeline g -> SVD -> truncation -> Gram solve.

    Propagates the no-solution errors of solve_alpha_gram.
    """
    svd = compute_svd(g)
    trunc = truncate_max(svd, degeneracy_tol)
    rows = build_constraint_rows(trunc, g.m1, g.m2)
    return trunc, solve_alpha_gram(rows, residual_tol)


def is_tight(
    g: BellCoefficients,
    degeneracy_tol: float | None = None,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
) -> tuple[bool, AlphaSolution | None]:
    """Whether the singular-value bound is certified attainable.

    A False result means the Gram ansatz found no alpha; it is not a proof
    of untightness.  Numerical failures propagate as exceptions.
    """
    try:
        _, sol = alpha_certificate(g, degeneracy_tol, residual_tol)
    except NoAlphaSolutionError:
        return False, None
    return True, sol


def ellipsoid_semiaxes(sol: AlphaSolution) -> EllipsoidReport:
    """Semi-axes of the constraint ellipsoid defined by X = alpha alpha^T."""
    lam = np.linalg.eigvalsh(sol.x_matrix)
    lam_max = float(lam[-1])
    axes = tuple(
        1.0 / math.sqrt(l) if l > _RANK_RTOL * lam_max else INFINITE
        for l in sorted(lam, reverse=True)
    )
    return EllipsoidReport(semi_axes=axes)
