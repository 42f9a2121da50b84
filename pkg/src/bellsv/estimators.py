"""Scikit-learn-style wrappers so the analysis composes with sklearn pipelines.

Both estimators treat the coefficient matrix as the data fitted on; observed
Bell values are what gets predicted/classified afterwards.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .core import BellCoefficients
from .seesaw import SeesawConfig, certify, classify_dimension, witness_thresholds
from .tightness import ellipsoid_semiaxes

__all__ = ["BellBoundAnalyzer", "DimensionWitness"]


def _coefficients_from_X(X) -> BellCoefficients:
    X = check_array(X, ensure_min_samples=1, ensure_min_features=1)
    return BellCoefficients(np.asarray(X, dtype=float))


class BellBoundAnalyzer(BaseEstimator):
    """Computes the full bound sandwich for one coefficient matrix.

    Parameters
    ----------
    restarts, max_iters, value_tol, seed : see-saw configuration.

    Attributes (after fit)
    ----------------------
    classical_bound_ : exact local-realistic bound.
    sv_bound_ : singular-value Tsirelson bound.
    seesaw_lower_ : see-saw lower bound at the degeneracy dimension.
    tight_ : whether the SV bound is certified attainable.
    gap_ : sv_bound_ - seesaw_lower_.
    alpha_ : alpha certificate, or None.
    semi_axes_ : ellipsoid semi-axes of the certificate, or None.
    """

    def __init__(self, restarts=32, max_iters=10000, value_tol=1e-10, seed=42):
        self.restarts = restarts
        self.max_iters = max_iters
        self.value_tol = value_tol
        self.seed = seed

    def _config(self) -> SeesawConfig:
        return SeesawConfig(
            restarts=self.restarts,
            max_iters=self.max_iters,
            value_tol=self.value_tol,
            seed=self.seed,
        )

    def fit(self, X, y=None):
        g = _coefficients_from_X(X)
        report = certify(g, self._config())
        self.report_ = report
        self.classical_bound_ = report.classical
        self.sv_bound_ = report.sv_bound
        self.seesaw_lower_ = report.seesaw_lower
        self.tight_ = report.tight_certified
        self.gap_ = report.gap
        self.alpha_ = report.alpha
        self.semi_axes_ = (
            ellipsoid_semiaxes(report.alpha).semi_axes if report.alpha else None
        )
        return self

    def predict(self, X=None):
        """Certified quantum maximum (SV bound when tight, else the see-saw lower)."""
        check_is_fitted(self, "report_")
        return self.sv_bound_ if self.tight_ else self.seesaw_lower_


class DimensionWitness(BaseEstimator):
    """Dimension witness: fit thresholds T_d' on g, classify observed values.

    ``predict`` maps each observed Bell value to the smallest measurement
    direction dimension consistent with it (dmax + 1 when it exceeds every
    modeled threshold).
    """

    def __init__(self, dmax=4, restarts=32, max_iters=10000, value_tol=1e-10, seed=42):
        self.dmax = dmax
        self.restarts = restarts
        self.max_iters = max_iters
        self.value_tol = value_tol
        self.seed = seed

    def fit(self, X, y=None):
        g = _coefficients_from_X(X)
        cfg = SeesawConfig(
            restarts=self.restarts,
            max_iters=self.max_iters,
            value_tol=self.value_tol,
            seed=self.seed,
        )
        self.thresholds_ = witness_thresholds(g, self.dmax, cfg)
        self.sv_bound_ = self.thresholds_.sv_bound
        return self

    def predict(self, q_observed):
        check_is_fitted(self, "thresholds_")
        q = np.atleast_1d(np.asarray(q_observed, dtype=float))
        return np.array([classify_dimension(v, self.thresholds_) for v in q])
