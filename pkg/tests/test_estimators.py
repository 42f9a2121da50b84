import math

import numpy as np
import pytest
from sklearn.base import clone

from bellsv import BellBoundAnalyzer, DimensionWitness, INFINITE

from conftest import CHSH, VERTESI_PAL

SQ2 = math.sqrt(2)


class TestBellBoundAnalyzer:
    def test_fit_chsh(self):
        est = BellBoundAnalyzer(restarts=16).fit(CHSH)
        assert est.classical_bound_ == 2.0
        assert est.sv_bound_ == pytest.approx(2 * SQ2, abs=1e-9)
        assert est.tight_
        assert est.semi_axes_ == pytest.approx((1.0, 1.0), abs=1e-9)
        assert est.predict() == pytest.approx(2 * SQ2, abs=1e-9)

    def test_fit_identity(self):
        est = BellBoundAnalyzer(restarts=8).fit(np.eye(2))
        assert est.classical_bound_ == est.sv_bound_ == 2.0
        assert INFINITE not in est.semi_axes_

    def test_sklearn_protocol(self):
        est = BellBoundAnalyzer(restarts=5, seed=7)
        params = est.get_params()
        assert params["restarts"] == 5 and params["seed"] == 7
        cloned = clone(est)
        assert cloned.get_params() == params
        est.set_params(restarts=9)
        assert est.get_params()["restarts"] == 9

    def test_predict_requires_fit(self):
        with pytest.raises(Exception):
            BellBoundAnalyzer().predict()


class TestDimensionWitness:
    def test_fit_predict_vertesi_pal(self):
        est = DimensionWitness(dmax=4, restarts=64).fit(VERTESI_PAL)
        assert est.sv_bound_ == pytest.approx(16.0, abs=1e-9)
        dims = est.predict([0.0, 12.0, 15.7, 16.0, 17.0])
        assert dims.tolist() == [1, 1, 4, 4, 5]

    def test_clone_and_params(self):
        est = DimensionWitness(dmax=3, seed=11)
        assert clone(est).get_params() == est.get_params()

    def test_predict_scalar_input(self):
        est = DimensionWitness(dmax=2, restarts=8).fit(CHSH)
        assert est.predict(2 * SQ2).tolist() == [2]
