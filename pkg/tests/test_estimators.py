import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from multiunitary.catalog import named_matrix
from multiunitary.classify import classify
from multiunitary.estimators import DiagonalDresser, SinkhornSearch


def test_dresser_fit_transform():
    X = named_matrix("b9_0")
    est = DiagonalDresser(d=3, target="self-gamma-dual")
    Y = est.fit_transform(X)
    assert est.converged_
    r = classify(Y, 3)
    assert r.self_gamma_dual and r.triple[1] == pytest.approx(20 / 27, abs=1e-9)


def test_dresser_params_and_clone():
    est = DiagonalDresser(d=4, lattice=3)
    assert est.get_params()["lattice"] == 3
    assert clone(est).get_params() == est.get_params()
    with pytest.raises(NotFittedError):
        est.transform(np.eye(16))


def test_sinkhorn_estimator():
    est = SinkhornSearch(n=9, random_state=42).fit()
    assert est.converged_
    assert classify(est.matrix_, 3).two_unitary
