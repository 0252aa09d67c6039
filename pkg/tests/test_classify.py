from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_unitary
from multiunitary.catalog import fourier, named_matrix
from multiunitary.classify import (
    MonomialMatrix,
    classify,
    has_obstruction_columns,
    identified_entries,
    is_k_unitary,
    lu_apply,
    lu_family,
    lu_masks,
    project_strong,
    random_monomial,
    strong_two_unitary_obstruction,
    tensor_construct,
)
from multiunitary.exceptions import BadPlacement, NotHadamard, NotTwoUnitaryPermutation, NotUnitary, ShapeMismatch
from multiunitary.matcore import is_unimodular, is_unitary
from multiunitary.measures import chi, entropy_triple
from multiunitary.rearrange import TensorShape


def test_selfdual_butson_report():
    r = classify(named_matrix("b9_selfdual"), 3)
    assert r.chm and r.butson_q == 3 and r.r_dual and r.self_r_dual
    assert not r.two_unitary and not r.strong_two_unitary
    assert r.triple == pytest.approx((1, 1, 0), abs=1e-12)


def test_swap_report():
    d = 3
    swap = np.zeros((9, 9))
    for a, b in product(range(d), repeat=2):
        swap[b * d + a, a * d + b] = 1
    r = classify(swap, d)
    assert r.self_r_dual and not r.chm


def test_c9_report():
    r = classify(named_matrix("c9"), 3)
    assert r.two_unitary and r.chm and r.butson_q == 3


def test_report_json_schema():
    j = classify(named_matrix("p9"), 3).to_json()
    assert set(j) == {"n", "d", "triple", "flags"}
    assert j["triple"] == [1.0, 1.0, 1.0]
    assert j["flags"]["two_unitary"] is True


def test_two_unitary_implies_duals(rng):
    for _ in range(20):
        r = classify(random_unitary(9, rng), 3)
        assert not r.two_unitary or (r.r_dual and r.gamma_dual)


def test_flags_invariant_under_global_phase():
    for name in ("c9", "b9_selfdual", "y9_gamma"):
        X = named_matrix(name, (0.2,) if name == "y9_gamma" else ())
        a, b = classify(X, 3).flags, classify(np.exp(0.7j) * X, 3).flags
        a.pop("butson_q"), b.pop("butson_q")
        assert a == b


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        classify(np.eye(8), 3)


def test_k_unitary_examples():
    assert is_k_unitary(named_matrix("h8") / np.sqrt(8), TensorShape(2, 3))
    assert not is_k_unitary(np.eye(9), TensorShape(3, 2))
    assert is_k_unitary(named_matrix("p9"), TensorShape(3, 2))


def test_k2_agrees_with_chi(rng):
    shape = TensorShape(3, 2)
    for _ in range(200):
        U = random_unitary(9, rng)
        assert is_k_unitary(U, shape) == (chi(U, 3) < 1e-20)
    for X in (named_matrix("p9"), named_matrix("c9"), named_matrix("b9_selfdual")):
        assert is_k_unitary(X, shape) == (chi(X, 3) < 1e-20)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_obstruction_columns(d):
    assert strong_two_unitary_obstruction(d) == (1, d)
    labels = identified_entries(d)
    assert np.array_equal(labels[:, 1], labels[:, d])


def test_projection_has_equal_columns(rng):
    for d in (2, 3, 4):
        X = rng.standard_normal((d * d, d * d)) + 1j * rng.standard_normal((d * d, d * d))
        Y = project_strong(X, d)
        assert has_obstruction_columns(Y, d)
        assert np.linalg.matrix_rank(Y) < d * d


def test_lu_apply_identity_and_invariance(rng):
    P = named_matrix("p16")
    I4 = np.eye(4)
    assert np.array_equal(lu_apply(I4, I4, I4, I4, P), P)
    us = [random_unitary(4, rng) for _ in range(4)]
    assert entropy_triple(lu_apply(*us, P), 4) == pytest.approx(entropy_triple(P, 4), abs=1e-12)
    with pytest.raises(NotUnitary):
        lu_apply(2 * I4, I4, I4, I4, P)


def test_lu_apply_fourier_not_chm():
    F = fourier(3) / np.sqrt(3)
    X = lu_apply(F, F, F, F, named_matrix("p9"))
    r = classify(X, 3)
    assert r.two_unitary and not r.chm


def test_random_monomial(rng):
    a = random_monomial(5, np.random.default_rng(3))
    b = random_monomial(5, np.random.default_rng(3))
    assert np.array_equal(a.to_matrix(), b.to_matrix())
    M = a.to_matrix()
    assert np.all((np.abs(M) > 0.5).sum(axis=0) == 1)
    assert is_unimodular(M[np.abs(M) > 0.5][None, :])


def test_monomial_validation():
    with pytest.raises(ShapeMismatch):
        MonomialMatrix([0, 0, 1])


@pytest.mark.parametrize("base", ["p9", "p16", "o16"])
def test_lu_family_masks(base, rng):
    d = 3 if base == "p9" else 4
    masks = lu_masks(base)
    assert len(masks) == (4 if base == "o16" else 6)
    for mask in masks:
        mons = [random_monomial(d, rng) for _ in range(8)]
        X = lu_family(base, mask, mons, () if d == 3 else rng.random(sum(mask)))
        assert is_unimodular(X) and is_unitary(X, d * d)
        assert classify(X, d).two_unitary


def test_lu_family_bad_placement(rng):
    mons = [random_monomial(3, rng) for _ in range(8)]
    with pytest.raises(BadPlacement):
        lu_family("p9", (True, False, False, False), mons)
    with pytest.raises(BadPlacement):
        lu_family("x9", (True, True, False, False), mons)


def test_tensor_construct():
    H2 = fourier(2)
    H4 = np.kron(H2, H2)
    r = classify(tensor_construct(H4, named_matrix("p16")), 4)
    assert r.chm and r.two_unitary
    Z = H4.copy()
    Z[0, 0] = 0
    with pytest.raises(NotHadamard):
        tensor_construct(Z, named_matrix("p16"))
    with pytest.raises(NotTwoUnitaryPermutation):
        tensor_construct(H4, np.eye(16))


def test_tensor_construct_complex_generalisation():
    r = classify(tensor_construct(fourier(3), named_matrix("p9")), 3)
    assert r.chm and r.two_unitary


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31))
def test_random_unitaries_never_strong(seed):
    U = random_unitary(9, np.random.default_rng(seed))
    assert not classify(U, 3).strong_two_unitary
