from itertools import product
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multiunitary.exceptions import ShapeMismatch
from multiunitary.rearrange import (
    Bipartition,
    TensorShape,
    balanced_bipartitions,
    partial_transpose,
    rearrange,
    reshuffle,
    tensor_legs,
)


def test_index_conventions():
    d = 3
    X = np.arange(81.0).reshape(9, 9)
    R, G = reshuffle(X, d), partial_transpose(X, d)
    for a, b, c, e in product(range(d), repeat=4):
        assert R[a * d + b, c * d + e] == X[a * d + c, b * d + e]
        assert G[a * d + b, c * d + e] == X[a * d + e, c * d + b]


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 4), st.integers(0, 2**31))
def test_involutions(d, seed):
    r = np.random.default_rng(seed)
    X = r.standard_normal((d * d, d * d)) + 1j * r.standard_normal((d * d, d * d))
    assert np.array_equal(reshuffle(reshuffle(X, d), d), X)
    assert np.array_equal(partial_transpose(partial_transpose(X, d), d), X)


def test_swap_gate():
    d = 3
    swap = np.zeros((9, 9))
    for a, b in product(range(d), repeat=2):
        swap[b * d + a, a * d + b] = 1
    assert np.array_equal(reshuffle(swap, d), swap)
    # SWAP^G is d times the projector on the maximally entangled state
    assert np.linalg.matrix_rank(partial_transpose(swap, d)) == 1


def test_bad_order():
    with pytest.raises(ShapeMismatch):
        reshuffle(np.eye(8), 3)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_bipartition_count(k):
    parts = balanced_bipartitions(k)
    assert len(parts) == comb(2 * k, k) // 2
    assert parts[0].is_identity
    assert len(set(parts)) == len(parts)


def test_rearrange_reproduces_r_and_gamma():
    rng = np.random.default_rng(0)
    X = rng.standard_normal((16, 16))
    shape = TensorShape(4, 2)
    assert np.array_equal(rearrange(X, shape, Bipartition((0, 2), 2)), reshuffle(X, 4))
    assert np.array_equal(rearrange(X, shape, Bipartition((0, 3), 2)), partial_transpose(X, 4))
    assert np.array_equal(rearrange(X, shape, Bipartition((0, 1), 2)), X)


def test_complement_is_canonicalised():
    assert Bipartition((1, 3), 2) == Bipartition((0, 2), 2)


def test_tensor_legs():
    X = np.arange(64.0).reshape(8, 8)
    T = tensor_legs(X, TensorShape(2, 3))
    assert T.shape == (2,) * 6
    assert T[1, 0, 1, 0, 1, 1] == X[5, 3]
