import numpy as np
import pytest

from multiunitary.butson import is_butson, is_hadamard_exact, to_complex
from multiunitary.catalog import (
    NAMES,
    arity,
    cat_map,
    cat_map_log,
    fourier,
    fourier_f4,
    fourier_f9_4,
    karlsson,
    karlsson_entries,
    log_form,
    named_matrix,
    ortho_o16,
)
from multiunitary.exceptions import ArityMismatch, DomainError, UnknownName
from multiunitary.matcore import is_hadamard, is_unimodular
from multiunitary.measures import entropy_triple

SPECIAL = {"fourier": (7,), "cat_map": (9, 1, 4, -4), "karlsson": (0.3, 0.1)}


@pytest.mark.parametrize("name", NAMES)
def test_every_name_builds_unimodular_or_diagonal(name):
    params = SPECIAL.get(name, tuple(0.1 * (i + 1) for i in range(arity(name))))
    X = named_matrix(name, params)
    if name == "o16":
        assert np.allclose(X @ X.T, 4 * np.eye(16))
    elif name in ("p9", "p16") or np.count_nonzero(X - np.diag(np.diag(X))) == 0:
        assert is_unimodular(np.abs(X).sum(axis=1)[None, :])
    else:
        assert is_hadamard(X)


def test_unknown_and_arity():
    with pytest.raises(UnknownName):
        named_matrix("nope")
    with pytest.raises(KeyError):
        named_matrix("nope")
    with pytest.raises(ArityMismatch):
        named_matrix("f4", ())


def test_fourier_entries():
    F = fourier(6)
    assert F[2, 3] == pytest.approx(np.exp(2j * np.pi * 6 / 6))
    assert F[1, 1] == pytest.approx(np.exp(2j * np.pi / 6))


def test_affine_families_reduce_to_fourier():
    assert np.allclose(fourier_f4(0), fourier(4))
    assert np.allclose(fourier_f9_4(0, 0, 0, 0), fourier(9))


def test_affine_families_hadamard(rng):
    for _ in range(10):
        assert is_hadamard(fourier_f4(rng.random()))
        assert is_hadamard(fourier_f9_4(*rng.random(4)))


def test_f4_symmetric():
    X = fourier_f4(0.37)
    assert np.allclose(X, X.T)


def test_cat_map_log_agrees():
    for args in [(9, 1, 4, -4), (16, 1, 2, -2), (9, -4, -8, -4)]:
        L = cat_map_log(*args)
        assert np.allclose(to_complex(L), cat_map(*args), atol=1e-12)
        assert is_hadamard_exact(L)
    with pytest.raises(DomainError):
        cat_map_log(9, 0.5, 1, 1)


def test_karlsson_domain():
    for z in (1, -1, 4.5, 5j):
        with pytest.raises(DomainError):
            karlsson(z)
    assert all(abs(abs(v) - 1) < 1e-12 for v in karlsson_entries(0.3 + 0.2j))


def test_karlsson_symmetric_hadamard(rng):
    for _ in range(10):
        z = complex(*rng.uniform(-2.5, 2.5, 2))
        K = karlsson(z)
        assert is_hadamard(K)
        assert np.allclose(K, K.T)


def test_butson_constants_exact():
    for name, q in [("b9_selfdual", 3), ("c9", 3), ("b9_0", 6), ("b16_1", 2), ("b16_2u", 2), ("b16_8", 4), ("h8", 2)]:
        L = log_form(name)
        assert L.q == q
        assert is_hadamard_exact(L)
        assert is_butson(named_matrix(name), q)


def test_c9_is_conjugate_dressing():
    D = named_matrix("d9_selfdual")
    B = named_matrix("b9_selfdual")
    assert np.allclose(named_matrix("c9"), D @ B @ D.conj().T, atol=1e-12)


def test_o16_real_signed():
    O = ortho_o16()
    assert set(np.unique(O)) == {-1.0, 0.0, 1.0}
    assert entropy_triple(O / 2, 4) == pytest.approx((1, 1, 1), abs=1e-12)


def test_n9_constants():
    from multiunitary.catalog import N9_XI, N9_Y

    assert abs(N9_Y) == pytest.approx(1, abs=1e-15)
    assert abs(N9_XI) == pytest.approx(1, abs=1e-15)
    assert 7**2 + 33**2 * 15 == 2**14


def test_log_form_none_for_continuous():
    assert log_form("f4", (0.3,)) is None
    assert log_form("fourier", (5,)).q == 5


def test_named_matrix_accepts_array_params():
    p = np.array([0.1, 0.2])
    assert np.allclose(named_matrix("y16_2", p), named_matrix("y16_2", list(p)))
    assert log_form("fourier", np.array([3])) is not None
