"""Constructors for the explicit matrices, families and dressings.

Phase parameters are given in turns: a parameter ``t`` contributes the
unimodular factor ``exp(2 pi i t)``.
"""

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _tables
from .butson import LogMatrix, to_complex
from .exceptions import ArityMismatch, DomainError, UnknownName
from .matcore import with_border
from .validation import check_local_dim

OMEGA3 = np.exp(2j * np.pi / 3)


def _exp_table(text):
    return np.array(
        [[0 if tok == "." else int(tok) for tok in line.split()] for line in text.strip().splitlines()],
        dtype=np.int64,
    )


def _sign_table(text):
    signs = {"+": 1.0, "-": -1.0, ".": 0.0}
    return np.array([[signs[tok] for tok in line.split()] for line in text.strip().splitlines()])


_MONOMIAL = re.compile(r"^([+-]?)(1|i)?(?:(/)?([a-z])(?:\^(\d+))?)?$")


def _monomial(token, symbols):
    """Evaluate tokens such as ``-ia``, ``i/a``, ``-y^3`` or ``1/y``."""
    m = _MONOMIAL.match(token)
    if m is None or token in ("", "+", "-"):
        raise ValueError(f"bad monomial {token!r}")
    sign, coef, inv, sym, power = m.groups()
    value = -1.0 + 0j if sign == "-" else 1.0 + 0j
    if coef == "i":
        value *= 1j
    if sym is not None:
        base = symbols[sym] ** int(power or 1)
        value = value / base if inv else value * base
    return value


def _symbolic_table(text, **symbols):
    return np.array([[_monomial(tok, symbols) for tok in line.split()] for line in text.strip().splitlines()])


def _columns_to_permutation(columns):
    n = len(columns)
    P = np.zeros((n, n))
    P[np.asarray(columns) - 1, np.arange(n)] = 1.0
    return P


# basic families


def fourier(N):
    """Fourier matrix with entries ``exp(2 pi i jk / N)`` (dephased, unnormalised)."""
    N = check_local_dim(N, minimum=1)
    j = np.arange(N)
    return to_complex(LogMatrix(N, np.outer(j, j) % N)) if N > 1 else np.ones((1, 1), complex)


def _affine_fourier(N, period, turns):
    # phases attached to (j mod period, k mod period), both residues nonzero
    F = fourier(N)
    r = period - 1
    params = np.exp(2j * np.pi * np.asarray(turns, float)).reshape(r, r)
    j = np.arange(N) % period
    mask = (j[:, None] > 0) & (j[None, :] > 0)
    phase = np.ones((N, N), complex)
    phase[mask] = params[(j[:, None] - 1).repeat(N, 1)[mask], (j[None, :] - 1).repeat(N, 0)[mask]]
    return F * phase


def fourier_f4(a):
    """One-parameter affine family of order 4; ``fourier_f4(0)`` is ``F_4``.

    Rows and columns with odd index carry ``exp(2 pi i a)`` at their crossing,
    which keeps the matrix symmetric.
    """
    return _affine_fourier(4, 2, [a])


def fourier_f9_4(a, b, c, d):
    """Four-parameter affine family stemming from ``F_9``.

    Entry ``(j, k)`` with ``j, k`` not divisible by 3 is multiplied by the
    phase selected by ``(j mod 3, k mod 3)``: ``(1,1) -> a``, ``(1,2) -> b``,
    ``(2,1) -> c``, ``(2,2) -> d``.
    """
    return _affine_fourier(9, 3, [a, b, c, d])


def perm_p9():
    return _columns_to_permutation(_tables.P9_COLUMNS)


def perm_p16():
    return _columns_to_permutation(_tables.P16_COLUMNS)


def ortho_o16():
    """Signed 0/+-1 matrix with ``O O^T = 4 I``; ``O/2`` is 2-unitary."""
    return _sign_table(_tables.O16)


def cat_map(N, a, b, c):
    """Quantised cat map ``exp(i pi / N (a j^2 + b k^2 + c j k))``, ``1 <= j, k <= N``."""
    N = check_local_dim(N, minimum=2)
    j = np.arange(1, N + 1, dtype=float)
    return np.exp(1j * np.pi / N * (a * j[:, None] ** 2 + b * j[None, :] ** 2 + c * np.outer(j, j)))


def cat_map_log(N, a, b, c):
    """Exact logarithmic form (q = 2N) of a cat map with integer parameters."""
    if any(int(v) != v for v in (a, b, c)):
        raise DomainError("cat map is Butson only for integer parameters")
    j = np.arange(1, N + 1, dtype=np.int64)
    e = int(a) * j[:, None] ** 2 + int(b) * j[None, :] ** 2 + int(c) * np.outer(j, j)
    return LogMatrix(2 * N, e % (2 * N))


# Karlsson family

KARLSSON_RADIUS = 4.0


@dataclass(frozen=True)
class KarlssonParam:
    """Complex parameter of the BCCB family, restricted to its domain."""

    zeta: complex

    def __post_init__(self):
        z = complex(self.zeta)
        object.__setattr__(self, "zeta", z)
        if abs(1 - z) > KARLSSON_RADIUS or abs(1 + z) > KARLSSON_RADIUS:
            raise DomainError(f"zeta={z} outside |1-z|<=4, |1+z|<=4")
        if min(abs(z - 1), abs(z + 1)) < 1e-12:
            raise DomainError("zeta = +1 and zeta = -1 are excluded")


def karlsson_entries(z):
    """The four unimodular values ``(x, y, u, w)`` for parameter ``z``."""
    z = KarlssonParam(z).zeta

    def pair(t):
        s = np.sqrt(max(16.0 / abs(t) ** 2 - 1.0, 0.0))
        return t / 4 * (1 + 1j * s), t / 4 * (1 - 1j * s)

    x, y = pair(1 + z)
    u, w = pair(1 - z)
    return x, y, u, w


def karlsson(z):
    """Symmetric block-circulant matrix with circulant blocks, order 9."""
    x, y, u, w = karlsson_entries(z)

    def circ(row):
        return np.array([np.roll(row, s) for s in range(3)])

    A = circ(np.array([1, x, x]))
    B = circ(np.array([y, u, w]))
    C = circ(np.array([y, w, u]))
    return np.block([[A, B, C], [C, A, B], [B, C, A]])


# named constants


@lru_cache(maxsize=None)
def _log_constants():
    h8 = (_sign_table(_tables.H8) < 0).astype(np.int64)
    b16_2u = _exp_table(_tables.B16_1_P16)
    # B_[1] = (B_[1] P16) P16^T
    b16_1 = b16_2u @ perm_p16().T.astype(np.int64)
    return {
        "b9_selfdual": LogMatrix(3, _exp_table(_tables.B9_SELFDUAL)),
        "c9": LogMatrix(3, _exp_table(_tables.C9)),
        "b9_0": LogMatrix(6, _exp_table(_tables.B9_0)),
        "b16_1": LogMatrix(2, b16_1),
        "b16_2u": LogMatrix(2, b16_2u),
        "b16_8": LogMatrix(4, _exp_table(_tables.B16_8)),
        "h8": LogMatrix(2, h8),
    }


N9_Y = complex(-0.25, np.sqrt(15) / 4)
N9_XI = complex(7 / 2**7, 33 * np.sqrt(15) / 2**7)


def _diag(values):
    return np.diag(np.asarray(values, dtype=complex))


def _turn(t):
    return np.exp(2j * np.pi * t)


def n9_0():
    return _symbolic_table(_tables.N9_0, y=N9_Y)


def t16_1(p):
    """Order-16 matrix rebuilt from its printed core, ``a = exp(2 pi i p)``."""
    a = _turn(p)
    return with_border(_symbolic_table(_tables.T16_1_CORE, a=a, b=a * a))


def _t16_1_dl(p):
    a = _turn(p)
    return _diag([1, 1, 1, 1, 1, 1, -1, 1, 1, a, -a, -1, 1, -1, -1, 1])


def _t16_1_dr(p):
    a = _turn(p)
    w = np.exp(1j * np.pi / 6)
    return _diag([1, 1, 1, 1, 1, -1j, -1j * a * a, -a * a, w, w**4, w**7, w**10, -1j, -1, 1j, 1])


def _b16_8_dl(a1):
    e = _turn(a1)
    return _diag([1, 1, 1, 1, 1, 1, e, e, OMEGA3, OMEGA3, -1, -1, -1, 1, -1, 1])


def _b16_8_dr(a2):
    e = _turn(a2)
    return _diag([1, 1, 1, 1, 1, 1j, 1, 1j, e, e, e, e, 1, 1j, 1, 1j])


def _y9_selfdual_dl(alpha):
    e = _turn(alpha)
    return _diag([1, 1, 1, 1, 1, 1, e, e, e])


def _y9_selfdual_dr(a, b, c, d):
    w = np.exp(1j * np.pi / 9)
    a, b, c, d = (_turn(t) for t in (a, b, c, d))
    return _diag([1, 1, 1, 1, a * w**2, b * w**4, 1, c * w**4, d * w**8])


def _omega3_diag(exps):
    return _diag(OMEGA3 ** np.asarray(exps))


def _b9_0_dl():
    w = OMEGA3
    return _diag([1, 1, 1, 1, w, 1, 1, 1, w])


def _b9_0_dr():
    w = OMEGA3
    return _diag([1, 1, 1, 1, w, 1, 1, w, w * w])


def _n9_0_dl():
    y = N9_Y
    return _diag([1, 1, 1, 1, -(y**4), -(y**3), 1, y, 1])


def _n9_0_dr():
    y, xi = N9_Y, N9_XI
    return _diag([1, 1, 1, 1, -1, -y, -(y**3), xi, xi * y])


def _k9_3_d():
    w = OMEGA3
    return _diag([1, 1, 1, 1, w * w, w, w, w * w, 1])


def _log(name):
    return lambda: to_complex(_log_constants()[name])


def _y9_gamma(alpha):
    left = np.kron(_diag([1, 1, _turn(alpha)]), np.eye(3))
    return left @ np.kron(fourier(3), fourier(3))


_d9 = _omega3_diag(_tables.D9_SELFDUAL)

_REGISTRY = {
    # name: (arity, builder, description)
    "fourier": (1, lambda N: fourier(int(N)), "Fourier matrix F_N; params: N"),
    "f4": (1, fourier_f4, "affine family F_4(a)"),
    "f9_4": (4, fourier_f9_4, "affine family F_9^(4)(a,b,c,d)"),
    "p9": (0, perm_p9, "2-unitary permutation of order 9"),
    "p16": (0, perm_p16, "2-unitary permutation of order 16"),
    "o16": (0, ortho_o16, "signed matrix with O O^T = 4 I (2-unitary after /2)"),
    "h8": (0, _log("h8"), "3-unitary real Hadamard matrix of order 8"),
    "cat_map": (4, lambda N, a, b, c: cat_map(int(N), a, b, c), "cat map G_N(a,b,c); params: N a b c"),
    "karlsson": (2, lambda re, im: karlsson(complex(re, im)), "Karlsson K_9(zeta); params: Re Im"),
    "b9_selfdual": (0, _log("b9_selfdual"), "self-R-dual Butson matrix in BH(9,3)"),
    "d9_selfdual": (0, lambda: _d9, "diagonal D with C = D B D^dagger"),
    "c9": (0, lambda: _d9 @ to_complex(_log_constants()["b9_selfdual"]) @ _d9.conj().T, "2-unitary C = D B D^dagger"),
    "b9_0": (0, _log("b9_0"), "isolated Butson matrix B_9^(0) in BH(9,6)"),
    "b9_0_dl": (0, _b9_0_dl, "left diagonal making B_9^(0) self-Gamma-dual"),
    "b9_0_dr": (0, _b9_0_dr, "right diagonal making B_9^(0) self-Gamma-dual"),
    "y9_b9_0": (0, lambda: _b9_0_dl() @ to_complex(_log_constants()["b9_0"]) @ _b9_0_dr(), "self-Gamma-dual dressing of B_9^(0)"),
    "n9_0": (0, n9_0, "isolated matrix N_9^(0) (equivalent form)"),
    "n9_0_dl": (0, _n9_0_dl, "left diagonal making N_9^(0) self-Gamma-dual"),
    "n9_0_dr": (0, _n9_0_dr, "right diagonal making N_9^(0) self-Gamma-dual"),
    "y9_n9_0": (0, lambda: _n9_0_dl() @ n9_0() @ _n9_0_dr(), "self-Gamma-dual dressing of N_9^(0)"),
    "k9_3_d": (0, _k9_3_d, "diagonal D with D K_9(3) D self-Gamma-dual"),
    "y9_k9_3": (0, lambda: _k9_3_d() @ karlsson(3) @ _k9_3_d(), "self-Gamma-dual dressing of K_9(3)"),
    "y9_gamma": (1, _y9_gamma, "self-Gamma-dual family (diag(1,1,e^{2 pi i a}) x I)(F3 x F3)"),
    "f33_dl": (0, lambda: _omega3_diag(_tables.F33_DL), "left diagonal making F3 x F3 2-unitary"),
    "f33_dr": (0, lambda: _omega3_diag(_tables.F33_DR), "right diagonal making F3 x F3 2-unitary"),
    "y9_f33_2u": (
        0,
        lambda: _omega3_diag(_tables.F33_DL) @ np.kron(fourier(3), fourier(3)) @ _omega3_diag(_tables.F33_DR),
        "2-unitary D_L (F3 x F3) D_R",
    ),
    "y9_f9_2u": (
        4,
        lambda a, b, c, d: _omega3_diag(_tables.F33_DL) @ fourier_f9_4(a, b, c, d) @ _omega3_diag(_tables.F33_DR),
        "2-unitary family D_L F_9^(4)(a,b,c,d) D_R",
    ),
    "y9_selfdual_dl": (1, _y9_selfdual_dl, "left diagonal D_L(alpha) of the self-R-dual F_9^(4) family"),
    "y9_selfdual_dr": (4, _y9_selfdual_dr, "right diagonal D_R(a,b,c,d) of the self-R-dual F_9^(4) family"),
    "y9_selfdual": (
        5,
        lambda al, a, b, c, d: _y9_selfdual_dl(al) @ fourier_f9_4(a, b, c, d) @ _y9_selfdual_dr(a, b, c, d),
        "self-R-dual family D_L(alpha) F_9^(4)(a,b,c,d) D_R; params: alpha a b c d",
    ),
    "b16_1": (0, _log("b16_1"), "first record of BH(16,2)"),
    "b16_2u": (0, _log("b16_2u"), "2-unitary B_[1] P16 in BH(16,2)"),
    "b16_8": (0, _log("b16_8"), "eighth record of BH(16,4)"),
    "b16_8_dl": (1, _b16_8_dl, "left diagonal D_L(alpha1) for B_[8] P16"),
    "b16_8_dr": (1, _b16_8_dr, "right diagonal D_R(alpha2) for B_[8] P16"),
    "y16_2": (
        2,
        lambda a1, a2: _b16_8_dl(a1) @ to_complex(_log_constants()["b16_8"]) @ perm_p16() @ _b16_8_dr(a2),
        "2-unitary family D_L(a1) B_[8] P16 D_R(a2)",
    ),
    "y16_f4f4": (2, lambda a1, a2: np.kron(fourier_f4(a1), fourier_f4(a2)), "self-Gamma-dual F_4(a1) x F_4(a2)"),
    "t16_1": (1, t16_1, "matrix T_16^(1)(a), a = exp(2 pi i p); params: p"),
    "t16_1_dl": (1, _t16_1_dl, "left diagonal D_L(a) for T_16^(1)"),
    "t16_1_dr": (1, _t16_1_dr, "right diagonal D_R(a) for T_16^(1)"),
    "y16_1": (1, lambda p: _t16_1_dl(p) @ t16_1(p) @ _t16_1_dr(p), "2-unitary family D_L(a) T_16^(1)(a) D_R(a)"),
}

NAMES = tuple(_REGISTRY)


def describe(name):
    return _lookup(name)[2]


def arity(name):
    return _lookup(name)[0]


def _lookup(name):
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownName(f"unknown matrix name {name!r}") from None


def named_matrix(name, params=()):
    """Build the catalog entry ``name`` with the given parameters."""
    n_params, build, _ = _lookup(name)
    params = () if params is None else tuple(params)
    if len(params) != n_params:
        raise ArityMismatch(f"{name!r} takes {n_params} parameter(s), got {len(params)}")
    return np.asarray(build(*params), dtype=complex)


def log_form(name, params=()):
    """Exact logarithmic form of ``name`` when it is a Butson matrix, else None."""
    n_params = arity(name)
    params = () if params is None else tuple(params)
    if len(params) != n_params:
        raise ArityMismatch(f"{name!r} takes {n_params} parameter(s), got {len(params)}")
    consts = _log_constants()
    if name in consts:
        return consts[name]
    if name == "c9":
        return consts["c9"]
    if name == "fourier" and int(params[0]) >= 2:
        N = int(params[0])
        j = np.arange(N)
        return LogMatrix(N, np.outer(j, j) % N)
    if name == "cat_map":
        N, a, b, c = params
        try:
            return cat_map_log(int(N), a, b, c)
        except DomainError:
            return None
    return None
