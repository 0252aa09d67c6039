"""Membership predicates, k-unitarity and local-unitary constructions."""

from dataclasses import asdict, dataclass, field
from itertools import combinations

import numpy as np

from .butson import is_butson
from .catalog import fourier, fourier_f4, ortho_o16, perm_p9, perm_p16
from .exceptions import ArityMismatch, BadPlacement, NotHadamard, NotTwoUnitaryPermutation, NotUnitary, ShapeMismatch
from .matcore import is_hadamard, is_unitary
from .measures import entropy_triple
from .rearrange import TensorShape, balanced_bipartitions, partial_transpose, rearrange, reshuffle
from .validation import DEFAULT_TOL, check_bipartite, check_matrix, check_random_state

MAX_BUTSON_Q = 128


def _own_scale(X):
    # X X^+ = c I forces c = ||X||_F^2 / n
    return float(np.vdot(X, X).real) / X.shape[0]


def is_scaled_unitary(X, tol=DEFAULT_TOL):
    """True iff ``X`` is a nonzero multiple of a unitary matrix."""
    X = check_matrix(X)
    scale = _own_scale(X)
    return scale > 0 and is_unitary(X, scale, tol)


@dataclass
class ClassReport:
    n: int
    d: int
    triple: tuple
    chm: bool
    butson_q: object
    r_dual: bool
    gamma_dual: bool
    self_r_dual: bool
    self_gamma_dual: bool
    two_unitary: bool
    strong_two_unitary: bool

    @property
    def flags(self):
        out = asdict(self)
        for key in ("n", "d", "triple"):
            out.pop(key)
        return out

    def to_json(self):
        return {"n": self.n, "d": self.d, "triple": [float(s) for s in self.triple], "flags": self.flags}


def butson_order(X, tol=DEFAULT_TOL, max_q=MAX_BUTSON_Q):
    """Smallest ``q <= max_q`` with ``X`` in BH(n, q), or None."""
    X = check_matrix(X)
    if not is_hadamard(X, tol):
        return None
    for q in range(2, max_q + 1):
        if is_butson(X, q, tol):
            return q
    return None


def classify(X, d, tol=DEFAULT_TOL, q=None):
    """Evaluate every membership predicate on ``X`` of order ``d**2``.

    Self-duality is entrywise equality with the rearranged matrix. With ``q``
    given, ``butson_q`` is ``q`` or None; otherwise the smallest root order
    up to 128 is reported.
    """
    X = check_bipartite(X, d)
    XR, XG = reshuffle(X, d), partial_transpose(X, d)
    unitary = is_scaled_unitary(X, tol)
    r_dual = unitary and is_scaled_unitary(XR, tol)
    gamma_dual = unitary and is_scaled_unitary(XG, tol)
    chm = is_hadamard(X, tol)
    if q is not None:
        butson_q = q if chm and is_butson(X, q, tol) else None
    else:
        butson_q = butson_order(X, tol) if chm else None
    scale = max(1.0, float(np.abs(X).max(initial=0.0)))
    self_r = bool(np.abs(X - XR).max() <= tol * scale)
    self_g = bool(np.abs(X - XG).max() <= tol * scale)
    two = r_dual and gamma_dual
    return ClassReport(
        n=X.shape[0],
        d=d,
        triple=tuple(entropy_triple(X, d)),
        chm=chm,
        butson_q=butson_q,
        r_dual=r_dual,
        gamma_dual=gamma_dual,
        self_r_dual=self_r,
        self_gamma_dual=self_g,
        two_unitary=two,
        strong_two_unitary=two and self_r and self_g,
    )


def is_k_unitary(U, shape, tol=DEFAULT_TOL):
    """Unitarity (at the scale of ``U``) across every balanced bipartition."""
    U = check_matrix(U)
    if U.shape[0] != shape.order:
        raise ShapeMismatch(f"order {U.shape[0]} != d^k = {shape.order}")
    scale = _own_scale(U)
    if scale == 0:
        return False
    return all(is_unitary(rearrange(U, shape, b), scale, tol) for b in balanced_bipartitions(shape.k))


# obstruction to X = X^R = X^G with X invertible


def identified_entries(d):
    """Class labels of the ``d^2 x d^2`` entries tied together by X = X^R = X^G."""
    n = d * d
    parent = list(range(n * n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    a, b, c, e = np.indices((d,) * 4).reshape(4, -1)
    here = (a * d + b) * n + c * d + e
    shuffled = (a * d + c) * n + b * d + e
    transposed = (a * d + e) * n + c * d + b
    for x, y, z in zip(here, shuffled, transposed):
        rx = find(x)
        parent[find(y)] = rx
        parent[find(z)] = find(rx)
    return np.array([find(i) for i in range(n * n)]).reshape(n, n)


def strong_two_unitary_obstruction(d):
    """Two column positions forced to coincide by ``X = X^R = X^G``.

    Returns ``(1, d)``: entry ``((a,b),(0,1))`` is tied to ``((a,b),(1,0))``
    for every row, so such an ``X`` has two equal columns and is singular.
    """
    if d < 2:
        raise ShapeMismatch("obstruction needs d >= 2")
    labels = identified_entries(d)
    if not np.array_equal(labels[:, 1], labels[:, d]):
        raise AssertionError("index identities failed to tie the columns")
    return (1, d)


def project_strong(X, d):
    """Average ``X`` over the entry classes tied by ``X = X^R = X^G``."""
    X = check_bipartite(X, d)
    labels = identified_entries(d).ravel()
    _, inv = np.unique(labels, return_inverse=True)
    sums = np.zeros(inv.max() + 1, dtype=complex)
    np.add.at(sums, inv, X.ravel())
    return (sums / np.bincount(inv))[inv].reshape(X.shape)


def has_obstruction_columns(X, d, tol=DEFAULT_TOL):
    """True iff columns ``1`` and ``d`` of ``X`` coincide (so ``X`` is singular)."""
    X = check_bipartite(X, d)
    i, j = strong_two_unitary_obstruction(d)
    return bool(np.abs(X[:, i] - X[:, j]).max() <= tol * max(1.0, np.abs(X).max()))


# local unitary constructions


def lu_apply(u1, u2, u3, u4, X):
    """``(u1 x u2) X (u3 x u4)`` for unitary local factors."""
    X = check_matrix(X)
    factors = [check_matrix(u) for u in (u1, u2, u3, u4)]
    d = factors[0].shape[0]
    if any(u.shape[0] != d for u in factors) or X.shape[0] != d * d:
        raise ShapeMismatch("local factors must share order d with X of order d^2")
    for u in factors:
        if not is_unitary(u):
            raise NotUnitary("local factors must be unitary")
    return np.kron(factors[0], factors[1]) @ X @ np.kron(factors[2], factors[3])


@dataclass(frozen=True, eq=False)
class MonomialMatrix:
    """``M = D P`` with ``M[i, perm[i]] = phases[i]``."""

    perm: np.ndarray
    phases: np.ndarray = field(default=None)

    def __post_init__(self):
        perm = np.asarray(self.perm, dtype=np.int64)
        n = perm.size
        if perm.ndim != 1 or not np.array_equal(np.sort(perm), np.arange(n)):
            raise ShapeMismatch("perm must be a permutation of 0..n-1")
        phases = np.ones(n, complex) if self.phases is None else np.asarray(self.phases, dtype=complex)
        if phases.shape != (n,):
            raise ShapeMismatch("need one phase per row")
        if np.any(np.abs(np.abs(phases) - 1) > DEFAULT_TOL):
            raise ShapeMismatch("phases must be unimodular")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "phases", phases)

    @property
    def n(self):
        return self.perm.size

    def to_matrix(self):
        M = np.zeros((self.n, self.n), dtype=complex)
        M[np.arange(self.n), self.perm] = self.phases
        return M


def random_monomial(n, rng=None):
    """Uniform random permutation times uniform random phases."""
    rng = check_random_state(rng)
    perm = rng.permutation(n)
    return MonomialMatrix(perm, np.exp(2j * np.pi * rng.random(n)))


_LU_BASES = {"p9": (3, 2), "p16": (4, 2), "o16": (4, 1)}


def lu_masks(base):
    """All admissible Fourier-slot masks for ``base`` as 4-tuples of booleans."""
    d, nf = _LU_BASES[_base_key(base)]
    return [tuple(i in slots for i in range(4)) for slots in combinations(range(4), nf)]


def _base_key(base):
    key = str(base).lower()
    if key not in _LU_BASES:
        raise BadPlacement(f"unknown base {base!r}; expected P9, P16 or O16")
    return key


def lu_family(base, mask, monomials, fourier_params=()):
    """``(Ma s1 Mb x Mc s2 Md) BASE (Me s3 Mf x Mg s4 Mh)``.

    ``mask[i]`` selects a Fourier matrix for slot ``s_{i+1}`` (identity
    otherwise). Order-4 slots take one affine phase each from
    ``fourier_params`` (in turns); order-3 slots use ``F_3``. The O16 base is
    used unscaled: with one ``F_4`` slot the product is already unimodular.
    """
    key = _base_key(base)
    d, nf = _LU_BASES[key]
    mask = tuple(bool(m) for m in mask)
    if len(mask) != 4 or sum(mask) != nf:
        raise BadPlacement(f"base {base} needs exactly {nf} Fourier slot(s) among 4, got {mask}")
    monomials = list(monomials)
    if len(monomials) != 8:
        raise ArityMismatch(f"need 8 monomial matrices, got {len(monomials)}")
    mats = [m.to_matrix() if isinstance(m, MonomialMatrix) else check_matrix(m) for m in monomials]
    if any(m.shape[0] != d for m in mats):
        raise ShapeMismatch(f"monomials must have order {d}")
    params = [] if fourier_params is None else list(fourier_params)
    if d == 4 and len(params) != nf:
        raise ArityMismatch(f"need {nf} Fourier phase(s), got {len(params)}")
    if d == 3 and params:
        raise ArityMismatch("F_3 slots take no parameters")
    params = iter(params)
    slots = [(fourier_f4(next(params)) if d == 4 else fourier(3)) if m else np.eye(d) for m in mask]
    X = {"p9": perm_p9, "p16": perm_p16, "o16": ortho_o16}[key]()
    left = np.kron(mats[0] @ slots[0] @ mats[1], mats[2] @ slots[1] @ mats[3])
    right = np.kron(mats[4] @ slots[2] @ mats[5], mats[6] @ slots[3] @ mats[7])
    return left @ X @ right


def is_two_unitary_permutation(P, tol=DEFAULT_TOL):
    P = check_matrix(P)
    n = P.shape[0]
    d = int(round(np.sqrt(n)))
    if d * d != n:
        return False
    is_perm = np.all((np.abs(P) < tol) | (np.abs(P - 1) < tol)) and np.allclose(np.abs(P).sum(0), 1) and np.allclose(
        np.abs(P).sum(1), 1
    )
    return bool(is_perm) and is_k_unitary(P, TensorShape(d, 2), tol)


def tensor_construct(h, p, tol=DEFAULT_TOL):
    """``(h x h) p`` for a Hadamard ``h`` of order ``d`` and a 2-unitary permutation ``p``."""
    h = check_matrix(h)
    p = check_matrix(p)
    if not is_hadamard(h, tol):
        raise NotHadamard("h must be a (complex) Hadamard matrix")
    if p.shape[0] != h.shape[0] ** 2 or not is_two_unitary_permutation(p, tol):
        raise NotTwoUnitaryPermutation("p must be a 2-unitary permutation of order d^2")
    return np.kron(h, h) @ p
