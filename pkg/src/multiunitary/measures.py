"""Linear entropy, entropy triples, the chi objective and the defect."""

from typing import NamedTuple

import numpy as np

from .exceptions import NotHadamard, ShapeMismatch, ZeroMatrix
from .matcore import is_hadamard, nullspace_dim
from .rearrange import partial_transpose, reshuffle
from .validation import DEFAULT_TOL, check_bipartite, check_matrix

DEFECT_TOL = 1e-8

TARGETS = ("2u", "r-dual", "gamma-dual", "self-r-dual", "self-gamma-dual")


class EntropyTriple(NamedTuple):
    """Linear entropies of ``U``, its reshuffling and its partial transpose."""

    s: float
    s_r: float
    s_g: float


def _entropy_residual(X):
    # sqrt(n/(n-1)) (XX^+ - tr/n I) / tr; its squared norm is 1 - S(X)
    n = X.shape[0]
    if n < 2:
        raise ShapeMismatch("linear entropy needs order >= 2")
    A = X @ X.conj().T
    tr = np.trace(A).real
    if tr < DEFAULT_TOL:
        raise ZeroMatrix("Tr(X X^dagger) vanishes")
    A[np.diag_indices(n)] -= tr / n
    return A * (np.sqrt(n / (n - 1)) / tr)


def entropy_deficit(X):
    """``1 - S(X)`` evaluated without cancellation (always >= 0)."""
    X = check_matrix(X)
    r = _entropy_residual(X)
    return float(np.vdot(r, r).real)


def linear_entropy(X):
    """Normalised linear entropy of the operator ``X``.

    ``S(X) = n/(n-1) * (1 - Tr(XX^+XX^+) / Tr(XX^+)^2)``; equals 1 exactly
    when ``X X^+`` is proportional to the identity and is scale invariant.
    """
    return 1.0 - entropy_deficit(X)


def entropy_triple(X, d):
    X = check_bipartite(X, d)
    return EntropyTriple(
        linear_entropy(X),
        linear_entropy(reshuffle(X, d)),
        linear_entropy(partial_transpose(X, d)),
    )


def objective_residuals(Y, d, target="2u"):
    """Complex residual blocks whose total squared norm is the objective."""
    Y = check_bipartite(Y, d)
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")
    blocks = [_entropy_residual(Y)]
    if target in ("2u", "r-dual"):
        blocks.append(_entropy_residual(reshuffle(Y, d)))
    if target in ("2u", "gamma-dual"):
        blocks.append(_entropy_residual(partial_transpose(Y, d)))
    if target.startswith("self-"):
        other = reshuffle(Y, d) if target == "self-r-dual" else partial_transpose(Y, d)
        blocks.append((Y - other) / np.linalg.norm(Y))
    return blocks


def target_value(Y, d, target="2u"):
    """Objective for ``target`` evaluated on ``Y`` itself.

    ``2u`` is the sum of the three entropy deficits; the dual variants drop
    one deficit; the self-dual variants replace it by the normalised squared
    distance between ``Y`` and its rearrangement.
    """
    return float(sum(np.vdot(b, b).real for b in objective_residuals(Y, d, target)))


def chi(U, d):
    """``|S(U)-1| + |S(U^G)-1| + |S(U^R)-1|``; zero iff ``U`` is 2-unitary."""
    return target_value(U, d, "2u")


def dress(X, alpha, beta):
    """``diag(e^{i alpha}) X diag(e^{i beta})`` with phases in radians."""
    return np.exp(1j * np.asarray(alpha, float))[:, None] * X * np.exp(1j * np.asarray(beta, float))[None, :]


def objective_z(X, alpha, beta, d, target="2u"):
    """Objective of the diagonally dressed matrix ``D_L(alpha) X D_R(beta)``."""
    X = check_bipartite(X, d)
    alpha = np.asarray(alpha, float)
    beta = np.asarray(beta, float)
    if alpha.shape != (X.shape[0],) or beta.shape != (X.shape[0],):
        raise ShapeMismatch("phase vectors must have one entry per row/column")
    return target_value(dress(X, alpha, beta), d, target)


def defect_matrix(H):
    """Real constraint matrix of first-order unitarity-preserving phase changes.

    Unknowns are ``R[i, k]`` for ``i, k >= 1`` (first row and column fixed
    to zero); one complex equation per row pair ``i < j``:
    ``sum_k H[i,k] conj(H[j,k]) (R[i,k] - R[j,k]) = 0``.
    """
    n = H.shape[0]
    iu, ju = np.triu_indices(n, 1)
    coeff = H[iu] * H[ju].conj()  # (pairs, n)
    M = np.zeros((iu.size, n, n), dtype=complex)
    pairs = np.arange(iu.size)
    M[pairs, iu, :] += coeff
    M[pairs, ju, :] -= coeff
    M = M[:, 1:, 1:].reshape(iu.size, -1)
    return np.concatenate([M.real, M.imag])


def defect(H, tol=DEFECT_TOL):
    """Dimension of the tangent space of phase deformations of ``H``.

    Zero means ``H`` is isolated among dephased complex Hadamard matrices.
    """
    H = check_matrix(H)
    if not is_hadamard(H):
        raise NotHadamard("defect is defined for complex Hadamard matrices only")
    if H.shape[0] < 2:
        return 0
    return nullspace_dim(defect_matrix(H), tol)
