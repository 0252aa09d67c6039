"""Dense complex matrix primitives: Hadamard predicates, polar factor, dephasing."""

import numpy as np

from .exceptions import NotDephased, RankDeficient, ZeroEntry
from .validation import DEFAULT_TOL, check_matrix, check_tol


def is_unimodular(X, tol=DEFAULT_TOL):
    """True iff every entry satisfies ``||X_jk| - 1| <= tol``."""
    X = check_matrix(X, square=False)
    return bool(np.all(np.abs(np.abs(X) - 1.0) <= tol))


def unitarity_residual(X, scale=1.0):
    """Max-norm of ``X X^dagger - scale * I`` divided by ``scale``."""
    X = check_matrix(X)
    gram = X @ X.conj().T
    gram[np.diag_indices_from(gram)] -= scale
    return float(np.abs(gram).max(initial=0.0) / scale)


def is_unitary(X, scale=1.0, tol=DEFAULT_TOL):
    """True iff ``max |X X^dagger - scale I| <= tol * scale``.

    ``scale = N`` tests the Hadamard condition, ``scale = 1`` plain unitarity.
    """
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale}")
    return unitarity_residual(X, scale) <= check_tol(tol)


def is_hadamard(X, tol=DEFAULT_TOL):
    X = check_matrix(X)
    return is_unimodular(X, tol) and is_unitary(X, X.shape[0], tol)


def polar_unitary(X, tol=DEFAULT_TOL):
    """Unitary factor ``W V^dagger`` of the SVD ``X = W S V^dagger``.

    This is the nearest unitary to ``X`` in Frobenius norm. Raises
    RankDeficient when the smallest singular value is below ``tol``.
    """
    X = check_matrix(X)
    W, s, Vh = np.linalg.svd(X)
    if s.size and s[-1] < tol:
        raise RankDeficient(f"smallest singular value {s[-1]:.3e} below {tol:.1e}")
    return W @ Vh


def dephase(H, tol=DEFAULT_TOL):
    """Bring ``H`` to dephased form ``D_L H D_R`` (first row and column all ones).

    The left diagonal ``conj(H[j, 0] / |H[j, 0]|)`` is applied first, then the
    right diagonal normalises the first row.
    """
    H = check_matrix(H)
    if H.size == 0:
        return H.copy()
    border = np.concatenate([H[:, 0], H[0, :]])
    if np.any(np.abs(border) < tol):
        raise ZeroEntry("first row or column contains a (numerically) zero entry")
    left = np.conj(H[:, 0] / np.abs(H[:, 0]))
    Y = left[:, None] * H
    right = np.conj(Y[0, :] / np.abs(Y[0, :]))
    return Y * right[None, :]


def is_dephased(H, tol=DEFAULT_TOL):
    H = check_matrix(H)
    if H.size == 0:
        return True
    return bool(np.all(np.abs(H[0, :] - 1) <= tol) and np.all(np.abs(H[:, 0] - 1) <= tol))


def core(H, tol=DEFAULT_TOL):
    """Trailing ``(n-1) x (n-1)`` block of a dephased matrix."""
    H = check_matrix(H)
    if not is_dephased(H, tol):
        raise NotDephased("core is only defined for dephased matrices")
    return H[1:, 1:].copy()


def with_border(core_block):
    """Inverse of :func:`core`: prepend a first row and column of ones."""
    C = check_matrix(core_block)
    n = C.shape[0] + 1
    H = np.ones((n, n), dtype=complex)
    H[1:, 1:] = C
    return H


def nullspace_dim(A, tol=DEFAULT_TOL):
    """Number of singular directions of ``A`` below ``tol * sigma_max``.

    Columns in excess of rows are counted as null directions.
    """
    A = check_matrix(A, square=False, dtype=np.result_type(np.asarray(A).dtype, float))
    m, n = A.shape
    if n == 0:
        return 0
    if m == 0:
        return n
    s = np.linalg.svd(A, compute_uv=False)
    if s[0] == 0:
        return n
    rank = int(np.sum(s > tol * s[0]))
    return n - rank


def diag_phases(turns):
    """Unimodular diagonal entries ``exp(2 pi i t)`` for phases given in turns."""
    return np.exp(2j * np.pi * np.asarray(turns, dtype=float))
