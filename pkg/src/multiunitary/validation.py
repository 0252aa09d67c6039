"""Input validation helpers in the spirit of ``sklearn.utils.validation``."""

import numbers

import numpy as np

from .exceptions import ShapeMismatch

DEFAULT_TOL = 1e-10


def check_matrix(X, *, square=True, dtype=complex, copy=False):
    """Return ``X`` as a finite 2-D ndarray of ``dtype``.

    Raises ShapeMismatch for non-2-D or (when ``square``) non-square input.
    """
    arr = np.array(X, dtype=dtype, copy=copy) if copy else np.asarray(X, dtype=dtype)
    if arr.ndim != 2:
        raise ShapeMismatch(f"expected a 2-D matrix, got ndim={arr.ndim}")
    if square and arr.shape[0] != arr.shape[1]:
        raise ShapeMismatch(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix contains NaN or infinite entries")
    return arr


def check_bipartite(X, d):
    """Validate that ``X`` has order ``d**2`` and return it as complex."""
    d = check_local_dim(d)
    X = check_matrix(X)
    if X.shape[0] != d * d:
        raise ShapeMismatch(f"order {X.shape[0]} is not d^2 for d={d}")
    return X


def check_local_dim(d, minimum=1):
    if not isinstance(d, numbers.Integral) or isinstance(d, bool) or d < minimum:
        raise ShapeMismatch(f"local dimension must be an integer >= {minimum}, got {d!r}")
    return int(d)


def check_tol(tol):
    tol = float(tol)
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return tol


def infer_local_dim(n):
    """Integer square root of ``n``; ShapeMismatch if ``n`` is not a square."""
    d = int(round(np.sqrt(n)))
    if d * d != n:
        raise ShapeMismatch(f"order {n} is not a perfect square")
    return d


def check_random_state(seed):
    """Turn ``seed`` into a ``numpy.random.Generator``."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)
