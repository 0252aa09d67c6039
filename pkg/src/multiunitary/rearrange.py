"""Index rearrangements of operators on ``(C^d)^{\\otimes 2k}``.

A matrix of order ``d**k`` is read as a tensor with ``2k`` legs of dimension
``d``: legs ``0..k-1`` carry the row multi-index and legs ``k..2k-1`` the
column multi-index, most significant digit first (composite index
``j = a*d + b`` for ``k = 2``).
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .exceptions import ShapeMismatch
from .validation import check_bipartite, check_local_dim, check_matrix


@dataclass(frozen=True)
class TensorShape:
    """Local dimension ``d`` and half the number of parties ``k``."""

    d: int
    k: int = 2

    def __post_init__(self):
        check_local_dim(self.d, minimum=2)
        check_local_dim(self.k, minimum=1)

    @property
    def order(self):
        return self.d**self.k

    @property
    def parties(self):
        return 2 * self.k


@dataclass(frozen=True)
class Bipartition:
    """Set of tensor legs that index rows; stored in canonical form.

    A bipartition and its complement differ only by a global transpose, so
    the canonical representative is the one containing leg 0.
    """

    rows: tuple
    k: int

    def __post_init__(self):
        rows = tuple(sorted(int(r) for r in self.rows))
        if len(rows) != self.k or len(set(rows)) != self.k:
            raise ShapeMismatch(f"bipartition needs {self.k} distinct row legs, got {rows}")
        if rows[0] < 0 or rows[-1] >= 2 * self.k:
            raise ShapeMismatch(f"row legs must lie in 0..{2 * self.k - 1}")
        if 0 not in rows:
            rows = tuple(i for i in range(2 * self.k) if i not in rows)
        object.__setattr__(self, "rows", rows)

    @property
    def cols(self):
        return tuple(i for i in range(2 * self.k) if i not in self.rows)

    def leg_order(self):
        """Axis permutation taking the natural layout to this bipartition.

        Row legs that move to the column side trade places pairwise (in
        ascending order) with the column legs moving in. With ``k = 2`` this
        gives ``(0, 2, 1, 3)`` for reshuffling and ``(0, 3, 2, 1)`` for the
        partial transpose, i.e. exactly those operations.
        """
        perm = list(range(2 * self.k))
        out = [i for i in range(self.k) if i not in self.rows]
        inc = [i for i in self.rows if i >= self.k]
        for o, i in zip(out, inc):
            perm[o], perm[i] = i, o
        return tuple(perm)

    @property
    def is_identity(self):
        return self.rows == tuple(range(self.k))


def _permute_legs(X, d, perm):
    n = X.shape[0]
    return X.reshape((d,) * len(perm)).transpose(perm).reshape(n, n)


def reshuffle(X, d):
    """Realignment ``X^R[(a,b),(c,d)] = X[(a,c),(b,d)]``."""
    X = check_bipartite(X, d)
    return _permute_legs(X, d, (0, 2, 1, 3))


def partial_transpose(X, d):
    """Transpose on the second factor: ``X^G[(a,b),(c,d)] = X[(a,d),(c,b)]``."""
    X = check_bipartite(X, d)
    return _permute_legs(X, d, (0, 3, 2, 1))


def balanced_bipartitions(k):
    """All ``C(2k, k) / 2`` balanced bipartitions, identity first."""
    k = check_local_dim(k, minimum=1)
    return [Bipartition(rows, k) for rows in combinations(range(2 * k), k) if rows[0] == 0]


def rearrange(U, shape, bipartition):
    """Reshape ``U`` so that the legs in ``bipartition.rows`` index rows."""
    U = check_matrix(U)
    if U.shape[0] != shape.order:
        raise ShapeMismatch(f"order {U.shape[0]} != d^k = {shape.order}")
    if bipartition.k != shape.k:
        raise ShapeMismatch("bipartition and tensor shape disagree on k")
    return _permute_legs(U, shape.d, bipartition.leg_order())


def tensor_legs(U, shape):
    """View ``U`` as its ``2k``-leg coefficient tensor."""
    U = check_matrix(U)
    if U.shape[0] != shape.order:
        raise ShapeMismatch(f"order {U.shape[0]} != d^k = {shape.order}")
    return np.reshape(U, (shape.d,) * shape.parties)
