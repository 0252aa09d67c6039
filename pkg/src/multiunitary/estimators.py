"""Estimator-style wrappers around the numerical searches."""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .exceptions import ShapeMismatch
from .measures import dress
from .search import SearchConfig, phase_walk, sinkhorn_search
from .validation import check_bipartite, check_matrix


class DiagonalDresser(TransformerMixin, BaseEstimator):
    """Learn unimodular diagonals ``D_L, D_R`` such that ``D_L X D_R`` meets ``target``.

    ``fit`` runs the phase walk; ``transform`` applies the learned dressing to
    any matrix of the same order.
    """

    def __init__(self, d=3, target="2u", max_iters=200_000, restarts=1, lattice=None, tie=None, polish=True,
                 chi_tol=1e-12, random_state=0):
        self.d = d
        self.target = target
        self.max_iters = max_iters
        self.restarts = restarts
        self.lattice = lattice
        self.tie = tie
        self.polish = polish
        self.chi_tol = chi_tol
        self.random_state = random_state

    def _config(self):
        return SearchConfig(target=self.target, max_iters=self.max_iters, restarts=self.restarts, lattice=self.lattice,
                            tie=self.tie, polish=self.polish, chi_tol=self.chi_tol, seed=self.random_state)

    def fit(self, X, y=None):
        X = check_bipartite(X, self.d)
        res = phase_walk(X, self.d, self._config())
        self.alpha_, self.beta_ = res.alpha, res.beta
        self.objective_ = res.objective
        self.converged_ = res.converged
        self.n_iter_ = res.iters
        self.seed_ = res.seed
        return self

    def transform(self, X):
        check_is_fitted(self, "alpha_")
        X = check_matrix(X)
        if X.shape[0] != self.alpha_.size:
            raise ShapeMismatch(f"fitted on order {self.alpha_.size}, got {X.shape[0]}")
        return dress(X, self.alpha_, self.beta_)


class SinkhornSearch(BaseEstimator):
    """Sinkhorn-type search for a 2-unitary complex Hadamard matrix of order ``n``."""

    def __init__(self, n=9, max_iters=20_000, restarts=10, chi_tol=1e-12, random_state=0):
        self.n = n
        self.max_iters = max_iters
        self.restarts = restarts
        self.chi_tol = chi_tol
        self.random_state = random_state

    def fit(self, X=None, y=None):
        cfg = SearchConfig(max_iters=self.max_iters, restarts=self.restarts, chi_tol=self.chi_tol,
                           seed=self.random_state)
        res = sinkhorn_search(self.n, cfg)
        self.matrix_ = np.asarray(res.matrix)
        self.chi_ = res.objective
        self.converged_ = res.converged
        self.n_iter_ = res.iters
        self.seed_ = res.seed
        return self
