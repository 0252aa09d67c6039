"""Numerical searches: random walk over diagonal dressings and a Sinkhorn-type map."""

import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.optimize import least_squares

from .exceptions import ShapeMismatch, ZeroEntry
from .matcore import is_unimodular, is_unitary, polar_unitary
from .measures import TARGETS, dress, objective_residuals
from .rearrange import partial_transpose, reshuffle
from .validation import DEFAULT_TOL, check_bipartite, check_matrix, infer_local_dim

TIES = (None, "conjugate", "equal")


@dataclass(frozen=True)
class SearchConfig:
    """Budget, schedule and constraints shared by both searches.

    ``frozen`` marks phases kept at their starting value (``alpha`` then
    ``beta``, or only ``alpha`` when tied). ``lattice = q`` restricts phases
    to multiples of ``2 pi / q``. ``tie`` couples ``beta`` to ``alpha``:
    ``"conjugate"`` sets ``beta = -alpha`` and ``"equal"`` sets
    ``beta = alpha``.
    """

    target: str = "2u"
    max_iters: int = 200_000
    restarts: int = 1
    chi_tol: float = 1e-12
    step: float = math.pi / 8
    decay: float = 0.95
    batch: int = 64
    floor: float = 1e-7
    seed: int = 0
    frozen: tuple = None
    lattice: int = None
    tie: str = None
    polish: bool = True
    stagnation: int = 500
    stagnation_tol: float = 1e-14
    cert_tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}; expected one of {TARGETS}")
        if not self.chi_tol > 0:
            raise ValueError("chi_tol must be positive")
        if int(self.max_iters) < 1 or int(self.restarts) < 1:
            raise ValueError("max_iters and restarts must be >= 1")
        if self.tie not in TIES:
            raise ValueError(f"tie must be one of {TIES}")
        if self.lattice is not None and int(self.lattice) < 2:
            raise ValueError("lattice order must be >= 2")
        if not (0 < self.decay <= 1 and self.step > 0 and self.floor > 0 and self.batch >= 1):
            raise ValueError("invalid step schedule")
        if self.frozen is not None:
            object.__setattr__(self, "frozen", tuple(bool(f) for f in self.frozen))


@dataclass
class SearchResult:
    matrix: np.ndarray
    objective: float
    iters: int
    converged: bool
    seed: int
    restart: int = 0
    alpha: np.ndarray = field(default=None, repr=False)
    beta: np.ndarray = field(default=None, repr=False)
    total_iters: int = 0

    def to_json(self, matrix_file=None):
        return {
            "converged": bool(self.converged),
            "chi": float(self.objective),
            "iters": int(self.iters),
            "seed": int(self.seed),
            "matrix_file": matrix_file,
        }


def restart_rng(seed, restart):
    """Independent stream for restart ``restart`` of master ``seed``."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(restart)]))


def _resolve_seed(seed):
    if seed is None:
        return int(np.random.SeedSequence().entropy % (2**63))
    return int(seed)


# phase walk


class _Dressing:
    """Maps the free walk coordinates to ``(alpha, beta)`` and the objective."""

    def __init__(self, X, d, cfg):
        self.X, self.d, self.cfg = X, d, cfg
        n = X.shape[0]
        self.n = n
        self.size = n if cfg.tie else 2 * n
        frozen = np.zeros(self.size, bool) if cfg.frozen is None else np.asarray(cfg.frozen, bool)
        if frozen.shape != (self.size,):
            raise ShapeMismatch(f"frozen mask needs {self.size} entries")
        self.free = np.flatnonzero(~frozen)

    def split(self, p):
        if self.cfg.tie == "conjugate":
            return p, -p
        if self.cfg.tie == "equal":
            return p, p
        return p[: self.n], p[self.n :]

    def matrix(self, p):
        return dress(self.X, *self.split(p))

    def value(self, p):
        return float(sum(np.vdot(b, b).real for b in objective_residuals(self.matrix(p), self.d, self.cfg.target)))

    def residual(self, p):
        return np.concatenate([np.concatenate([b.real.ravel(), b.imag.ravel()]) for b in objective_residuals(self.matrix(p), self.d, self.cfg.target)])


def _polish(dz, p):
    free = dz.free
    if free.size == 0:
        return p

    def fun(x):
        q = p.copy()
        q[free] = x
        return dz.residual(q)

    sol = least_squares(fun, p[free], method="trf", xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=50 * free.size)
    q = p.copy()
    q[free] = sol.x
    return q


def _walk_once(dz, cfg, rng, p, budget):
    cur = dz.value(p)
    step = cfg.step
    rejected = 0
    polished = False
    polish_start = math.sqrt(cfg.chi_tol)
    lattice_step = None if cfg.lattice is None else 2 * math.pi / int(cfg.lattice)
    free = dz.free
    it = 0
    while it < budget and cur > cfg.chi_tol and free.size:
        if cfg.polish and lattice_step is None and not polished and cur <= polish_start:
            polished = True
            q = _polish(dz, p)
            v = dz.value(q)
            if v < cur:
                p, cur = q, v
            continue
        it += 1
        j = free[rng.integers(free.size)]
        if lattice_step is None:
            delta = rng.uniform(-step, step)
        else:
            delta = lattice_step * rng.integers(1, int(cfg.lattice))
        trial = p.copy()
        trial[j] += delta
        v = dz.value(trial)
        if v < cur:
            p, cur = trial, v
            rejected = 0
        else:
            rejected += 1
            if rejected % cfg.batch == 0:
                step = max(step * cfg.decay, cfg.floor)
    if cfg.polish and lattice_step is None and cur <= polish_start:
        q = _polish(dz, p)
        v = dz.value(q)
        if v < cur:
            p, cur = q, v
    return p, cur, it


def phase_walk(X, d, cfg=None, seed=None):
    """Greedy random walk over the phases of ``D_L(alpha) X D_R(beta)``.

    One unfrozen phase moves per step by a uniform amount in ``[-s, s]``; the
    move is kept only if the objective strictly decreases. ``s`` starts at
    ``cfg.step`` and shrinks by ``cfg.decay`` after every ``cfg.batch``
    consecutive rejections, down to ``cfg.floor``. Restart 0 starts from the
    undressed matrix, later restarts from random phases. Once the objective
    drops below ``sqrt(chi_tol)`` a least-squares polish sharpens the result.
    """
    cfg = cfg or SearchConfig()
    X = check_bipartite(X, d)
    seed = _resolve_seed(cfg.seed if seed is None else seed)
    dz = _Dressing(X, d, cfg)
    best = None
    total = 0
    for r in range(cfg.restarts):
        rng = restart_rng(seed, r)
        p = np.zeros(dz.size)
        if r > 0:
            start = rng.uniform(0, 2 * math.pi, dz.size)
            if cfg.lattice is not None:
                start = np.round(start / (2 * math.pi / cfg.lattice)) * (2 * math.pi / cfg.lattice)
            p[dz.free] = start[dz.free]
        p, cur, it = _walk_once(dz, cfg, rng, p, int(cfg.max_iters))
        total += it
        if best is None or cur < best[1]:
            best = (p, cur, it, r)
        if cur <= cfg.chi_tol:
            break
    p, cur, it, r = best
    alpha, beta = (np.array(v, float) for v in dz.split(p))
    return SearchResult(
        matrix=dress(X, alpha, beta),
        objective=cur,
        iters=it,
        converged=cur <= cfg.chi_tol,
        seed=seed,
        restart=r,
        alpha=alpha,
        beta=beta,
        total_iters=total,
    )


# Sinkhorn-type iteration


def sinkhorn_step(X, d, tol=DEFAULT_TOL):
    """Unimodular normalisation, nearest unitary, partial transpose, reshuffle."""
    X = check_bipartite(X, d)
    mod = np.abs(X)
    if mod.min() < tol:
        raise ZeroEntry("iterate has a vanishing entry")
    U = polar_unitary(X / mod, tol)
    return reshuffle(partial_transpose(U, d), d)


def _deficit(A, n):
    # 1 - S for the Gram matrix A, as the squared norm of its traceless part
    tr = A.trace().real
    A[np.diag_indices(n)] -= tr / n
    return np.vdot(A, A).real * n / ((n - 1) * tr * tr)


def _chi_fast(T, d):
    # chi without validation, for the inner loop
    n = d * d
    t = T.reshape(d, d, d, d)
    total = 0.0
    for Y in (T, t.transpose(0, 2, 1, 3).reshape(n, n), t.transpose(0, 3, 2, 1).reshape(n, n)):
        total += _deficit(Y @ Y.conj().T, n)
    return float(total)


def _certified(T, d, tol):
    n = T.shape[0]
    return (
        is_unimodular(T, tol)
        and is_unitary(T, n, tol)
        and is_unitary(reshuffle(T, d), n, tol)
        and is_unitary(partial_transpose(T, d), n, tol)
    )


def _sinkhorn_once(n, d, cfg, rng):
    X = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    best = math.inf
    best_T = X / np.abs(X)
    last_gain = 0
    it = 0
    for it in range(int(cfg.max_iters)):
        mod = np.abs(X)
        if mod.min() < DEFAULT_TOL:
            return best_T, best, it, False
        T = X / mod
        c = _chi_fast(T, d)
        if c < best:
            best_T = T
        if c < best - cfg.stagnation_tol:
            last_gain = it
        best = min(best, c)
        if c <= cfg.chi_tol:
            if _certified(T, d, cfg.cert_tol):
                return T, c, it, True
        elif it - last_gain > cfg.stagnation:
            return best_T, best, it, False
        W, sv, Vh = np.linalg.svd(T)
        if sv[-1] < DEFAULT_TOL:
            return best_T, best, it, False
        # partial transpose then reshuffle in one leg permutation
        X = (W @ Vh).reshape(d, d, d, d).transpose(0, 3, 2, 1).transpose(0, 2, 1, 3).reshape(n, n)
    return best_T, best, it, False


def sinkhorn_search(n, cfg=None, seed=None):
    """Iterate :func:`sinkhorn_step` from complex Gaussian seeds.

    A restart converges once the entrywise-normalised iterate has
    ``chi <= chi_tol`` and it, its reshuffle and its partial transpose are
    unitary at scale ``n`` within ``cert_tol``. Restarts follow on vanishing
    entries, rank deficiency or stagnation (no ``chi`` gain of
    ``stagnation_tol`` in ``stagnation`` steps). The first converged restart
    wins, otherwise the lowest ``chi``.
    """
    cfg = cfg or SearchConfig(max_iters=20_000, restarts=10)
    d = infer_local_dim(int(n))
    if d < 2:
        raise ShapeMismatch("order must be d^2 with d >= 2")
    seed = _resolve_seed(cfg.seed if seed is None else seed)
    best = None
    total = 0
    for r in range(cfg.restarts):
        T, c, it, ok = _sinkhorn_once(n, d, cfg, restart_rng(seed, r))
        total += it
        if best is None or c < best[1]:
            best = (T, c, it, r, ok)
        if ok:
            best = (T, c, it, r, ok)
            break
    T, c, it, r, ok = best
    return SearchResult(matrix=T, objective=c, iters=it, converged=ok, seed=seed, restart=r, total_iters=total)


def with_overrides(cfg, **kwargs):
    return replace(cfg or SearchConfig(), **{k: v for k, v in kwargs.items() if v is not None})


def random_dressing(X, rng):
    """``X`` multiplied by random unimodular diagonals on both sides."""
    X = check_matrix(X)
    n = X.shape[0]
    return dress(X, rng.uniform(0, 2 * math.pi, n), rng.uniform(0, 2 * math.pi, n))
