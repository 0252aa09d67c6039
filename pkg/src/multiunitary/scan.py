"""Bulk probing of Butson records with a declarative strategy."""

import json
import math
from dataclasses import asdict, dataclass

import numpy as np
from joblib import Parallel, delayed

from .butson import LogMatrix, to_complex
from .catalog import named_matrix
from .exceptions import HadamardError, ShapeMismatch
from .measures import TARGETS, target_value
from .search import SearchConfig, phase_walk
from .validation import check_bipartite

PERMUTATIONS = (None, "p9", "p16")
DRESSINGS = ("none", "walk")


@dataclass(frozen=True)
class ScanStrategy:
    """What to do with each record before testing the target predicate.

    ``permutation`` right-multiplies by a named 2-unitary permutation;
    ``dressing = "walk"`` runs a phase walk with the given budget.
    """

    target: str = "2u"
    permutation: str = None
    dressing: str = "none"
    max_iters: int = 100_000
    restarts: int = 1
    lattice: int = None
    tie: str = None
    polish: bool = True
    chi_tol: float = 1e-12
    seed: int = 0

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}")
        if self.permutation not in PERMUTATIONS:
            raise ValueError(f"permutation must be one of {PERMUTATIONS}")
        if self.dressing not in DRESSINGS:
            raise ValueError(f"dressing must be one of {DRESSINGS}")

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown strategy keys: {sorted(unknown)}")
        return cls(**data)

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=True)

    def search_config(self):
        return SearchConfig(
            target=self.target,
            max_iters=self.max_iters,
            restarts=self.restarts,
            lattice=self.lattice,
            tie=self.tie,
            polish=self.polish,
            chi_tol=self.chi_tol,
            seed=self.seed,
        )


def record_seed(seed, index):
    """Seed for record ``index``, a pure function of the master seed."""
    return int(np.random.SeedSequence([int(seed), int(index)]).generate_state(1, np.uint64)[0] >> 1)


def probe(record, index, d, strategy):
    """Report for one record; failures become ``{"hit": false, "error": ...}``."""
    try:
        X = to_complex(record) if isinstance(record, LogMatrix) else np.asarray(record, dtype=complex)
        X = check_bipartite(X, d)
        if strategy.permutation is not None:
            P = named_matrix(strategy.permutation)
            if P.shape != X.shape:
                raise ShapeMismatch(f"{strategy.permutation} does not match order {X.shape[0]}")
            X = X @ P
        dressing = {}
        if strategy.dressing == "walk":
            res = phase_walk(X, d, strategy.search_config(), seed=record_seed(strategy.seed, index))
            value = res.objective
            dressing = {
                "alpha": [float(a % (2 * math.pi)) for a in res.alpha],
                "beta": [float(b % (2 * math.pi)) for b in res.beta],
            }
        else:
            value = target_value(X, d, strategy.target)
        return {"index": index, "hit": bool(value <= strategy.chi_tol), "chi": float(value), "dressing": dressing}
    except (HadamardError, ValueError) as exc:
        return {"index": index, "hit": False, "chi": None, "dressing": {}, "error": f"{type(exc).__name__}: {exc}"}


def scan(records, d, strategy, jobs=1):
    """Probe every record (1-based indices); output order follows the input."""
    tasks = (delayed(probe)(rec, k, d, strategy) for k, rec in enumerate(records, start=1))
    return Parallel(n_jobs=jobs)(tasks)
