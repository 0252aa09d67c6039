import json

import pytest

from multiunitary.butson import LogMatrix
from multiunitary.catalog import log_form
from multiunitary.scan import ScanStrategy, probe, record_seed, scan


def test_strategy_json_roundtrip():
    s = ScanStrategy(permutation="p16", dressing="walk", max_iters=10)
    assert ScanStrategy.from_json(s.to_json()) == s
    with pytest.raises(ValueError):
        ScanStrategy.from_json(json.dumps({"colour": "red"}))
    with pytest.raises(ValueError):
        ScanStrategy(permutation="p25")


def test_b16_with_p16_hits():
    (row,) = scan([log_form("b16_1")], 4, ScanStrategy(permutation="p16"))
    assert row["hit"] and row["index"] == 1 and row["dressing"] == {}


def test_b16_alone_misses():
    (row,) = scan([log_form("b16_1")], 4, ScanStrategy())
    assert not row["hit"]


def test_selfdual_conjugate_dressing_hits():
    strat = ScanStrategy(dressing="walk", tie="conjugate", restarts=5, max_iters=50_000)
    (row,) = scan([log_form("b9_selfdual")], 3, strat)
    assert row["hit"]
    assert len(row["dressing"]["alpha"]) == 9


def test_isolated_misses():
    strat = ScanStrategy(dressing="walk", max_iters=10_000, restarts=2)
    (row,) = scan([log_form("b9_0")], 3, strat)
    assert not row["hit"]


def test_bad_record_recorded():
    recs = [LogMatrix(2, [[0, 0], [0, 1]]), log_form("b16_1")]
    rows = scan(recs, 4, ScanStrategy(permutation="p16"))
    assert "error" in rows[0] and not rows[0]["hit"]
    assert rows[1]["hit"]


def test_results_independent_of_processing_order():
    recs = [log_form("b9_selfdual"), log_form("c9"), log_form("b9_0")]
    strat = ScanStrategy(dressing="walk", max_iters=2000, seed=3)
    rows = scan(recs, 3, strat)
    # each row equals probing its record in isolation, in any order
    for k in (3, 1, 2):
        assert probe(recs[k - 1], k, 3, strat) == rows[k - 1]
    assert scan(recs, 3, strat, jobs=2) == rows
    assert record_seed(3, 1) != record_seed(3, 2)
