import json

import numpy as np
import pytest

from multiunitary.cli import main
from multiunitary.io import parse_matrix


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_and_verify(tmp_path, capsys):
    code, out, _ = run(capsys, ["construct", "p9"])
    assert code == 0
    f = tmp_path / "p9.txt"
    f.write_text(out)
    code, out, _ = run(capsys, ["verify", "--file", str(f), "--d", "3", "--json"])
    assert code == 0
    assert json.loads(out)["triple"] == [1.0, 1.0, 1.0]


def test_karlsson_pipe(capsys, monkeypatch):
    _, out, _ = run(capsys, ["construct", "karlsson", "--zeta", "0.3+0.1j"])
    code, _, _ = run(capsys, ["verify", "--d", "3", "--target", "chm"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0


def test_verify_negative(tmp_path, capsys):
    f = tmp_path / "f9.txt"
    run(capsys, ["construct", "fourier", "--params", "9"])
    _, out, _ = run(capsys, ["construct", "fourier", "--params", "9"])
    f.write_text(out)
    code, _, _ = run(capsys, ["verify", "--file", str(f), "--d", "3", "--target", "2u"])
    assert code == 1


def test_verify_k_unitary(tmp_path, capsys):
    _, out, _ = run(capsys, ["construct", "h8"])
    f = tmp_path / "h8.txt"
    f.write_text(out)
    code, out, _ = run(capsys, ["verify", "--file", str(f), "--d", "2", "--target", "ku", "--k", "3", "--json"])
    assert code == 0 and json.loads(out)["ok"] is True


def test_construct_log(capsys):
    code, out, _ = run(capsys, ["construct", "b9_0", "--log"])
    assert code == 0 and out.startswith("BH 9 6")
    code, _, err = run(capsys, ["construct", "f4", "--params", "0.3", "--log"])
    assert code == 2 and "error" in err


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, ["construct", "karlsson", "--zeta", "1"])[0] == 2
    assert run(capsys, ["construct", "f4"])[0] == 2
    assert run(capsys, ["bogus"])[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n1 1\n1 q\n")
    assert run(capsys, ["verify", "--file", str(bad)])[0] == 2


def test_search_sinkhorn_deterministic(capsys, tmp_path):
    argv = ["search", "sinkhorn", "--n", "9", "--target", "2u", "--seeds", "3", "--seed", "42"]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert out1 == out2 and code1 == code2 == 0
    rows = [json.loads(line) for line in out1.splitlines()]
    assert [r["seed"] for r in rows] == [42, 43, 44]


def test_search_writes_matrix(capsys, tmp_path):
    code, out, _ = run(capsys, ["search", "sinkhorn", "--n", "9", "--seed", "42", "--out-dir", str(tmp_path)])
    row = json.loads(out)
    X = parse_matrix(open(row["matrix_file"]).read())
    assert X.shape == (9, 9) and np.allclose(np.abs(X), 1)


def test_search_auto_seed_recorded(capsys):
    code, out, _ = run(capsys, ["search", "phasewalk", "--name", "b9_selfdual", "--lattice", "3", "--max-iters", "5000"])
    assert isinstance(json.loads(out)["seed"], int)


def test_search_phasewalk_freeze(capsys):
    code, out, _ = run(capsys, ["search", "phasewalk", "--name", "b9_0", "--seed", "0", "--max-iters", "50", "--freeze", "1" * 18])
    assert code == 1 and json.loads(out)["converged"] is False
    assert run(capsys, ["search", "phasewalk", "--name", "b9_0", "--freeze", "12"])[0] == 2


def test_scan(capsys, tmp_path):
    _, out, _ = run(capsys, ["construct", "b16_1", "--log"])
    f = tmp_path / "b16.txt"
    f.write_text(out)
    strat = tmp_path / "s.json"
    strat.write_text(json.dumps({"permutation": "p16"}))
    code, out, _ = run(capsys, ["scan", "--file", str(f), "--d", "4", "--strategy", str(strat)])
    assert code == 0 and json.loads(out)["hit"] is True
    code, out, _ = run(capsys, ["scan", "--file", str(f), "--d", "4", "--strategy", "{}"])
    assert code == 1
