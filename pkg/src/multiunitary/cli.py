"""Command line: construct, verify, search and scan."""

import argparse
import json
import os
import sys

from joblib import Parallel, delayed

from . import catalog
from .butson import emit_log, iter_log
from .classify import classify, is_k_unitary
from .exceptions import HadamardError
from .io import emit_complex, load_matrix, read_text, save_matrix
from .rearrange import TensorShape
from .scan import ScanStrategy, scan
from .search import SearchConfig, _resolve_seed, phase_walk, sinkhorn_search
from .validation import infer_local_dim

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

VERIFY_TARGETS = {
    "chm": "chm",
    "dual": "r_dual",
    "gamma-dual": "gamma_dual",
    "self-dual": "self_r_dual",
    "self-gamma-dual": "self_gamma_dual",
    "2u": "two_unitary",
    "ku": None,
}


class UsageError(Exception):
    pass


def _emit(obj):
    print(json.dumps(obj))


def cmd_construct(args):
    params = list(args.params or [])
    if args.zeta is not None:
        z = complex(args.zeta.replace("i", "j"))
        params = [z.real, z.imag]
    name = args.name
    if name == "karlsson" and len(params) == 1:
        params = [params[0], 0.0]
    if args.log:
        L = catalog.log_form(name, params)
        if L is None:
            raise UsageError(f"{name!r} has no logarithmic form for these parameters")
        sys.stdout.write(emit_log(L))
    else:
        sys.stdout.write(emit_complex(catalog.named_matrix(name, params)))
    return EXIT_OK


def cmd_verify(args):
    X = load_matrix(args.file)
    n = X.shape[0]
    if args.target == "ku":
        k = args.k or 2
        d = args.d or int(round(n ** (1.0 / k)))
        shape = TensorShape(d, k)
        ok = is_k_unitary(X, shape, args.tol)
        report = {"n": n, "d": d, "k": k, "target": "ku", "ok": ok}
        if k == 2:
            report = {**classify(X, d, args.tol).to_json(), "k": k, "target": "ku", "ok": ok}
    else:
        d = args.d or infer_local_dim(n)
        report = classify(X, d, args.tol).to_json()
        ok = True
        if args.target is not None:
            ok = bool(report["flags"][VERIFY_TARGETS[args.target]])
            report = {**report, "target": args.target, "ok": ok}
    if args.json:
        _emit(report)
    else:
        line = f"n={report['n']} d={report['d']}"
        if "triple" in report:
            line += " S=({:.12g}, {:.12g}, {:.12g})".format(*report["triple"])
        print(line)
        for key, value in report.get("flags", {}).items():
            print(f"  {key}: {value}")
        if args.target is not None:
            print(f"{args.target}: {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _freeze_mask(text):
    if text is None:
        return None
    if set(text) - {"0", "1"}:
        raise UsageError("--freeze expects a string of 0/1 characters")
    return tuple(c == "1" for c in text)


def _sinkhorn_job(n, cfg, seed, out_dir):
    res = sinkhorn_search(n, cfg, seed=seed)
    path = None
    if out_dir:
        path = os.path.join(out_dir, f"sinkhorn_n{n}_seed{seed}.txt")
        save_matrix(path, res.matrix)
    return res.to_json(path)


def cmd_search(args):
    seed = _resolve_seed(args.seed)
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
    if args.method == "sinkhorn":
        if args.n is None:
            raise UsageError("sinkhorn search needs --n")
        cfg = SearchConfig(target="2u", max_iters=args.max_iters or 20_000, restarts=args.restarts or 10,
                           chi_tol=args.chi_tol, seed=seed)
        seeds = [seed + i for i in range(args.seeds)]
        rows = Parallel(n_jobs=args.jobs)(delayed(_sinkhorn_job)(args.n, cfg, s, args.out_dir) for s in seeds)
    else:
        if args.file:
            X = load_matrix(args.file)
        elif args.name:
            X = catalog.named_matrix(args.name, args.params or [])
        else:
            raise UsageError("phasewalk needs --file or --name")
        n = X.shape[0]
        if args.n is not None and args.n != n:
            raise UsageError(f"--n {args.n} disagrees with the input order {n}")
        d = infer_local_dim(n)
        cfg = SearchConfig(target=args.target, max_iters=args.max_iters or 200_000, restarts=args.restarts or 1,
                           chi_tol=args.chi_tol, seed=seed, frozen=_freeze_mask(args.freeze), lattice=args.lattice,
                           tie=args.tie)
        rows = []
        for i in range(args.seeds):
            res = phase_walk(X, d, cfg, seed=seed + i)
            path = None
            if args.out_dir:
                path = os.path.join(args.out_dir, f"phasewalk_n{n}_seed{seed + i}.txt")
                save_matrix(path, res.matrix)
            rows.append(res.to_json(path))
    for row in rows:
        _emit(row)
    return EXIT_OK if any(row["converged"] for row in rows) else EXIT_NEGATIVE


def cmd_scan(args):
    text = args.strategy
    if not text.lstrip().startswith("{"):
        text = read_text(text)
    strategy = ScanStrategy.from_json(text)
    if args.seed is not None:
        strategy = ScanStrategy.from_json(json.dumps({**json.loads(strategy.to_json()), "seed": args.seed}))
    records = list(iter_log(read_text(args.file).splitlines()))
    rows = scan(records, args.d, strategy, jobs=args.jobs)
    for row in rows:
        _emit(row)
    return EXIT_OK if any(row["hit"] for row in rows) else EXIT_NEGATIVE


def build_parser():
    p = argparse.ArgumentParser(prog="multiunitary", description="Complex Hadamard matrices with multi-unitary structure.")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("construct", help="print a catalog matrix")
    c.add_argument("name", choices=catalog.NAMES, metavar="NAME")
    c.add_argument("--params", type=float, nargs="*", help="family parameters (phases in turns)")
    c.add_argument("--zeta", help="complex parameter of the Karlsson family, e.g. 0.3+0.1j")
    fmt = c.add_mutually_exclusive_group()
    fmt.add_argument("--log", action="store_true", help="logarithmic Butson form")
    fmt.add_argument("--complex", action="store_true", help="complex text form (default)")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="classify a matrix")
    v.add_argument("--file", default="-")
    v.add_argument("--d", type=int)
    v.add_argument("--target", choices=tuple(VERIFY_TARGETS))
    v.add_argument("--k", type=int)
    v.add_argument("--tol", type=float, default=1e-10)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="numerical search")
    s.add_argument("method", choices=("sinkhorn", "phasewalk"))
    s.add_argument("--n", type=int)
    s.add_argument("--target", default="2u", choices=("2u", "r-dual", "gamma-dual", "self-r-dual", "self-gamma-dual"))
    s.add_argument("--seed", type=int)
    s.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds to run")
    s.add_argument("--max-iters", type=int)
    s.add_argument("--restarts", type=int)
    s.add_argument("--chi-tol", type=float, default=1e-12)
    s.add_argument("--freeze", help="0/1 string, one character per phase (alpha then beta)")
    s.add_argument("--lattice", type=int, help="restrict phases to multiples of 2 pi / q")
    s.add_argument("--tie", choices=("conjugate", "equal"))
    s.add_argument("--file", help="input matrix for phasewalk")
    s.add_argument("--name", choices=catalog.NAMES, metavar="NAME", help="catalog input for phasewalk")
    s.add_argument("--params", type=float, nargs="*")
    s.add_argument("--out-dir")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_search)

    sc = sub.add_parser("scan", help="probe every record of a Butson file")
    sc.add_argument("--file", required=True)
    sc.add_argument("--d", type=int, required=True)
    sc.add_argument("--strategy", required=True, help="JSON file or inline JSON object")
    sc.add_argument("--seed", type=int)
    sc.add_argument("--jobs", type=int, default=1)
    sc.set_defaults(func=cmd_scan)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, HadamardError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
