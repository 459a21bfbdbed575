"""Command-line surface: gen, build, verify, bench, trace."""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from .experiment import (ExperimentConfig, ExperimentError, run_experiment)
from .generate import FAMILIES, generate
from .graph import save_graph
from .params import MODE_PAPER, MODE_PRACTICAL


def _load_config_file(path: str) -> dict:
    """JSON config, or simple key=value lines (values parsed as JSON when
    possible)."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return json.loads(text)
    data = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        try:
            data[key] = json.loads(value)
        except json.JSONDecodeError:
            data[key] = value
    return data


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON or key=value config file")
    p.add_argument("--graph", dest="graph_path", help="edge-list input file")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--max-weight", type=int, dest="max_weight")
    p.add_argument("--seed", type=int)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", type=int, dest="lam")
    p.add_argument("--mode", choices=[MODE_PAPER, MODE_PRACTICAL])
    p.add_argument("--algorithm",
                   choices=["unweighted", "weighted", "parallel"])
    p.add_argument("--repetitions", type=int)
    p.add_argument("--shortcut-levels", type=int, dest="L",
                   help="practical-mode L (shortcutter level margin)")
    p.add_argument("--scale-range", dest="scale_range",
                   help="inclusive 'lo:hi' distance-scale exponents")
    p.add_argument("--delta", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--sweeps", type=int)
    p.add_argument("--out")
    p.add_argument("--report", dest="report_path")
    p.add_argument("--csv", dest="csv_path")
    p.add_argument("--verify", dest="verify",
                   help="'all-pairs' or 'sampled:<s>'")
    p.add_argument("--verify-beta", type=int, dest="verify_beta")
    p.add_argument("--ratio-bound", type=float, dest="ratio_bound")


def _config_from_args(args: argparse.Namespace,
                      defaults: Optional[dict] = None) -> ExperimentConfig:
    data = dict(defaults or {})
    if getattr(args, "config", None):
        data.update(_load_config_file(args.config))
    override_keys = ["graph_path", "family", "n", "m", "max_weight", "seed",
                     "epsilon", "k", "lam", "mode", "algorithm", "delta",
                     "beta", "sweeps", "out", "report_path", "csv_path",
                     "verify", "verify_beta", "ratio_bound"]
    for key in override_keys:
        value = getattr(args, key, None)
        if value is not None:
            data[key] = value
    overrides = dict(data.pop("overrides", {}))
    for key in ("repetitions", "L"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    if overrides:
        data["overrides"] = overrides
    sr = getattr(args, "scale_range", None)
    if sr is not None:
        if isinstance(sr, str):
            lo, _, hi = sr.partition(":")
            sr = (int(lo), int(hi))
        data["scale_range"] = tuple(sr)
    return ExperimentConfig.from_dict(data)


def cmd_gen(args: argparse.Namespace) -> int:
    g = generate(args.family or "random-gnm", args.n or 64, args.m,
                 args.max_weight or 1, args.seed or 0)
    if args.out:
        save_graph(g, args.out)
    else:
        sys.stdout.write(f"{g.n} {g.m}\n")
        for u, v, w in sorted(g.iter_edges()):
            sys.stdout.write(f"{u} {v} {w!r}\n")
    return 0


def cmd_build(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    if cfg.algorithm is None:
        cfg.algorithm = "unweighted"
    report, code = run_experiment(cfg)
    print(f"hopset edges: {report.hopset_size}  "
          f"max ratio: {report.max_ratio:.6f}  "
          f"violations: {len(report.validity_violations)}")
    return code


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args, defaults={"algorithm": None,
                                            "verify": "all-pairs"})
    cfg.algorithm = None
    cfg.hopset_path = args.hopset
    report, code = run_experiment(cfg)
    print(f"pairs checked: {report.pairs_checked}  "
          f"max ratio: {report.max_ratio:.6f}  "
          f"validity violations: {len(report.validity_violations)}  "
          f"ratio violations: {len(report.ratio_violations)}")
    return code


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = []
    for n in sizes:
        cfg = _config_from_args(args)
        cfg.n = n
        t0 = time.perf_counter()
        report, _ = run_experiment(cfg)
        elapsed = time.perf_counter() - t0
        rows.append((n, report.hopset_size, report.max_ratio, elapsed))
        print(f"n={n} size={report.hopset_size} "
              f"max_ratio={report.max_ratio:.6f} seconds={elapsed:.2f}")
    if args.out_csv:
        with open(args.out_csv, "w", encoding="utf-8") as fh:
            fh.write("n,hopset_size,max_ratio,seconds\n")
            for n, size, ratio, secs in rows:
                fh.write(f"{n},{size},{ratio!r},{secs:.4f}\n")
    return 0


def cmd_trace(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    cfg.trace = True
    if cfg.algorithm is None:
        cfg.algorithm = "unweighted"
    report, code = run_experiment(cfg)
    print(json.dumps(report.per_level_counters, sort_keys=True, indent=2))
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirhopset",
        description="Construct and verify hopsets for directed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a benchmark graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--max-weight", type=int, dest="max_weight")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("build", help="construct a hopset and verify it")
    _add_common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="verify an existing hopset file")
    _add_common(p)
    p.add_argument("--hopset", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run the pipeline over several sizes")
    _add_common(p)
    p.add_argument("--sizes", required=True,
                   help="comma-separated n values")
    p.add_argument("--out-csv", dest="out_csv")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("trace", help="build with per-level instrumentation")
    _add_common(p)
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ExperimentError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
