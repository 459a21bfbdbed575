"""End-to-end construct/verify pipelines and result persistence.

Everything is deterministic given the config: the single master seed fans
out to keyed streams, output files are sorted, and JSON is dumped with
sorted keys, so repeated runs are byte-identical.
"""
from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass, field, asdict
from typing import Optional, Tuple

from .generate import generate
from .graph import EdgeSet, Graph, GraphFormatError, load_graph
from .hopset import Instrumentation, hopset_unweighted, hopset_weighted
from .parallel import phopset
from .params import MODE_PRACTICAL, Params, derive_params
from .verify import VerificationReport, check_hopset


class ExperimentError(RuntimeError):
    """Structured pipeline failure; message says which stage failed."""


@dataclass
class ExperimentConfig:
    # graph source: either a file or a generator spec
    graph_path: Optional[str] = None
    family: str = "random-gnm"
    n: int = 64
    m: Optional[int] = None
    max_weight: int = 1
    seed: int = 0
    # params
    mode: str = MODE_PRACTICAL
    epsilon: float = 0.0
    k: int = 2
    lam: int = 1
    overrides: dict = field(default_factory=dict)
    # algorithm: unweighted | weighted | parallel | None (verify-only)
    algorithm: Optional[str] = "unweighted"
    delta: float = 0.05
    beta: Optional[float] = None
    sweeps: Optional[int] = None
    scale_range: Optional[Tuple[int, int]] = None
    # verification
    verify: Optional[str] = "all-pairs"
    verify_beta: Optional[int] = None
    ratio_bound: Optional[float] = None
    hopset_path: Optional[str] = None   # input for verify-only mode
    # outputs
    out: Optional[str] = None
    report_path: Optional[str] = None
    csv_path: Optional[str] = None
    trace: bool = False

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = {f for f in cls.__dataclass_fields__}  # type: ignore[attr-defined]
        unknown = set(data) - known
        if unknown:
            raise ExperimentError(f"config: unknown keys {sorted(unknown)}")
        cfg = cls(**data)
        if cfg.scale_range is not None:
            cfg.scale_range = tuple(cfg.scale_range)  # type: ignore[assignment]
        return cfg

    def to_dict(self) -> dict:
        d = asdict(self)
        if d.get("scale_range") is not None:
            d["scale_range"] = list(d["scale_range"])
        return d


def write_hopset(path: str, h: EdgeSet, sidecar: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for u, v, w in h.sorted_edges():
            fh.write(f"{u} {v} {w!r}\n")
    with open(path + ".json", "w", encoding="utf-8") as fh:
        fh.write(json.dumps(sidecar, sort_keys=True, indent=2))
        fh.write("\n")


def read_hopset(path: str) -> EdgeSet:
    out = EdgeSet()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise GraphFormatError(f"{path}:{lineno}: expected 'u v w'")
            out.add(int(parts[0]), int(parts[1]), float(parts[2]))
    return out


def _load_or_generate(cfg: ExperimentConfig) -> Graph:
    if cfg.graph_path:
        return load_graph(cfg.graph_path)
    return generate(cfg.family, cfg.n, cfg.m, cfg.max_weight, cfg.seed)


def _build(cfg: ExperimentConfig, g: Graph, params: Params,
           instr: Optional[Instrumentation]) -> EdgeSet:
    if cfg.algorithm == "unweighted":
        return hopset_unweighted(g, params, cfg.seed,
                                 scale_range=cfg.scale_range, instr=instr)
    if cfg.algorithm == "weighted":
        return hopset_weighted(g, params, cfg.seed,
                               scale_range=cfg.scale_range, instr=instr)
    if cfg.algorithm == "parallel":
        return phopset(g, params, cfg.delta, cfg.seed, beta=cfg.beta,
                       sweeps=cfg.sweeps, scale_range=cfg.scale_range,
                       instr=instr)
    raise ExperimentError(f"build: unknown algorithm {cfg.algorithm!r}")


def run_experiment(cfg: ExperimentConfig
                   ) -> Tuple[VerificationReport, int]:
    """Generate/load, construct, verify, persist.  Returns (report, code).

    Exit code 0 iff the verification found zero validity violations and
    the ratio bound was met.
    """
    try:
        g = _load_or_generate(cfg)
    except (OSError, ValueError) as exc:
        raise ExperimentError(f"graph: {exc}") from exc

    try:
        params = derive_params(g.n, cfg.epsilon, cfg.k, cfg.lam,
                               cfg.mode, **cfg.overrides)
    except ValueError as exc:
        raise ExperimentError(f"params: {exc}") from exc

    instr = Instrumentation(record_frames=cfg.trace)
    t0 = time.perf_counter()
    if cfg.algorithm:
        h = _build(cfg, g, params, instr)
    elif cfg.hopset_path:
        try:
            h = read_hopset(cfg.hopset_path)
        except (OSError, GraphFormatError) as exc:
            raise ExperimentError(f"hopset: {exc}") from exc
    else:
        raise ExperimentError("config: need an algorithm or a hopset file")
    build_seconds = time.perf_counter() - t0

    if cfg.out and cfg.algorithm:
        sidecar = {
            "n": g.n, "params": params.to_dict(), "seed": cfg.seed,
            "scale_range": list(cfg.scale_range) if cfg.scale_range else None,
            "edge_count": len(h), "algorithm": cfg.algorithm,
        }
        if cfg.algorithm == "parallel":
            sidecar.update({"delta": cfg.delta, "beta": cfg.beta,
                            "sweeps": cfg.sweeps})
        write_hopset(cfg.out, h, sidecar)

    if cfg.verify:
        beta = cfg.verify_beta if cfg.verify_beta else max(1, g.n - 1)
        report = check_hopset(g, h, beta, cfg.epsilon,
                              pair_sample=cfg.verify, seed=cfg.seed,
                              ratio_bound=cfg.ratio_bound,
                              collect_pairs=bool(cfg.csv_path))
    else:
        report = VerificationReport(hopset_size=len(h))
    report.per_level_counters = instr.to_dict()

    if cfg.report_path:
        with open(cfg.report_path, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
            fh.write("\n")
    if cfg.csv_path:
        with open(cfg.csv_path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["source", "target", "true_dist", "beta_dist",
                             "ratio"])
            for row in report.pair_rows:
                writer.writerow([row[0], row[1], repr(row[2]), repr(row[3]),
                                 repr(row[4])])
    # stash build time where the CLI bench command can report it
    report.build_seconds = build_seconds  # type: ignore[attr-defined]
    return report, (0 if report.ok else 1)
