"""Sequential hopset construction: level assignment, the recursive
partition-and-shortcut routine, and the unweighted/weighted drivers.

Vertices whose level equals the current recursion depth act as pivots and
partition the frame via forward/backward label stamps; vertices whose
level is within L of the depth act as shortcutters and emit weighted
shortcut edges.  Fringe vertices around each pivot's search boundary are
replicated into a dedicated child frame.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from . import rng as rngmod
from .graph import EdgeSet, Graph, InducedSubgraph, induce
from .params import Params
from .search import (BACKWARD, FORWARD, bounded_search,
                     select_radius_with_searches)


@dataclass
class LevelAssignment:
    level: List[int]

    def __getitem__(self, v: int) -> int:
        return self.level[v]

    def __len__(self) -> int:
        return len(self.level)


def assign_levels(n: int, params: Params,
                  rng: random.Random) -> LevelAssignment:
    """Per-vertex first-success scan of levels 0..max_level.

    Level i is taken with probability min(1, lam*k^(i+1)*log(n)/n); the
    probability clamps to 1 at max_level so every vertex gets a level.
    """
    log_n = params.log_n
    probs = []
    for i in range(params.max_level + 1):
        p = params.lam * (params.k ** (i + 1)) * log_n / n
        probs.append(min(1.0, p))
    probs[params.max_level] = 1.0
    out = []
    for _ in range(n):
        lvl = params.max_level
        for i, p in enumerate(probs):
            if rng.random() < p:
                lvl = i
                break
        out.append(lvl)
    return LevelAssignment(out)


@dataclass
class RecursionFrame:
    sub: InducedSubgraph
    base: float          # the driver-level distance D
    level: int
    kind: str            # root | core | fringe


@dataclass
class LabelState:
    """Per-vertex (pivot, direction) labels and both-ways X flags."""
    labels: Dict[int, Set[Tuple[int, str]]]
    x_flag: Set[int]


@dataclass
class PivotTrace:
    pivot: int
    sigma: int
    rho: int
    fringe_size: int
    fringe: List[int]
    descendants: List[int]
    ancestors: List[int]


@dataclass
class FrameTrace:
    level: int
    kind: str
    d_r: float
    vertices: List[int]
    pivots: List[PivotTrace] = field(default_factory=list)
    x_vertices: List[int] = field(default_factory=list)
    groups: List[List[int]] = field(default_factory=list)
    shortcutters: List[int] = field(default_factory=list)


class Instrumentation:
    """Per-level counters plus optional full frame traces."""

    def __init__(self, record_frames: bool = False):
        self.record_frames = record_frames
        self.per_level: Dict[int, Dict] = {}
        self.frames: List[FrameTrace] = []

    def _level(self, r: int) -> Dict:
        if r not in self.per_level:
            self.per_level[r] = {"pivot_count": 0, "subproblem_count": 0,
                                 "max_related_set": 0, "fringe_sizes": []}
        return self.per_level[r]

    def to_dict(self) -> dict:
        return {str(r): v for r, v in sorted(self.per_level.items())}


SigmaRng = Callable[[int], random.Random]


def _emit_shortcuts(out: EdgeSet, root: Graph, sub: InducedSubgraph,
                    src_local: int, reached: Dict[int, float],
                    direction: str) -> None:
    """Add shortcut edges for a shortcutter's reach set.

    Reach sets come from subgraph searches; weights are repriced against
    the root graph so every emitted weight is the exact root distance.
    Self-shortcuts and edges duplicating an existing root edge at equal
    weight are suppressed.
    """
    src_g = sub.to_global(src_local)
    if sub.is_full:
        dist_g = {sub.to_global(v): d for v, d in reached.items()}
    else:
        maxd = max(reached.values(), default=0.0)
        res = bounded_search(root, src_g, maxd, direction)
        dist_g = {sub.to_global(v): res.reached[sub.to_global(v)]
                  for v in reached}
    for v_g, d in dist_g.items():
        if v_g == src_g:
            continue
        if direction == FORWARD:
            u, v = src_g, v_g
        else:
            u, v = v_g, src_g
        if root.edge_weight(u, v) == d:
            continue
        out.add(u, v, d)


def hs_recurse(frame: RecursionFrame, levels: LevelAssignment,
               params: Params, sigma_rng: SigmaRng, out: EdgeSet,
               instr: Optional[Instrumentation] = None) -> None:
    sub = frame.sub
    g = sub.graph
    r = frame.level
    if g.n == 0:
        return
    d_r = frame.base / ((params.lam ** r) * (params.k ** (r / 2.0)))
    if d_r <= 0 or d_r < g.min_positive_weight:
        return  # searches could only creep along zero-weight edges

    trace: Optional[FrameTrace] = None
    if instr is not None:
        lvl = instr._level(r)
        lvl["subproblem_count"] += 1
        if instr.record_frames:
            trace = FrameTrace(level=r, kind=frame.kind, d_r=d_r,
                               vertices=list(sub.global_ids))
            instr.frames.append(trace)

    root = sub.parent
    pivots = [v for v in range(g.n) if levels[sub.to_global(v)] == r]
    state = LabelState(labels={v: set() for v in range(g.n)}, x_flag=set())
    labels, x_flag = state.labels, state.x_flag
    fringe_sets: List[Set[int]] = []

    for p in pivots:
        p_g = sub.to_global(p)
        choice, fwd, bwd = select_radius_with_searches(
            g, p, d_r, params, sigma_rng(p_g))
        rho = choice.rho
        radius = rho * d_r
        des = {v for v, d in fwd.reached.items() if d <= radius}
        anc = {v for v, d in bwd.reached.items() if d <= radius}
        for v in des:
            labels[v].add((p_g, "D"))
        for v in anc:
            labels[v].add((p_g, "A"))
        x_flag.update(des & anc)
        dmin: Dict[int, float] = dict(fwd.reached)
        for v, dv in bwd.reached.items():
            if dv < dmin.get(v, math.inf):
                dmin[v] = dv
        fringe = {v for v, d in dmin.items()
                  if (rho - 1) * d_r < d <= (rho + 1) * d_r}
        if fringe:
            fringe_sets.append(fringe)
        if instr is not None:
            lvl = instr._level(r)
            lvl["pivot_count"] += 1
            lvl["max_related_set"] = max(lvl["max_related_set"], len(dmin))
            lvl["fringe_sizes"].append(choice.fringe_size)
        if trace is not None:
            trace.pivots.append(PivotTrace(
                pivot=p_g, sigma=choice.sigma, rho=rho,
                fringe_size=choice.fringe_size,
                fringe=sorted(sub.to_global(v) for v in fringe),
                descendants=sorted(sub.to_global(v) for v in des),
                ancestors=sorted(sub.to_global(v) for v in anc)))

    shortcut_radius = params.rho_max * d_r
    shortcutters = [v for v in range(g.n)
                    if levels[sub.to_global(v)] <= r + params.L]
    for s in shortcutters:
        fwd = bounded_search(g, s, shortcut_radius, FORWARD)
        _emit_shortcuts(out, root, sub, s, fwd.reached, FORWARD)
        bwd = bounded_search(g, s, shortcut_radius, BACKWARD)
        _emit_shortcuts(out, root, sub, s, bwd.reached, BACKWARD)
    if trace is not None:
        trace.shortcutters = sorted(sub.to_global(s) for s in shortcutters)
        trace.x_vertices = sorted(sub.to_global(v) for v in x_flag)

    # partition the X-free remainder by exact label set
    groups: Dict[Tuple, List[int]] = {}
    for v in range(g.n):
        if v in x_flag:
            continue
        key = tuple(sorted(labels[v]))
        groups.setdefault(key, []).append(v)
    ordered_groups = [groups[k] for k in sorted(groups)]
    if trace is not None:
        trace.groups = [sorted(sub.to_global(v) for v in grp)
                        for grp in ordered_groups]

    if r >= params.max_level:
        return
    for fringe in fringe_sets:
        child = induce(root, (sub.to_global(v) for v in fringe))
        hs_recurse(RecursionFrame(child, frame.base, r + 1, "fringe"),
                   levels, params, sigma_rng, out, instr)
    for grp in ordered_groups:
        child = induce(root, (sub.to_global(v) for v in grp))
        hs_recurse(RecursionFrame(child, frame.base, r + 1, "core"),
                   levels, params, sigma_rng, out, instr)


def default_scale_range(n: int, weighted: bool,
                        max_weight: float = 1.0) -> Tuple[int, int]:
    """Inclusive (lo, hi) distance-scale exponents for the drivers."""
    log_n = math.log2(n)
    if weighted:
        return (-1, math.ceil(math.log2(n * max(max_weight, 1.0))))
    return (math.ceil(log_n / 2.0), math.ceil(log_n))


def _run_scales(g: Graph, params: Params, seed: int,
                scales: Sequence[int],
                instr: Optional[Instrumentation]) -> EdgeSet:
    out = EdgeSet()
    full = induce(g, range(g.n))
    for rep in range(params.repetitions):
        for j in scales:
            levels = assign_levels(
                g.n, params, rngmod.stream(seed, "level", rep, j))
            radius = 2.0 ** (j + 1)
            for v in range(g.n):
                if levels[v] <= params.L:
                    fwd = bounded_search(g, v, radius, FORWARD)
                    _emit_shortcuts(out, g, full, v, fwd.reached, FORWARD)
                    bwd = bounded_search(g, v, radius, BACKWARD)
                    _emit_shortcuts(out, g, full, v, bwd.reached, BACKWARD)
            base = (2.0 ** j) * (params.k ** (-params.c))
            if base <= 0:
                continue

            def sigma_rng(gid: int, _rep=rep, _j=j) -> random.Random:
                return rngmod.stream(seed, "sigma", _rep, _j, gid)

            hs_recurse(RecursionFrame(full, base, 0, "root"),
                       levels, params, sigma_rng, out, instr)
    return out


def hopset_unweighted(g: Graph, params: Params, seed: int = 0, *,
                      scale_range: Optional[Tuple[int, int]] = None,
                      instr: Optional[Instrumentation] = None) -> EdgeSet:
    """Hopset for a unit-weight directed graph."""
    for _, _, w in g.iter_edges():
        if w != 1.0:
            raise ValueError("unweighted driver requires all weights == 1")
    lo, hi = scale_range or default_scale_range(g.n, weighted=False)
    return _run_scales(g, params, seed, range(lo, hi + 1), instr)


def hopset_weighted(g: Graph, params: Params, seed: int = 0, *,
                    scale_range: Optional[Tuple[int, int]] = None,
                    instr: Optional[Instrumentation] = None) -> EdgeSet:
    """Hopset for a nonnegative-weight directed graph (normalized)."""
    lo, hi = scale_range or default_scale_range(
        g.n, weighted=True, max_weight=g.max_weight)
    return _run_scales(g, params, seed, range(lo, hi + 1), instr)
