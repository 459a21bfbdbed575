"""Rounded, iterated hopset construction for the parallel contract.

Each distance scale quantizes the current working graph (original edges
plus previously injected hopset edges) to integer multiples of a unit,
runs bounded searches in quantized units, scales the returned edges back,
and min-merges them into the hopset; the hopset is injected into the
working graph between sweeps.  Searches within a frame are mutually
independent (read-only graph, keyed RNG), so a concurrent executor must
produce bit-identical output to this serial order.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from . import rng as rngmod
from .graph import EdgeSet, Graph, merge_min, induce
from .hopset import (Instrumentation, RecursionFrame, assign_levels,
                     hs_recurse, _emit_shortcuts)
from .params import MODE_PAPER, Params
from .search import BACKWARD, FORWARD, bounded_search


@dataclass(frozen=True)
class RoundingScheme:
    scale_index: int
    delta: float
    beta: float

    @property
    def unit(self) -> float:
        return self.delta * (2.0 ** (self.scale_index - 1)) / self.beta


@dataclass
class QuantizedGraph:
    base: Graph
    unit: float
    graph: Graph                      # integer weights, dropped edges absent
    integer_weights: Dict[Tuple[int, int], int]


def quantize(g: Graph, i: int, scheme: RoundingScheme) -> QuantizedGraph:
    """Round weights up to integer units; drop edges with w >= 2^(i+1).

    Zero-weight edges become one unit.
    """
    unit = scheme.unit
    if unit <= 0:
        raise ValueError("rounding unit must be > 0")
    cutoff = 2.0 ** (i + 1)
    intw: Dict[Tuple[int, int], int] = {}
    edges = []
    for u, v, w in g.iter_edges():
        if w >= cutoff:
            continue
        q = 1 if w == 0 else math.ceil(w / unit)
        intw[(u, v)] = q
        edges.append((u, v, float(q)))
    qg = Graph(g.n, edges, scale=g.scale)
    return QuantizedGraph(base=g, unit=unit, graph=qg, integer_weights=intw)


def derive_parallel_params(n: int, epsilon: float, k: int = 2,
                           lam: int = 8) -> Tuple[float, float, int, float]:
    """(delta, epsilon_inner, L, beta) from the literal formulas."""
    if epsilon <= 0:
        raise ValueError("epsilon must be > 0")
    log_n = math.log2(n)
    delta = epsilon / (8.0 * log_n)
    epsilon_inner = epsilon / (8.0 * log_n)
    L = math.ceil(17.0 - math.log(epsilon, k))
    beta = 6.0 * (lam ** math.log(n, k)) * math.sqrt(n) / log_n
    return delta, epsilon_inner, L, beta


def default_beta(params: Params) -> float:
    n = params.n
    return 6.0 * (params.lam ** math.log(n, params.k)) * math.sqrt(n) \
        / params.log_n


def phopset(g: Graph, params: Params, delta: float, seed: int = 0, *,
            beta: Optional[float] = None, sweeps: Optional[int] = None,
            scale_range: Optional[Tuple[int, int]] = None,
            instr: Optional[Instrumentation] = None) -> EdgeSet:
    """Rounded iterated hopset construction.

    Returns the accumulated hopset H; weights are quantized-and-scaled
    overestimates of true distances, with scaled weights below 1 floored
    to 0 (only zero-distance pairs can produce them after normalization).
    """
    if delta <= 0:
        raise ValueError("delta must be > 0")
    n = g.n
    if beta is None:
        beta = default_beta(params)
    if sweeps is None:
        sweeps = math.ceil(params.lam * params.log_n ** 2) \
            if params.mode == MODE_PAPER else params.repetitions
    if scale_range is None:
        hi = math.ceil(math.log2(n * n * max(g.max_weight, 1.0)))
        scales: Sequence[int] = range(-2, hi + 1)
    else:
        scales = range(scale_range[0], scale_range[1] + 1)

    working = EdgeSet({(u, v): w for u, v, w in g.iter_edges()})
    hopset = EdgeSet()
    shortcut_radius = 8.0 * (1.0 + delta) * beta / delta
    recurse_base = 4.0 * (1.0 + delta) * beta / (delta * (params.k ** params.c))

    for sweep in range(sweeps):
        cur = Graph(n, iter(working))
        for i in scales:
            scheme = RoundingScheme(scale_index=i, delta=delta, beta=beta)
            qg = quantize(cur, i, scheme)
            if qg.graph.m == 0:
                continue
            levels = assign_levels(
                n, params, rngmod.stream(seed, "plevel", sweep, i))
            staged = EdgeSet()
            full = induce(qg.graph, range(n))
            for v in range(n):
                if levels[v] <= params.L:
                    fwd = bounded_search(qg.graph, v, shortcut_radius, FORWARD)
                    _emit_shortcuts(staged, qg.graph, full, v,
                                    fwd.reached, FORWARD)
                    bwd = bounded_search(qg.graph, v, shortcut_radius,
                                         BACKWARD)
                    _emit_shortcuts(staged, qg.graph, full, v,
                                    bwd.reached, BACKWARD)

            def sigma_rng(gid: int, _s=sweep, _i=i) -> random.Random:
                return rngmod.stream(seed, "psigma", _s, _i, gid)

            hs_recurse(RecursionFrame(full, recurse_base, 0, "root"),
                       levels, params, sigma_rng, staged, instr)
            unit = scheme.unit
            for (u, v), wq in staged.entries.items():
                w = wq * unit
                if w < 1.0:
                    w = 0.0
                hopset.add(u, v, w)
        working = merge_min(working, hopset)
    return hopset
