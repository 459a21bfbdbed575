"""Distance-bounded searches and fringe-minimizing radius selection.

One binary-heap Dijkstra engine serves both unweighted and weighted
graphs; backward searches walk the stored reverse adjacency.
"""
from __future__ import annotations

import heapq
import math
import random
from bisect import bisect_right
from dataclasses import dataclass
from typing import Dict, Tuple

from .graph import Graph
from .params import Params

FORWARD = "forward"
BACKWARD = "backward"


@dataclass
class SearchResult:
    source: int
    bound: float
    direction: str
    reached: Dict[int, float]


@dataclass
class RadiusChoice:
    sigma: int
    rho: int
    fringe_size: int


def bounded_search(g: Graph, source: int, d: float,
                   direction: str = FORWARD) -> SearchResult:
    """Dijkstra from ``source`` truncated at distance ``d``.

    Never expands a vertex whose tentative distance exceeds d; reached
    distances are exact shortest-path distances within g.
    """
    if not (0 <= source < g.n):
        raise ValueError(f"invalid source {source}")
    if d < 0:
        raise ValueError("bound must be >= 0")
    adj = g.fwd if direction == FORWARD else g.rev
    dist: Dict[int, float] = {source: 0.0}
    heap = [(0.0, source)]
    while heap:
        du, u = heapq.heappop(heap)
        if du > dist[u]:
            continue
        for v, w in adj[u]:
            nd = du + w
            if nd <= d and nd < dist.get(v, math.inf):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return SearchResult(source=source, bound=d, direction=direction,
                        reached=dist)


def related_set(g: Graph, source: int, d: float
                ) -> Tuple[SearchResult, SearchResult]:
    """Forward and backward bounded searches; union of reach sets is R_d."""
    return (bounded_search(g, source, d, FORWARD),
            bounded_search(g, source, d, BACKWARD))


def _fringe_count(sorted_dmins, rho: int, base: float) -> int:
    # vertices with (rho-1)*base < dmin <= (rho+1)*base
    hi = bisect_right(sorted_dmins, (rho + 1) * base)
    lo = bisect_right(sorted_dmins, (rho - 1) * base)
    return hi - lo


def select_radius_with_searches(
        g: Graph, pivot: int, base_distance: float, params: Params,
        rng: random.Random
) -> Tuple[RadiusChoice, SearchResult, SearchResult]:
    """Pick the fringe-minimizing integer scalar in a random subinterval.

    Returns the choice plus the forward/backward searches out to
    (max candidate + 1) * base_distance so callers can reuse them for
    labels and fringe sets without re-searching.
    """
    if base_distance <= 0:
        raise ValueError("base distance must be > 0")
    sigma = rng.randint(1, params.interval_count)
    lo = params.rho_min + 1 + params.interval_width * (sigma - 1)
    hi = lo + params.interval_width
    candidates = range(math.ceil(lo), math.ceil(hi))
    max_rho = candidates[-1]
    bound = (max_rho + 1) * base_distance
    fwd = bounded_search(g, pivot, bound, FORWARD)
    bwd = bounded_search(g, pivot, bound, BACKWARD)
    dmin: Dict[int, float] = dict(fwd.reached)
    for v, dv in bwd.reached.items():
        if dv < dmin.get(v, math.inf):
            dmin[v] = dv
    sorted_dmins = sorted(dmin.values())
    best_rho = candidates[0]
    best_size = _fringe_count(sorted_dmins, best_rho, base_distance)
    for rho in candidates[1:]:
        size = _fringe_count(sorted_dmins, rho, base_distance)
        if size < best_size:
            best_rho, best_size = rho, size
    return (RadiusChoice(sigma=sigma, rho=best_rho, fringe_size=best_size),
            fwd, bwd)


def select_radius(g: Graph, pivot: int, base_distance: float, params: Params,
                  rng: random.Random) -> RadiusChoice:
    choice, _, _ = select_radius_with_searches(
        g, pivot, base_distance, params, rng)
    return choice
