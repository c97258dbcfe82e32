"""Searches for orientations of extreme Wiener index.

Exhaustive search evaluates orientations in numpy batches: each orientation
is a bitmask (bit ``i`` set = edge ``i`` reversed) and all-source BFS runs on
per-vertex out-neighbour bitmasks.  Since the converse of an orientation has
the same Wiener index, only masks with edge 0 forward are evaluated and the
optimal converses are added back when every optimum is requested.
"""

from __future__ import annotations

import enum
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

import numpy as np

from .graph import (
    ConnectivityError,
    GraphError,
    MixedGraph,
    OrientationAssignment,
    WrongKindError,
    apply_orientation,
    is_connected,
    wiener_directed,
    wiener_max,
)
from .transitive import find_transitive_orientation

MAX_EXHAUSTIVE_EDGES = 24
MAX_BATCH_VERTICES = 64
BATCH = 1 << 16


class Objective(enum.Enum):
    MAX = "max"
    MIN = "min"


class Strategy(enum.Enum):
    EXHAUSTIVE = "exhaustive"
    BNB_TREE = "bnb"
    LOCAL = "local"


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an orientation search.

    ``explored`` counts orientations covered for exhaustive search (converses
    included, so ``2^m``), nodes visited for branch and bound, and distinct
    orientations scored for local search.
    """

    objective: Objective
    value: int
    witnesses: tuple[OrientationAssignment, ...]
    explored: int
    pruned: int
    strategy: Strategy

    def to_dict(self) -> dict:
        return {
            "objective": self.objective.value,
            "value": self.value,
            "witnesses": [[f"{u}->{v}" for u, v in w.oriented_pairs()] for w in self.witnesses],
            "explored": self.explored,
            "pruned": self.pruned,
            "strategy": self.strategy.value,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _validate(g: MixedGraph) -> None:
    if g.arcs:
        raise WrongKindError("orientation search needs a graph without arcs")
    if not is_connected(g):
        raise ConnectivityError("orientation search needs a connected graph")


def _mask_bits(mask: int, m: int) -> str:
    return "".join("1" if mask >> i & 1 else "0" for i in range(m))


def _flip(mask: int, m: int) -> int:
    return mask ^ ((1 << m) - 1)


def _canonical(g: MixedGraph, masks) -> tuple[OrientationAssignment, ...]:
    m = len(g.undirected_edges)
    ordered = sorted(set(masks), key=lambda x: _mask_bits(x, m))
    return tuple(OrientationAssignment.from_mask(g, x) for x in ordered)


# -- batched evaluation -------------------------------------------------------


def batch_wiener(n: int, edges, masks: np.ndarray) -> np.ndarray:
    """Wiener index of the orientation given by each mask in ``masks``."""
    if n > MAX_BATCH_VERTICES:
        raise GraphError(f"batched evaluation supports at most {MAX_BATCH_VERTICES} vertices")
    masks = np.asarray(masks, dtype=np.uint64)
    b = masks.shape[0]
    one = np.uint64(1)
    out = np.zeros((b, n), dtype=np.uint64)
    for i, (u, v) in enumerate(edges):
        back = (masks >> np.uint64(i)) & one
        out[:, u] |= np.where(back == 0, one << np.uint64(v), np.uint64(0))
        out[:, v] |= np.where(back == 1, one << np.uint64(u), np.uint64(0))

    ident = np.array([1 << s for s in range(n)], dtype=np.uint64)
    reached = np.broadcast_to(ident, (b, n)).copy()
    frontier = reached.copy()
    total = np.zeros(b, dtype=np.int64)
    for step in range(1, n):
        nxt = np.zeros_like(frontier)
        for u in range(n):
            has_u = (frontier >> np.uint64(u)) & one
            nxt |= np.where(has_u == 1, out[:, u : u + 1], np.uint64(0))
        nxt &= ~reached
        counts = np.bitwise_count(nxt).sum(axis=1, dtype=np.int64)
        if not counts.any():
            break
        total += step * counts
        reached |= nxt
        frontier = nxt
    return total


def _scan_range(args):
    """Best value and its masks over ``mask = r << shift`` for ``r`` in ``[lo, hi)``."""
    n, edges, lo, hi, shift, maximise = args
    best = None
    best_masks: list[int] = []
    for start in range(lo, hi, BATCH):
        stop = min(hi, start + BATCH)
        masks = np.arange(start, stop, dtype=np.uint64) << np.uint64(shift)
        values = batch_wiener(n, edges, masks)
        v = int(values.max() if maximise else values.min())
        if best is None or (v > best if maximise else v < best):
            best, best_masks = v, []
        if v == best:
            best_masks.extend(int(x) for x in masks[values == v])
    return best, best_masks


def _scan(g: MixedGraph, maximise: bool, workers: int):
    """Optimum over orientations with edge 0 forward, split across ``workers`` processes.

    Returns ``(value, masks, covered)``; ``covered`` counts the converses too.
    """
    m = len(g.undirected_edges)
    total = 1 << (m - 1)
    job = (g.n, g.undirected_edges)
    if workers <= 1 or total < workers:
        parts = [_scan_range(job + (0, total, 1, maximise))]
    else:
        bounds = [total * i // workers for i in range(workers + 1)]
        jobs = [job + (bounds[i], bounds[i + 1], 1, maximise) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_range, jobs))
    best = (max if maximise else min)(v for v, _ in parts)
    masks = [x for v, xs in parts if v == best for x in xs]
    return best, masks, 2 * total


# -- exact searches ----------------------------------------------------------


def orient_max_exact(
    g: MixedGraph,
    strategy: Strategy = Strategy.EXHAUSTIVE,
    all_optima: bool = False,
    workers: int = 1,
) -> SearchReport:
    """Maximum Wiener index over all orientations of ``g``."""
    _validate(g)
    m = len(g.undirected_edges)
    if strategy is Strategy.BNB_TREE:
        return _bnb_tree(g, all_optima)
    if strategy is not Strategy.EXHAUSTIVE:
        raise ValueError(f"orient_max_exact does not support strategy {strategy.value}")
    if m > MAX_EXHAUSTIVE_EDGES:
        raise GraphError(f"exhaustive search is capped at {MAX_EXHAUSTIVE_EDGES} edges, got {m}")
    if m == 0:
        return SearchReport(Objective.MAX, 0, _canonical(g, [0]), 1, 0, strategy)
    best, masks, explored = _scan(g, True, workers)
    if all_optima:
        masks = masks + [_flip(x, m) for x in masks]
    else:
        masks = [min(masks, key=lambda x: _mask_bits(x, m))]
    return SearchReport(Objective.MAX, best, _canonical(g, masks), explored, 0, strategy)


def orient_min_exact(
    g: MixedGraph,
    strategy: Strategy = Strategy.EXHAUSTIVE,
    workers: int = 1,
    use_transitive: bool = True,
) -> SearchReport:
    """Minimum Wiener index over all orientations of ``g``.

    Every orientation scores at least the edge count, with equality exactly
    for transitive orientations, so a transitive orientation found by forcing
    ends the search at once.
    """
    _validate(g)
    m = len(g.undirected_edges)
    if strategy is not Strategy.EXHAUSTIVE:
        raise ValueError(f"orient_min_exact does not support strategy {strategy.value}")
    if m > MAX_EXHAUSTIVE_EDGES:
        raise GraphError(f"exhaustive search is capped at {MAX_EXHAUSTIVE_EDGES} edges, got {m}")
    if m == 0:
        return SearchReport(Objective.MIN, 0, _canonical(g, [0]), 1, 0, strategy)
    if use_transitive:
        witness = find_transitive_orientation(g)
        if witness is not None:
            return SearchReport(Objective.MIN, m, (witness,), 0, 0, strategy)
    best, masks, explored = _scan(g, False, workers)
    masks = [min(masks, key=lambda x: _mask_bits(x, m))]
    return SearchReport(Objective.MIN, best, _canonical(g, masks), explored, 0, strategy)


def _is_tree(g: MixedGraph) -> bool:
    return g.n > 0 and g.m == g.n - 1 and is_connected(g)


def _bnb_tree(g: MixedGraph, all_optima: bool) -> SearchReport:
    """Depth-first branch and bound over partial orientations of a tree.

    On a tree, ``wiener_max`` of a partial orientation bounds the Wiener
    index of every completion from above, so a node is cut once that bound
    cannot beat (or, for ``all_optima``, match) the incumbent.  Edge 0 stays
    forward; converses of the optima are added back at the end.
    """
    if not _is_tree(g):
        raise GraphError("branch and bound needs a tree")
    m = len(g.undirected_edges)
    if m == 0:
        return SearchReport(Objective.MAX, 0, _canonical(g, [0]), 1, 0, Strategy.BNB_TREE)
    n = g.n
    edges = g.undirected_edges
    incumbent = wiener_directed(apply_orientation(g, OrientationAssignment.from_mask(g, 0)))
    best_masks = [0]
    explored = pruned = 0

    def partial(depth: int, mask: int) -> MixedGraph:
        arcs = [(v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(edges[:depth])]
        return MixedGraph(n, edges[depth:], tuple(arcs))

    def visit(depth: int, mask: int) -> None:
        nonlocal incumbent, best_masks, explored, pruned
        explored += 1
        h = partial(depth, mask)
        if depth == m:
            value = wiener_directed(h)
            if value > incumbent:
                incumbent, best_masks = value, [mask]
            elif value == incumbent and all_optima and mask not in best_masks:
                best_masks.append(mask)
            return
        bound = wiener_max(h)
        if bound < incumbent or (bound == incumbent and not all_optima):
            pruned += 1
            return
        visit(depth + 1, mask)
        visit(depth + 1, mask | 1 << depth)

    visit(1, 0)
    masks = best_masks
    if all_optima:
        masks = masks + [_flip(x, m) for x in masks]
    else:
        masks = [min(masks, key=lambda x: _mask_bits(x, m))]
    return SearchReport(Objective.MAX, incumbent, _canonical(g, masks), explored, pruned, Strategy.BNB_TREE)


# -- heuristic --------------------------------------------------------------


def orient_local_search(g: MixedGraph, restarts: int = 8, seed: int = 0) -> SearchReport:
    """Best-improvement hill climbing over single-edge flips from random starts."""
    _validate(g)
    m = len(g.undirected_edges)
    rng = random.Random(seed)
    explored = 0
    cache: dict[int, int] = {}

    def score(mask: int) -> int:
        nonlocal explored
        if mask not in cache:
            explored += 1
            cache[mask] = wiener_directed(apply_orientation(g, OrientationAssignment.from_mask(g, mask)))
        return cache[mask]

    best = None
    best_masks: set[int] = set()
    for _ in range(max(1, restarts)):
        mask = rng.getrandbits(m) if m else 0
        value = score(mask)
        while True:
            flips = [(score(mask ^ 1 << i), -i) for i in range(m)]
            top = max(flips, default=None)
            if top is None or top[0] <= value:
                break
            value, mask = top[0], mask ^ 1 << -top[1]
        if best is None or value > best:
            best, best_masks = value, set()
        if value == best:
            best_masks.add(mask)
    chosen = min(best_masks, key=lambda x: _mask_bits(x, m))
    return SearchReport(Objective.MAX, best, _canonical(g, [chosen]), explored, 0, Strategy.LOCAL)


# -- tournaments --------------------------------------------------------------


def tournament_max(n: int) -> tuple[int, MixedGraph, int]:
    """Largest Wiener index over labelled tournaments of order ``n``.

    Returns ``(value, witness, bound)`` where ``bound = C(n+1, 3) - 1`` is the
    published upper bound, reported for comparison only.
    """
    if not 2 <= n <= 6:
        raise GraphError("tournament_max supports 2 <= n <= 6")
    kn = MixedGraph.undirected(n, combinations(range(n), 2))
    report = orient_max_exact(kn)
    witness = apply_orientation(kn, report.witnesses[0])
    return report.value, witness, comb(n + 1, 3) - 1


__all__ = [
    "Objective",
    "SearchReport",
    "Strategy",
    "batch_wiener",
    "orient_local_search",
    "orient_max_exact",
    "orient_min_exact",
    "tournament_max",
]
