"""Hamiltonian (a,b)-path to Wiener-orientation gadget.

The gadget hangs a star with ``n^3`` leaves off ``a`` (centre ``a0``) and
another off ``b`` (centre ``b0``).  Indexing: source vertices keep
``0..n-1``, ``a0 = n``, ``a_i = n + i``, ``b0 = n + n^3 + 1``,
``b_i = b0 + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import (
    ConnectivityError,
    GraphError,
    MixedGraph,
    WrongKindError,
    all_pairs,
    is_connected,
    wiener_between,
    wiener_directed,
)

MAX_HAMPATH_VERTICES = 12
MAX_VERIFY_VERTICES = 6


@dataclass(frozen=True)
class GadgetInstance:
    graph: MixedGraph
    source: MixedGraph
    n: int
    a: int
    b: int
    A: tuple[int, ...]
    B: tuple[int, ...]

    @property
    def a0(self) -> int:
        return self.A[0]

    @property
    def b0(self) -> int:
        return self.B[0]

    def labels(self) -> list[tuple[str, str]]:
        return [
            (str(self.a), "a"),
            (str(self.b), "b"),
            (str(self.a0), "a0"),
            (str(self.b0), "b0"),
            (f"{self.A[1]}-{self.A[-1]}", "A"),
            (f"{self.B[1]}-{self.B[-1]}", "B"),
        ]


def m_of_n(n: int) -> int:
    """Threshold ``n^7 + 3n^6 + 2n^4 + 4n^3 + n + 1``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return n**7 + 3 * n**6 + 2 * n**4 + 4 * n**3 + n + 1


def _check_source(g: MixedGraph, a: int, b: int) -> None:
    if g.arcs:
        raise WrongKindError("the source graph must be undirected")
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise GraphError(f"a and b must be vertices in 0..{g.n - 1}")
    if a == b:
        raise GraphError("a and b must be distinct")


def build_gadget(g: MixedGraph, a: int, b: int) -> GadgetInstance:
    _check_source(g, a, b)
    if not is_connected(g):
        raise ConnectivityError("the source graph must be connected")
    n = g.n
    n3 = n**3
    A = tuple(range(n, n + n3 + 1))
    B = tuple(range(n + n3 + 1, n + 2 * n3 + 2))
    a0, b0 = A[0], B[0]
    added = [(a, a0), (b, b0)]
    added += [(a0, ai) for ai in A[1:]]
    added += [(b0, bi) for bi in B[1:]]
    graph = MixedGraph.undirected(n + 2 * n3 + 2, list(g.undirected_edges) + added)
    return GadgetInstance(graph, g, n, a, b, A, B)


def _is_hampath(g: MixedGraph, path: Sequence[int], a: int, b: int) -> bool:
    if sorted(path) != list(range(g.n)) or path[0] != a or path[-1] != b:
        return False
    return all(v in g.out_neighbors(u) for u, v in zip(path, path[1:]))


def orient_from_hampath(gi: GadgetInstance, path: Sequence[int]) -> MixedGraph:
    """The high-Wiener orientation of the gadget built around a Hamiltonian (a,b)-path.

    Path edges point along the path, chords point back, leaves of ``A``
    point into ``a0 -> a``, and ``b -> b0`` points out to the leaves of ``B``.
    """
    path = list(path)
    if not _is_hampath(gi.source, path, gi.a, gi.b):
        raise GraphError(f"{path} is not a Hamiltonian ({gi.a},{gi.b})-path")
    pos = {v: i for i, v in enumerate(path)}
    arcs = []
    for u, v in gi.source.undirected_edges:
        if pos[u] > pos[v]:
            u, v = v, u
        arcs.append((u, v) if pos[v] - pos[u] == 1 else (v, u))
    arcs.append((gi.a0, gi.a))
    arcs.append((gi.b, gi.b0))
    arcs += [(ai, gi.a0) for ai in gi.A[1:]]
    arcs += [(gi.b0, bi) for bi in gi.B[1:]]
    return MixedGraph.digraph(gi.graph.n, arcs)


def hampath_bruteforce(g: MixedGraph, a: int, b: int) -> Optional[tuple[int, ...]]:
    """First Hamiltonian (a,b)-path by backtracking over ascending neighbours, or None."""
    _check_source(g, a, b)
    if g.n > MAX_HAMPATH_VERTICES:
        raise GraphError(f"hampath_bruteforce supports at most {MAX_HAMPATH_VERTICES} vertices")
    n = g.n
    path = [a]
    used = [False] * n
    used[a] = True

    def extend() -> bool:
        u = path[-1]
        if len(path) == n:
            return u == b
        for v in g.out_neighbors(u):
            # b may only close the path
            if used[v] or (v == b and len(path) < n - 1):
                continue
            used[v] = True
            path.append(v)
            if extend():
                return True
            path.pop()
            used[v] = False
        return False

    return tuple(path) if extend() else None


def verify_forward_reduction(g: MixedGraph, a: int, b: int) -> dict:
    """Check the forward direction of the reduction on one source graph.

    Returns a JSON-ready report: ``status`` is ``"pass"``, ``"fail"`` or
    ``"vacuous"`` (no Hamiltonian (a,b)-path, nothing to check), and
    ``checks`` maps each assertion to a bool.
    """
    _check_source(g, a, b)
    n = g.n
    if n > MAX_VERIFY_VERTICES:
        raise GraphError(f"verify_forward_reduction supports at most {MAX_VERIFY_VERTICES} vertices")
    threshold = m_of_n(n)
    report = {"n": n, "a": a, "b": b, "M": threshold}
    path = hampath_bruteforce(g, a, b)
    if path is None:
        report.update(status="vacuous", path=None, checks={})
        return report

    gi = build_gadget(g, a, b)
    d = orient_from_hampath(gi, path)
    dist = all_pairs(d).d
    A1, B1 = gi.A[1:], gi.B[1:]
    V = range(n)
    w = wiener_directed(d)
    w_ab = wiener_between(d, gi.A, gi.B)
    checks = {
        "gadget_order": gi.graph.n == 2 * n**3 + n + 2,
        "gadget_size": gi.graph.m == g.m + 2 * n**3 + 2,
        "W_AB_equals_M": w_ab == threshold,
        "W_at_least_M": w >= threshold,
        "d_ai_bj": all(dist[x][y] == n + 3 for x in A1 for y in B1),
        "d_a0_bj": all(dist[gi.a0][y] == n + 2 for y in B1),
        "d_ai_b0": all(dist[x][gi.b0] == n + 2 for x in A1),
        "d_a0_b0": dist[gi.a0][gi.b0] == n + 1,
        "d_a_b": dist[a][b] == n - 1,
        "W_VA_zero": wiener_between(d, V, gi.A) == 0,
        "W_BA_zero": wiener_between(d, gi.B, gi.A) == 0,
    }
    report.update(
        status="pass" if all(checks.values()) else "fail",
        path=list(path),
        W=w,
        W_AB=w_ab,
        checks=checks,
    )
    return report
