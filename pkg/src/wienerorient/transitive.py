"""Transitive digraphs and transitive-orientation (comparability) recognition."""

from __future__ import annotations

from typing import Optional

from .graph import (
    Direction,
    MixedGraph,
    OrientationAssignment,
    WrongKindError,
    apply_orientation,
    wiener_directed,
)


def is_transitive(d: MixedGraph) -> bool:
    """True iff every directed 2-path ``u -> v -> w`` (``u != w``) has the arc ``u -> w``."""
    if d.undirected_edges:
        raise WrongKindError("is_transitive needs a digraph")
    out = [set(d.out_neighbors(v)) for v in range(d.n)]
    for u in range(d.n):
        for v in out[u]:
            for w in out[v]:
                if w != u and w not in out[u]:
                    return False
    return True


def _implication_class(seed, adj):
    """All arcs forced by ``seed`` under the forcing relation of the current edge set.

    ``a -> b`` forces ``a -> c`` when ``b, c`` are non-adjacent, and
    ``c -> b`` when ``a, c`` are non-adjacent.
    """
    cls = {seed}
    stack = [seed]
    while stack:
        a, b = stack.pop()
        forced = [(a, c) for c in adj[a] if c != b and c not in adj[b]]
        forced += [(c, b) for c in adj[b] if c != a and c not in adj[a]]
        for arc in forced:
            if arc not in cls:
                cls.add(arc)
                stack.append(arc)
    return cls


def find_transitive_orientation(g: MixedGraph) -> Optional[OrientationAssignment]:
    """A transitive orientation of ``g`` by successive edge forcing, or ``None``.

    Each round seeds from the first remaining edge in input order, oriented
    low -> high, collects its implication class in the graph of remaining
    edges, and removes those edges.  A class containing both directions of an
    edge means ``g`` is not a comparability graph.
    """
    if g.arcs:
        raise WrongKindError("find_transitive_orientation needs a graph without arcs")
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.undirected_edges:
        adj[u].add(v)
        adj[v].add(u)

    oriented: dict[frozenset[int], tuple[int, int]] = {}
    for u, v in g.undirected_edges:
        if frozenset((u, v)) in oriented:
            continue
        cls = _implication_class((min(u, v), max(u, v)), adj)
        if any((b, a) in cls for a, b in cls):
            return None
        for a, b in cls:
            oriented[frozenset((a, b))] = (a, b)
            adj[a].discard(b)
            adj[b].discard(a)

    choices = tuple(
        Direction.FORWARD if oriented[frozenset(e)] == e else Direction.BACKWARD
        for e in g.undirected_edges
    )
    return OrientationAssignment(g, choices)


def decide_min_equals_m(g: MixedGraph) -> tuple[bool, Optional[OrientationAssignment]]:
    """Whether some orientation of ``g`` has Wiener index equal to its edge count."""
    witness = find_transitive_orientation(g)
    if witness is None:
        return False, None
    assert wiener_directed(apply_orientation(g, witness)) == g.m
    return True, witness
