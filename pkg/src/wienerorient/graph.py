"""Mixed graphs, BFS distances and Wiener-type sums.

Vertices are the integers ``0..n-1``.  A mixed graph carries an ordered list
of undirected edges and an ordered list of arcs; at most one of the two may
mention any unordered vertex pair.  Distances follow the zero convention:
``d(u, v) == 0`` whenever ``v`` cannot be reached from ``u``.
"""

from __future__ import annotations

import enum
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Optional

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for invalid graph input."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class WrongKindError(GraphError):
    """Raised when an operation gets arcs where it expects edges, or vice versa."""


class ConnectivityError(GraphError):
    pass


class OverlapError(GraphError):
    pass


@dataclass(frozen=True)
class MixedGraph:
    n: int
    undirected_edges: tuple[Edge, ...] = ()
    arcs: tuple[Edge, ...] = ()
    _out: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.undirected_edges)
        arcs = tuple((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "undirected_edges", edges)
        object.__setattr__(self, "arcs", arcs)

        seen: set[frozenset[int]] = set()
        out: list[list[int]] = [[] for _ in range(self.n)]
        for kind, pairs in (("edge", edges), ("arc", arcs)):
            for u, v in pairs:
                if not (0 <= u < self.n and 0 <= v < self.n):
                    raise GraphError(f"{kind} {u},{v} has a vertex outside 0..{self.n - 1}")
                if u == v:
                    raise GraphError(f"self-loop at vertex {u}")
                key = frozenset((u, v))
                if key in seen:
                    raise GraphError(f"pair {u},{v} appears more than once")
                seen.add(key)
                out[u].append(v)
                if kind == "edge":
                    out[v].append(u)
        object.__setattr__(self, "_out", tuple(tuple(sorted(a)) for a in out))

    @classmethod
    def undirected(cls, n: int, edges: Iterable[Edge]) -> "MixedGraph":
        return cls(n, tuple(edges), ())

    @classmethod
    def digraph(cls, n: int, arcs: Iterable[Edge]) -> "MixedGraph":
        return cls(n, (), tuple(arcs))

    @property
    def m(self) -> int:
        """Total number of edges and arcs."""
        return len(self.undirected_edges) + len(self.arcs)

    @property
    def is_undirected(self) -> bool:
        return not self.arcs

    @property
    def is_digraph(self) -> bool:
        return not self.undirected_edges

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Vertices reachable from ``v`` in one step, ascending."""
        return self._out[v]

    def underlying_edges(self) -> list[Edge]:
        """All pairs with direction forgotten: undirected edges first, then arcs."""
        return list(self.undirected_edges) + list(self.arcs)

    def underlying(self) -> "MixedGraph":
        return MixedGraph(self.n, tuple(self.underlying_edges()), ())

    def same_structure(self, other: "MixedGraph") -> bool:
        """Equality ignoring the order in which edges and arcs are listed."""
        return (
            self.n == other.n
            and {frozenset(e) for e in self.undirected_edges}
            == {frozenset(e) for e in other.undirected_edges}
            and set(self.arcs) == set(other.arcs)
        )


class Direction(enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class OrientationAssignment:
    """Direction choices for the undirected edges of ``base``, in edge order.

    ``FORWARD`` orients an edge from its first listed endpoint to the second.
    """

    base: MixedGraph
    choices: tuple[Direction, ...]

    def __post_init__(self):
        object.__setattr__(self, "choices", tuple(self.choices))
        if len(self.choices) != len(self.base.undirected_edges):
            raise GraphError(
                f"assignment has {len(self.choices)} choices but the graph has "
                f"{len(self.base.undirected_edges)} undirected edges"
            )

    @classmethod
    def from_mask(cls, base: MixedGraph, mask: int) -> "OrientationAssignment":
        """Full assignment where bit ``i`` set means edge ``i`` is backward."""
        m = len(base.undirected_edges)
        return cls(
            base,
            tuple(Direction.BACKWARD if mask >> i & 1 else Direction.FORWARD for i in range(m)),
        )

    @property
    def is_complete(self) -> bool:
        return Direction.UNDECIDED not in self.choices

    def bits(self) -> str:
        """Choice vector as a binary string, forward=0 (complete assignments only)."""
        if not self.is_complete:
            raise GraphError("undecided edges have no binary encoding")
        return "".join("1" if c is Direction.BACKWARD else "0" for c in self.choices)

    def oriented_pairs(self) -> list[Edge]:
        """Arc for each decided edge, in edge order."""
        out = []
        for (u, v), c in zip(self.base.undirected_edges, self.choices):
            if c is Direction.FORWARD:
                out.append((u, v))
            elif c is Direction.BACKWARD:
                out.append((v, u))
        return out


# -- file format ------------------------------------------------------------


def parse_mixed_graph(text: str | bytes) -> MixedGraph:
    """Parse the line-based mixed-graph format.

    ``#`` starts a comment line, the first other line is ``vertices <n>``, and
    each further non-empty line is ``u -- v`` or ``u -> v``.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n: Optional[int] = None
    edges: list[Edge] = []
    arcs: list[Edge] = []
    seen: set[frozenset[int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "vertices" or not parts[1].isdigit():
                raise ParseError(lineno, f"expected 'vertices <n>', got {line!r}")
            n = int(parts[1])
            continue
        if len(parts) != 3 or parts[1] not in ("--", "->"):
            raise ParseError(lineno, f"expected '<u> -- <v>' or '<u> -> <v>', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[2])
        except ValueError:
            raise ParseError(lineno, f"vertex labels must be integers, got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate pair {u},{v}")
        seen.add(key)
        (edges if parts[1] == "--" else arcs).append((u, v))
    if n is None:
        raise ParseError(0, "missing 'vertices <n>' header")
    return MixedGraph(n, tuple(edges), tuple(arcs))


def serialize_mixed_graph(g: MixedGraph, labels: Optional[Sequence[tuple[str, str]]] = None) -> str:
    """Inverse of :func:`parse_mixed_graph`.

    ``labels`` is an optional list of ``(index, name)`` written as
    ``# label <index> <name>`` comment lines ahead of the edge list.
    """
    lines = [f"vertices {g.n}"]
    for index, name in labels or ():
        lines.append(f"# label {index} {name}")
    lines.extend(f"{u} -- {v}" for u, v in g.undirected_edges)
    lines.extend(f"{u} -> {v}" for u, v in g.arcs)
    return "\n".join(lines) + "\n"


def read_labels(text: str) -> dict[str, str]:
    """Collect ``# label <index> <name>`` comments as ``{name: index}``."""
    labels = {}
    for raw in text.splitlines():
        parts = raw.split()
        if len(parts) == 4 and parts[:2] == ["#", "label"]:
            labels[parts[3]] = parts[2]
    return labels


# -- distances --------------------------------------------------------------


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple[tuple[int, ...], ...]

    def __getitem__(self, uv: Edge) -> int:
        u, v = uv
        return self.d[u][v]

    def row(self, u: int) -> tuple[int, ...]:
        return self.d[u]


def _check_vertex(g: MixedGraph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")


def distances_from(g: MixedGraph, s: int) -> list[int]:
    """BFS hop counts from ``s``; unreachable vertices get 0."""
    _check_vertex(g, s)
    dist = [0] * g.n
    seen = [False] * g.n
    seen[s] = True
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.out_neighbors(u):
            if not seen[v]:
                seen[v] = True
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs(g: MixedGraph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(distances_from(g, v)) for v in range(g.n)))


def is_connected(g: MixedGraph) -> bool:
    """Connectivity of the underlying undirected graph."""
    if g.n <= 1:
        return True
    und = g.underlying()
    dist = distances_from(und, 0)
    return all(d > 0 for d in dist[1:])


def wiener_undirected(g: MixedGraph) -> int:
    """Wiener index of a connected graph: sum over unordered pairs."""
    if g.arcs:
        raise WrongKindError("wiener_undirected needs a graph without arcs")
    if not is_connected(g):
        raise ConnectivityError("Wiener index of an undirected graph needs a connected graph")
    d = all_pairs(g).d
    return sum(d[u][v] for u in range(g.n) for v in range(u + 1, g.n))


def wiener_directed(g: MixedGraph) -> int:
    """Sum of d(u, v) over all ordered pairs, 0 for unreachable pairs."""
    if g.undirected_edges:
        raise WrongKindError("wiener_directed needs a digraph (no undirected edges)")
    return sum(map(sum, all_pairs(g).d))


def wiener_max(g: MixedGraph) -> int:
    """Sum over unordered pairs of ``max(d(u, v), d(v, u))``."""
    d = all_pairs(g).d
    return sum(max(d[u][v], d[v][u]) for u in range(g.n) for v in range(u + 1, g.n))


def _check_subsets(g: MixedGraph, a: Iterable[int], b: Iterable[int]) -> tuple[set[int], set[int]]:
    a, b = set(a), set(b)
    for v in a | b:
        _check_vertex(g, v)
    if a & b:
        raise OverlapError(f"subsets share vertices {sorted(a & b)}")
    return a, b


def wiener_between(g: MixedGraph, a: Iterable[int], b: Iterable[int]) -> int:
    """Sum of d(x, y) for x in ``a``, y in ``b`` (one direction only)."""
    a, b = _check_subsets(g, a, b)
    total = 0
    for x in a:
        dist = distances_from(g, x)
        total += sum(dist[y] for y in b)
    return total


def wiener_max_between(g: MixedGraph, a: Iterable[int], b: Iterable[int]) -> int:
    a, b = _check_subsets(g, a, b)
    if not a or not b:
        return 0
    d = all_pairs(g).d
    return sum(max(d[x][y], d[y][x]) for x in a for y in b)


def converse(g: MixedGraph) -> MixedGraph:
    return MixedGraph(g.n, g.undirected_edges, tuple((v, u) for u, v in g.arcs))


def apply_orientation(g: MixedGraph, o: OrientationAssignment) -> MixedGraph:
    """Orient the decided edges of ``g``; new arcs follow the existing ones in edge order."""
    if o.base != g:
        raise GraphError("assignment belongs to a different graph")
    kept = tuple(e for e, c in zip(g.undirected_edges, o.choices) if c is Direction.UNDECIDED)
    return MixedGraph(g.n, kept, g.arcs + tuple(o.oriented_pairs()))
