"""The tree family T_k, its orientation D_k and the partial orientations in between.

Vertex indexing is fixed: ``w1..wk -> 0..k-1``, ``u1..u_{k^2/9}`` next, then
``x1..x5`` and finally ``y1``.  Edges are listed so that the all-forward
orientation of ``T_k`` is exactly ``D_k``:

    w_i w_{i+1},  u_j w_1,  w_2 x_1, x_1 x_2, ..., x_4 x_5,  y_1 w_3
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .graph import (
    ConnectivityError,
    GraphError,
    MixedGraph,
    WrongKindError,
    all_pairs,
    is_connected,
)


class Stage(enum.Enum):
    TK = "tk"
    DK = "dk"
    DPRIME = "dkprime"
    DDOUBLEPRIME = "dkdoubleprime"
    DTRIPLEPRIME = "dktripleprime"


class ClosedForm(enum.Enum):
    W_TK = "W_TK"
    W_DK = "W_DK"
    WMAX_DKPRIME = "WMAX_DKPRIME"
    WMAX_U_WTAIL = "WMAX_U_WTAIL"
    WMAX_U_X = "WMAX_U_X"
    CLAIM5_A = "CLAIM5_A"
    CLAIM5_B = "CLAIM5_B"


F = Fraction

# coefficients, highest degree first
_POLYS: dict[ClosedForm, tuple[Fraction, ...]] = {
    ClosedForm.W_TK: (F(11, 162), F(2, 9), F(55, 9), F(35, 6), F(61)),
    ClosedForm.W_DK: (F(1, 18), F(2, 9), F(59, 18), F(-5, 3), F(56)),
    ClosedForm.WMAX_DKPRIME: (F(1, 18), F(2, 9), F(56, 9), F(35, 6), F(61)),
    ClosedForm.WMAX_U_WTAIL: (F(1, 18), F(1, 18), F(-2, 3), F(0), F(0)),
    ClosedForm.WMAX_U_X: (F(25, 9), F(0), F(0)),
    ClosedForm.CLAIM5_A: (F(1, 2), F(-2), F(3, 2)),
    ClosedForm.CLAIM5_B: (F(4, 9), F(0), F(-6)),
}

INTEGRAL_FORMS = frozenset(
    {
        ClosedForm.W_TK,
        ClosedForm.W_DK,
        ClosedForm.WMAX_DKPRIME,
        ClosedForm.WMAX_U_WTAIL,
        ClosedForm.WMAX_U_X,
    }
)


def check_k(k: int) -> None:
    if not isinstance(k, int) or k < 3 or k % 3:
        raise GraphError("k must be a positive multiple of 3")


@dataclass(frozen=True)
class TkInstance:
    graph: MixedGraph
    k: int
    U: tuple[int, ...]
    W: tuple[int, ...]
    X: tuple[int, ...]
    Y: tuple[int, ...]

    def vertex(self, name: str) -> int:
        """Index of a named vertex such as ``"w3"``, ``"u1"``, ``"x5"`` or ``"y1"``."""
        group, i = name[0], int(name[1:])
        return {"u": self.U, "w": self.W, "x": self.X, "y": self.Y}[group][i - 1]

    def labels(self) -> list[tuple[str, str]]:
        out = []
        for prefix, members in (("w", self.W), ("u", self.U), ("x", self.X), ("y", self.Y)):
            out.extend((str(v), f"{prefix}{i}") for i, v in enumerate(members, start=1))
        return out


def _tk_layout(k: int):
    check_k(k)
    nu = k * k // 9
    W = tuple(range(k))
    U = tuple(range(k, k + nu))
    X = tuple(range(k + nu, k + nu + 5))
    Y = (k + nu + 5,)
    n = k + nu + 6
    w_path = [(W[i], W[i + 1]) for i in range(k - 1)]
    u_edges = [(u, W[0]) for u in U]
    x_chain = [(W[1], X[0])] + [(X[i], X[i + 1]) for i in range(4)]
    y_edge = [(Y[0], W[2])]
    return n, (U, W, X, Y), w_path, u_edges, x_chain, y_edge


def build_tk(k: int) -> TkInstance:
    n, (U, W, X, Y), w_path, u_edges, x_chain, y_edge = _tk_layout(k)
    g = MixedGraph.undirected(n, w_path + u_edges + x_chain + y_edge)
    return TkInstance(g, k, U, W, X, Y)


def build_dk_stage(k: int, stage: Stage) -> TkInstance:
    """``T_k`` at one of its orientation stages, sharing :func:`build_tk`'s indexing."""
    n, (U, W, X, Y), w_path, u_edges, x_chain, y_edge = _tk_layout(k)
    y_rev = [(v, u) for u, v in y_edge]
    if stage is Stage.TK:
        edges, arcs = w_path + u_edges + x_chain + y_edge, []
    elif stage is Stage.DPRIME:
        edges, arcs = x_chain + y_edge, w_path + u_edges
    elif stage is Stage.DDOUBLEPRIME:
        edges, arcs = y_edge, w_path + u_edges + x_chain
    elif stage is Stage.DTRIPLEPRIME:
        edges, arcs = [], w_path + u_edges + x_chain + y_rev
    elif stage is Stage.DK:
        edges, arcs = [], w_path + u_edges + x_chain + y_edge
    else:
        raise GraphError(f"unknown stage {stage!r}")
    return TkInstance(MixedGraph(n, tuple(edges), tuple(arcs)), k, U, W, X, Y)


def build_dk(k: int) -> TkInstance:
    return build_dk_stage(k, Stage.DK)


def closed_form(form: ClosedForm, k: int) -> Fraction:
    """Exact rational value of one of the closed-form polynomials at ``k``."""
    check_k(k)
    value = F(0)
    for c in _POLYS[form]:
        value = value * k + c
    return value


def closed_form_int(form: ClosedForm, k: int) -> int:
    if form not in INTEGRAL_FORMS:
        raise ValueError(f"{form.value} carries no integrality guarantee")
    value = closed_form(form, k)
    if value.denominator != 1:
        raise ArithmeticError(f"{form.value}({k}) = {value} is not an integer")
    return value.numerator


def claim5_report(k: int) -> dict:
    """The CLAIM5_A and CLAIM5_B sums at ``k``: polynomial value versus BFS value.

    ``direct_a`` sums ``d(y1, v)`` over ``v`` in ``w3..wk`` in ``D_k``;
    ``direct_b`` sums ``d(v, y1)`` over ``v`` in ``U, X, w1, w2, w3`` in the
    orientation with ``w3 -> y1``.
    """
    dk = build_dk(k)
    dt = build_dk_stage(k, Stage.DTRIPLEPRIME)
    y1 = dk.Y[0]
    d_dk = all_pairs(dk.graph).d
    d_dt = all_pairs(dt.graph).d
    direct_a = sum(d_dk[y1][v] for v in dk.W[2:])
    sources = dk.U + dk.X + dk.W[:3]
    direct_b = sum(d_dt[v][y1] for v in sources)
    poly_a = closed_form(ClosedForm.CLAIM5_A, k)
    poly_b = closed_form(ClosedForm.CLAIM5_B, k)
    return {
        "k": k,
        "claim5_a_formula": str(poly_a),
        "claim5_a_direct": direct_a,
        "claim5_b_formula": str(poly_b),
        "claim5_b_direct": direct_b,
        "formula_difference": str(poly_a - poly_b),
        "direct_difference": direct_a - direct_b,
    }


# -- zig-zag detection -------------------------------------------------------


def _check_tree_orientation(d: MixedGraph) -> None:
    if d.undirected_edges:
        raise WrongKindError("expected an orientation: every edge must be directed")
    if d.n == 0 or len(d.arcs) != d.n - 1 or not is_connected(d):
        raise ConnectivityError("expected an orientation of a tree")


def _tree_path(adj: list[list[int]], s: int, t: int) -> list[int]:
    parent = {s: None}
    stack = [s]
    while stack:
        u = stack.pop()
        if u == t:
            break
        for v in adj[u]:
            if v not in parent:
                parent[v] = u
                stack.append(v)
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return path[::-1]


def _has_zigzag_path(d: MixedGraph) -> bool:
    arcs = set(d.arcs)
    adj: list[list[int]] = [[] for _ in range(d.n)]
    for u, v in d.arcs:
        adj[u].append(v)
        adj[v].append(u)
    for s, t in combinations(range(d.n), 2):
        path = _tree_path(adj, s, t)
        signs = [(a, b) in arcs for a, b in zip(path, path[1:])]
        changes = sum(x != y for x, y in zip(signs, signs[1:]))
        if changes >= 2:
            return True
    return False


def find_center_vertex(d: MixedGraph) -> Optional[int]:
    """Smallest vertex joined to every other vertex by a directed path one way or the other."""
    _check_tree_orientation(d)
    dist = all_pairs(d).d
    for w in range(d.n):
        if all(u == w or dist[u][w] or dist[w][u] for u in range(d.n)):
            return w
    return None


def is_zigzag(d: MixedGraph, method: str = "center") -> bool:
    """Whether some tree path changes direction at least twice.

    ``method="path"`` walks every tree path; ``method="center"`` checks for a
    vertex comparable to all others.  The two always agree.
    """
    _check_tree_orientation(d)
    if method == "path":
        return _has_zigzag_path(d)
    if method == "center":
        return find_center_vertex(d) is None
    raise ValueError(f"unknown zig-zag method {method!r}")
