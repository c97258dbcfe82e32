import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wienerorient import (
    ConnectivityError,
    Direction,
    GraphError,
    MixedGraph,
    OrientationAssignment,
    OverlapError,
    ParseError,
    WrongKindError,
    all_pairs,
    apply_orientation,
    build_dk,
    build_tk,
    converse,
    distances_from,
    parse_mixed_graph,
    serialize_mixed_graph,
    wiener_between,
    wiener_directed,
    wiener_max,
    wiener_max_between,
    wiener_undirected,
)
from wienerorient.graph import read_labels

from oracles import floyd, random_tree

P3 = MixedGraph.undirected(3, [(0, 1), (1, 2)])
DIPATH3 = MixedGraph.digraph(3, [(0, 1), (1, 2)])
CYCLE3 = MixedGraph.digraph(3, [(0, 1), (1, 2), (2, 0)])


# -- parsing ------------------------------------------------------------------


def test_parse_smallest():
    g = parse_mixed_graph("vertices 2\n0 -- 1")
    assert g == MixedGraph(2, ((0, 1),), ())


def test_parse_digraph_path_and_bytes():
    assert parse_mixed_graph(b"vertices 3\n0 -> 1\n1 -> 2") == DIPATH3


def test_parse_comments_and_blank_lines():
    text = "# hello\n\nvertices 3\n# label 0 w1\n0 -- 1\n\n1 -> 2\n"
    g = parse_mixed_graph(text)
    assert g.undirected_edges == ((0, 1),)
    assert g.arcs == ((1, 2),)


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("vertices 2\n0 -- 0", 2),
        ("vertices 2\n0 -- 2", 2),
        ("vertices 3\n0 -- 1\n1 -> 0", 3),
        ("vertices 3\n0 -- 1\n1 -- 0", 3),
        ("vertices 3\n0 => 1", 2),
        ("vertices x", 1),
        ("0 -- 1", 1),
        ("vertices 3\na -- b", 2),
    ],
)
def test_parse_errors_name_line(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse_mixed_graph(text)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


def test_parse_empty_is_error():
    with pytest.raises(ParseError):
        parse_mixed_graph("# nothing\n")


def test_serialize_exact_text():
    assert serialize_mixed_graph(MixedGraph.undirected(2, [(0, 1)])) == "vertices 2\n0 -- 1\n"
    assert "0 -> 1\n" in serialize_mixed_graph(MixedGraph.digraph(2, [(0, 1)]))


def test_roundtrip_tk():
    g = build_tk(3).graph
    assert parse_mixed_graph(serialize_mixed_graph(g)) == g


def test_labels_roundtrip():
    inst = build_dk(3)
    text = serialize_mixed_graph(inst.graph, inst.labels())
    assert parse_mixed_graph(text) == inst.graph
    labels = read_labels(text)
    assert labels["w1"] == "0" and labels["y1"] == "9" and labels["u1"] == "3"


@st.composite
def mixed_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    kinds = draw(st.lists(st.sampled_from("-<> "), min_size=len(pairs), max_size=len(pairs)))
    order = draw(st.permutations(range(len(pairs))))
    edges, arcs = [], []
    for i in order:
        (u, v), k = pairs[i], kinds[i]
        if k == "-":
            edges.append((u, v))
        elif k == ">":
            arcs.append((u, v))
        elif k == "<":
            arcs.append((v, u))
    return MixedGraph(n, tuple(edges), tuple(arcs))


@given(mixed_graphs())
def test_roundtrip_property(g):
    assert parse_mixed_graph(serialize_mixed_graph(g)) == g


# -- model invariants ---------------------------------------------------------


@pytest.mark.parametrize(
    "edges, arcs",
    [([(0, 0)], []), ([(0, 1)], [(1, 0)]), ([], [(0, 1), (1, 0)]), ([(0, 1), (1, 0)], []), ([(0, 5)], [])],
)
def test_model_rejects_bad_pairs(edges, arcs):
    with pytest.raises(GraphError):
        MixedGraph(3, tuple(edges), tuple(arcs))


# -- distances ----------------------------------------------------------------


def test_distances_from_examples():
    assert distances_from(P3, 0) == [0, 1, 2]
    assert distances_from(MixedGraph.digraph(3, [(0, 1), (2, 1)]), 0) == [0, 1, 0]
    assert distances_from(MixedGraph(3, ((0, 1),), ((1, 2),)), 0) == [0, 1, 2]


def test_distances_from_range():
    with pytest.raises(GraphError):
        distances_from(P3, 3)


def test_all_pairs_examples():
    assert all_pairs(MixedGraph.undirected(2, [(0, 1)])).d == ((0, 1), (1, 0))
    assert all_pairs(MixedGraph.digraph(2, [(0, 1)])).d == ((0, 1), (0, 0))
    d = all_pairs(CYCLE3).d
    off = [d[u][v] for u in range(3) for v in range(3) if u != v]
    assert sorted(off) == [1, 1, 1, 2, 2, 2] and sum(off) == 9


@given(mixed_graphs())
def test_all_pairs_matches_floyd(g):
    assert [list(r) for r in all_pairs(g).d] == floyd(g.n, g.undirected_edges, g.arcs)


@given(mixed_graphs())
def test_zero_convention_triangle(g):
    d = all_pairs(g).d
    n = g.n
    for u in range(n):
        assert d[u][u] == 0
        for v in range(n):
            assert d[u][v] <= max(n - 1, 0)
            if d[u][v] == 0:
                continue
            for w in range(n):
                if w != u and d[v][w] > 0:
                    assert 0 < d[u][w] <= d[u][v] + d[v][w]


# -- Wiener sums ----------------------------------------------------------------


def test_wiener_undirected_examples():
    assert wiener_undirected(P3) == 4
    assert wiener_undirected(build_tk(3).graph) == 145
    with pytest.raises(ConnectivityError):
        wiener_undirected(MixedGraph(2))
    with pytest.raises(WrongKindError):
        wiener_undirected(DIPATH3)


def test_wiener_directed_examples():
    assert wiener_directed(DIPATH3) == 4
    assert wiener_directed(CYCLE3) == 9
    assert wiener_directed(build_dk(3).graph) == 91
    with pytest.raises(WrongKindError):
        wiener_directed(P3)


def test_wiener_max_examples():
    assert wiener_max(build_tk(3).graph) == 145
    assert wiener_max(MixedGraph.digraph(3, [(0, 1)])) == 1


def test_wiener_between_examples():
    dk = build_dk(3)
    # u1 -> w1 -> w2 -> x1 ... x5: distances 3..7
    assert wiener_between(dk.graph, [dk.vertex("u1")], dk.X) == 25
    assert wiener_between(dk.graph, [], dk.X) == 0
    with pytest.raises(OverlapError):
        wiener_between(dk.graph, [0, 1], [1, 2])


def test_wiener_max_between_examples():
    tk = build_tk(6)
    assert wiener_max_between(tk.graph, tk.U, tk.W[3:]) == 60
    assert wiener_max_between(tk.graph, [], tk.W) == 0
    with pytest.raises(OverlapError):
        wiener_max_between(tk.graph, [0], [0])


def test_converse_examples():
    assert converse(MixedGraph.digraph(2, [(0, 1)])) == MixedGraph.digraph(2, [(1, 0)])
    assert wiener_directed(converse(build_dk(3).graph)) == 91
    assert converse(P3) == P3


@given(mixed_graphs())
def test_converse_involution_and_invariance(g):
    assert converse(converse(g)) == g
    if g.is_digraph:
        assert wiener_directed(converse(g)) == wiener_directed(g)


@given(mixed_graphs(), st.integers(0, 2**32))
def test_decomposition_identity(g, seed):
    rng = random.Random(seed)
    verts = list(range(g.n))
    rng.shuffle(verts)
    cut1, cut2 = sorted(rng.randint(0, g.n) for _ in range(2))
    A, B = verts[:cut1], verts[cut1:cut2]
    d = floyd(g.n, g.undirected_edges, g.arcs)

    def within(S):
        return sum(d[x][y] for x in S for y in S)

    S = A + B
    assert within(S) == within(A) + within(B) + wiener_between(g, A, B) + wiener_between(g, B, A)


def test_undirected_symmetry():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 9)
        g = MixedGraph.undirected(n, random_tree(rng, n))
        assert wiener_max(g) == wiener_undirected(g)


# -- orientation assignments ------------------------------------------------------


def test_apply_orientation_examples():
    k2 = MixedGraph.undirected(2, [(0, 1)])
    assert apply_orientation(k2, OrientationAssignment(k2, [Direction.FORWARD])) == MixedGraph.digraph(
        2, [(0, 1)]
    )
    none = OrientationAssignment(P3, [Direction.UNDECIDED] * 2)
    assert apply_orientation(P3, none) == P3
    tk = build_tk(3).graph
    d3 = OrientationAssignment.from_mask(tk, 0)
    assert apply_orientation(tk, d3).same_structure(build_dk(3).graph)
    assert apply_orientation(tk, d3) == build_dk(3).graph


def test_apply_orientation_errors():
    with pytest.raises(GraphError):
        OrientationAssignment(P3, [Direction.FORWARD])
    other = MixedGraph.undirected(3, [(0, 2), (1, 2)])
    with pytest.raises(GraphError):
        apply_orientation(other, OrientationAssignment(P3, [Direction.FORWARD] * 2))


def test_apply_preserves_existing_arcs():
    g = MixedGraph(3, ((1, 2),), ((0, 1),))
    h = apply_orientation(g, OrientationAssignment(g, [Direction.BACKWARD]))
    assert h.arcs == ((0, 1), (2, 1))


@settings(max_examples=60)
@given(st.integers(0, 2**32))
def test_tree_orientation_dichotomy(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 10)
    t = MixedGraph.undirected(n, random_tree(rng, n))
    o = OrientationAssignment.from_mask(t, rng.getrandbits(n - 1))
    d = all_pairs(apply_orientation(t, o)).d
    dt = all_pairs(t).d
    for u in range(n):
        for v in range(n):
            assert d[u][v] in (0, dt[u][v])
            assert max(d[u][v], d[v][u]) == d[u][v] + d[v][u]


@settings(max_examples=60)
@given(st.integers(0, 2**32))
def test_orientation_lower_bound(seed):
    from oracles import random_connected

    rng = random.Random(seed)
    n = rng.randint(2, 8)
    g = MixedGraph.undirected(n, random_connected(rng, n))
    o = OrientationAssignment.from_mask(g, rng.getrandbits(g.m))
    d = all_pairs(apply_orientation(g, o)).d
    dg = all_pairs(g).d
    assert all(d[u][v] == 0 or d[u][v] >= dg[u][v] for u in range(n) for v in range(n))
