import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iasi.graph import (
    Graph,
    GraphError,
    GraphFormatError,
    cartesian_product,
    complement,
    complete_graph,
    corona,
    cycle_graph,
    degeneracy_order,
    delete_edge,
    disjoint_union,
    empty_graph,
    find_triangle,
    format_edge_list,
    induced_subgraph,
    is_bipartite,
    join,
    load_graph,
    parse_edge_list,
    path_graph,
    save_graph,
    star_graph,
)


@st.composite
def graphs(draw, max_n=6, min_n=0):
    n = draw(st.integers(min_n, max_n))
    verts = [f"x{i}" for i in range(n)]
    pairs = list(combinations(verts, 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(verts, chosen)


def test_graph_invariants():
    with pytest.raises(GraphError):
        Graph(["a"], [("a", "a")])
    with pytest.raises(GraphError):
        Graph(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(GraphError):
        Graph(["a"], [("a", "b")])
    with pytest.raises(GraphError):
        Graph(["a", "b"], strict=True)
    assert Graph(["a", "b"], [("b", "a")]).edges == (("a", "b"),)


def test_union_examples():
    U = disjoint_union(path_graph(2), path_graph(3))
    assert (U.n, U.m) == (5, 3)
    assert disjoint_union(cycle_graph(3), cycle_graph(3)).m == 6
    G = cycle_graph(4)
    assert disjoint_union(G, empty_graph()) == G.relabel(lambda v: f"A.{v}")
    assert not any(u[0] != v[0] for u, v in U.edges)


def test_join_examples():
    K = join(path_graph(2), path_graph(2))
    assert (K.n, K.m) == (4, 6)
    W = join(complete_graph(1), cycle_graph(4))
    assert (W.n, W.m) == (5, 8)
    assert join(path_graph(2), path_graph(3)).m == 9


def test_product_examples():
    P = cartesian_product(path_graph(2), path_graph(3))
    assert (P.n, P.m) == (6, 2 * 2 + 3 * 1)
    sq = cartesian_product(path_graph(2), path_graph(2))
    assert sq.m == 4 and all(sq.degree(v) == 2 for v in sq.vertices)
    G = cycle_graph(5)
    assert cartesian_product(complete_graph(1), G) == G.relabel(lambda v: f"v1|{v}")


def test_corona_examples():
    C = corona(path_graph(2), path_graph(2))
    assert (C.n, C.m) == (6, 1 + 2 * 1 + 2 * 2)
    assert corona(complete_graph(1), complete_graph(1)).m == 1
    pendant = corona(path_graph(2), complete_graph(1))
    assert (pendant.n, pendant.m) == (4, 3)
    assert sorted(pendant.degree(v) for v in pendant.vertices) == [1, 1, 2, 2]
    assert C.has_edge("v1", "1.v2") and not C.has_edge("v1", "2.v2")


def test_corona_name_clash():
    G1 = Graph(["a", "1.b"], [("a", "1.b")])
    G2 = Graph(["b"])
    with pytest.raises(GraphError):
        corona(G1, G2)


def test_complement_examples():
    assert complement(complete_graph(4)).m == 0
    c = complement(cycle_graph(4))
    assert c.m == 2 and all(c.degree(v) == 1 for v in c.vertices)
    c5 = complement(cycle_graph(5))
    assert c5.m == 5 and all(c5.degree(v) == 2 for v in c5.vertices)
    assert is_bipartite(c5).bipartite is False


def test_bipartite_examples():
    cert = is_bipartite(cycle_graph(4))
    assert cert and cert.parts == (("v1", "v3"), ("v2", "v4"))
    tri = is_bipartite(cycle_graph(3))
    assert not tri and sorted(tri.odd_cycle) == ["v1", "v2", "v3"] and tri.verify(cycle_graph(3))
    P = cartesian_product(path_graph(2), path_graph(3))
    assert is_bipartite(P).verify(P) and is_bipartite(P).bipartite


def test_induced_subgraph_examples():
    K4 = complete_graph(4)
    assert induced_subgraph(K4, ["v1", "v3", "v4"]).m == 3
    G = cycle_graph(5)
    assert induced_subgraph(G, G.vertices) == G
    assert induced_subgraph(cycle_graph(4), ["v1", "v2"]) == path_graph(2)
    with pytest.raises(GraphError):
        induced_subgraph(G, ["nope"])
    assert delete_edge(G, "v2", "v1").m == 4


def test_find_triangle():
    assert find_triangle(cycle_graph(4)) is None
    assert find_triangle(join(path_graph(2), complete_graph(1))) is not None


def test_edge_list_round_trip(tmp_path):
    G = Graph(["a", "b", "lonely", "c"], [("a", "b"), ("c", "b")])
    assert parse_edge_list(format_edge_list(G)) == G
    for name in ("g.edges", "g.json"):
        save_graph(G, tmp_path / name)
        assert load_graph(tmp_path / name) == G
    assert Graph.from_json(json.loads(json.dumps(G.to_json()))) == G


def test_edge_list_parsing():
    G = parse_edge_list("# a comment\nu v  # trailing\n\nvertex w\nv x\n")
    assert G.vertices == ("u", "v", "w", "x") and G.m == 2
    with pytest.raises(GraphFormatError) as exc:
        parse_edge_list("u v\nu v w\n")
    assert exc.value.line == 2
    with pytest.raises(GraphFormatError):
        parse_edge_list("u u\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("vertex w\nu v\n", strict=True)
    with pytest.raises(GraphFormatError):
        Graph.from_json({"vertices": ["a"], "edges": [["a"]]})


def _brute_product_adjacent(G1, G2, x, y):
    (u1, u2), (v1, v2) = x, y
    return (u1 == v1 and G2.has_edge(u2, v2)) or (u2 == v2 and G1.has_edge(u1, v1))


@settings(max_examples=60, deadline=None)
@given(graphs(), graphs())
def test_count_formulas(G1, G2):
    p1, q1, p2, q2 = G1.n, G1.m, G2.n, G2.m
    assert join(G1, G2).m == q1 + q2 + p1 * p2
    P = cartesian_product(G1, G2)
    assert (P.n, P.m) == (p1 * p2, p1 * q2 + p2 * q1)
    C = corona(G1, G2)
    assert (C.n, C.m) == (p1 * (1 + p2), q1 + p1 * q2 + p1 * p2)
    U = disjoint_union(G1, G2)
    assert (U.n, U.m) == (p1 + p2, q1 + q2)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=4), graphs(max_n=4))
def test_product_adjacency_matches_brute_force(G1, G2):
    P = cartesian_product(G1, G2)
    pairs = [(u, v) for u in G1.vertices for v in G2.vertices]
    for x, y in combinations(pairs, 2):
        assert P.has_edge(f"{x[0]}|{x[1]}", f"{y[0]}|{y[1]}") == _brute_product_adjacent(G1, G2, x, y)


@given(graphs())
def test_complement_involution(G):
    assert complement(complement(G)) == G


@given(graphs(max_n=8))
def test_bipartite_certificate_verifies(G):
    cert = is_bipartite(G)
    assert cert.verify(G)
    brute = any(
        all((G.index(u) in mask) != (G.index(v) in mask) for u, v in G.edges)
        for r in range(G.n + 1) for mask in map(set, combinations(range(G.n), r))
    )
    assert cert.bipartite == brute


@given(graphs())
def test_degeneracy_order_is_permutation(G):
    assert sorted(degeneracy_order(G)) == sorted(G.vertices)


def test_star_shape():
    S = star_graph(4)
    assert S.degree("v1") == 4 and S.m == 4
