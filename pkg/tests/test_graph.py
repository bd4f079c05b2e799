import networkx as nx
import pytest
from hypothesis import given

from superdom.graph import (
    Graph,
    GraphError,
    VertexSet,
    complete,
    complete_bipartite,
    complete_multipartite,
    construct,
    corona_k1,
    cycle,
    disjoint_union,
    emit_edge_list,
    emit_graph6,
    empty,
    induced_subgraph,
    is_universal,
    line_graph,
    neighbourhood,
    parse_edge_list,
    parse_graph6,
    path,
    read_graph,
)

from conftest import graphs


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def test_neighbourhood_examples():
    assert neighbourhood(complete(3), 0).to_list() == [1, 2]
    assert neighbourhood(empty(4), 2).to_list() == []
    assert neighbourhood(path(4), 1).to_list() == [0, 2]
    assert neighbourhood(path(4), 1, closed=True).to_list() == [0, 1, 2]
    with pytest.raises(GraphError):
        neighbourhood(path(4), 4)


def test_is_universal_examples():
    assert all(is_universal(complete(5), v) for v in range(5))
    assert is_universal(path(3), 1) and not is_universal(path(3), 0)
    assert not any(is_universal(cycle(4), v) for v in range(4))


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(GraphError):
        Graph(1, (0b10,))  # bit beyond n
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])


def test_constructors():
    k23 = complete_bipartite(2, 3)
    assert (k23.n, k23.size()) == (5, 6)
    assert k23.neighbourhood(0).to_list() == [2, 3, 4]
    c = corona_k1(3)
    assert c.n == 6 and c.degrees() == [3, 3, 3, 1, 1, 1]
    assert all(c.has_edge(i, 3 + i) for i in range(3))
    u = disjoint_union(complete(2), complete(2), complete(2))
    assert (u.n, u.size()) == (6, 3)
    assert construct("disjoint_union", [2, 2, 2]) == u
    assert construct("complete_multipartite", [2, 2]) == complete_bipartite(2, 2)
    assert complete_multipartite([1, 1, 1]) == complete(3)
    assert construct("corona_K1", [2]) == corona_k1(2)
    for kind, params in [("cycle", [2]), ("path", [0]), ("wheel", [4]), ("path", [1, 2])]:
        with pytest.raises(GraphError):
            construct(kind, params)


def test_graph6_examples():
    assert parse_graph6("A_") == complete(2)
    assert parse_graph6("A?") == empty(2)
    assert parse_graph6("Bw") == complete(3)
    assert parse_graph6(">>graph6<<Bw") == complete(3)
    for bad in ["", ":Bw", "B", "Bx", "A`", "A\x7f"]:
        with pytest.raises(GraphError):
            parse_graph6(bad)


@given(graphs(max_n=12))
def test_graph6_round_trip_and_networkx_agreement(g):
    text = emit_graph6(g)
    assert parse_graph6(text) == g
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_graph6_long_header():
    g = path(63)
    assert parse_graph6(emit_graph6(g)) == g
    assert emit_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


@given(graphs(max_n=9))
def test_symmetry_and_handshake(g):
    for u in range(g.n):
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    assert sum(g.degrees()) == 2 * g.size()


@given(graphs(max_n=9))
def test_connectivity_matches_networkx(g):
    if g.n:
        assert g.is_connected() == nx.is_connected(to_nx(g))


def test_line_graph_examples():
    assert line_graph(path(4))[0] == path(3)
    assert line_graph(complete(3))[0] == complete(3)
    lk4, edges = line_graph(complete(4))
    assert lk4.n == 6 and set(lk4.degrees()) == {4}
    assert edges == sorted(edges)
    assert line_graph(empty(3))[0].n == 0


@given(graphs(max_n=8))
def test_line_graph_degree_law_and_networkx(g):
    lg, edges = line_graph(g)
    for i, (u, v) in enumerate(edges):
        assert lg.degree(i) == g.degree(u) + g.degree(v) - 2
    assert nx.is_isomorphic(to_nx(lg), nx.line_graph(to_nx(g)))


def test_induced_subgraph_examples():
    assert induced_subgraph(cycle(5), [0, 1, 2]) == path(3)
    assert induced_subgraph(cycle(5), []).n == 0
    assert induced_subgraph(complete(5), VertexSet.of(5, [1, 3, 4])) == complete(3)


def test_vertex_set_algebra():
    s = VertexSet.of(5, [0, 2])
    assert s.complement().complement() == s
    assert (s | VertexSet.of(5, [1])).to_list() == [0, 1, 2]
    assert (s & VertexSet.of(5, [2, 3])).to_list() == [2]
    assert (s - VertexSet.of(5, [0])).to_list() == [2]
    assert 2 in s and 1 not in s and len(s) == 2
    with pytest.raises(GraphError):
        VertexSet.of(3, [3])


def test_edge_list_round_trip():
    g = cycle(5)
    assert parse_edge_list(emit_edge_list(g)) == g
    assert read_graph(emit_edge_list(g)) == g
    assert read_graph(emit_graph6(g) + "\n") == g
    assert parse_edge_list("0 1\n1 2\n") == path(3)
    assert parse_edge_list("0 1\n", n=4).n == 4
    with pytest.raises(GraphError):
        parse_edge_list("0 0\n")
