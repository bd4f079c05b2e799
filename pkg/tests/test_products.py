import pytest
from hypothesis import given, settings, strategies as st

from superdom.graph import (
    GraphError,
    VertexSet,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty,
    path,
)
from superdom.products import connected_components, join, lex_product, project
from superdom.solvers import gamma_sp

from conftest import graphs


def test_join_examples():
    assert join(empty(2), empty(3)).base == complete_bipartite(2, 3)
    assert join(complete(2), complete(3)).base == complete(5)
    p = join(path(4), cycle(3))
    assert p.base.n == 7 and p.base.size() == 3 + 3 + 12
    assert p.base == lex_product(complete(2), [path(4), cycle(3)]).base


def test_lex_examples():
    for n in (2, 3):
        for m in (2, 3):
            assert lex_product(complete(n), [empty(m)]).base == complete_multipartite([m] * n)
    p = lex_product(path(3), [path(4), complete(2), path(3)])
    assert p.base.n == 9
    assert p.h_orders == (4, 2, 3) and p.offsets == (0, 4, 6)
    assert p.coord_of(5) == (1, 1) and p.index_of(2, 0) == 6


def test_lex_errors():
    with pytest.raises(GraphError):
        lex_product(path(3), [path(2), path(2)])
    with pytest.raises(GraphError):
        lex_product(path(2), [empty(0)])
    with pytest.raises(GraphError):
        lex_product(complete(9), [complete(8)])
    with pytest.raises(GraphError):
        join(empty(0), path(2))


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=4), st.lists(graphs(min_n=1, max_n=4), min_size=1, max_size=4), st.randoms())
def test_block_adjacency(g, hs, rnd):
    hs = (hs * g.n)[: g.n] if len(hs) != 1 else hs
    p = lex_product(g, hs)
    full = hs if len(hs) == g.n else hs * g.n
    assert p.base.n == sum(h.n for h in full)
    for v in range(p.base.n):
        assert p.index_of(*p.coord_of(v)) == v
    for _ in range(30):
        a, b = rnd.randrange(p.base.n), rnd.randrange(p.base.n)
        (i, j), (k, l) = p.coord_of(a), p.coord_of(b)
        expected = g.has_edge(i, k) or (i == k and full[i].has_edge(j, l))
        assert p.base.has_edge(a, b) == expected


def test_project_examples():
    p = lex_product(path(2), [complete(2)])
    w = VertexSet.of(4, [p.index_of(0, 0), p.index_of(1, 1)])
    assert project(p, w, 0).to_list() == [0]
    assert project(p, w, 1).to_list() == [1]
    assert project(p, VertexSet.full(4), 1).to_list() == [0, 1]
    assert project(p, VertexSet(4, 0), 0).to_list() == []
    with pytest.raises(GraphError):
        project(p, w, 2)


def test_components_examples():
    parts = connected_components(disjoint_union(complete(2), complete(2), complete(2)))
    assert [s.to_list() for s in parts] == [[0, 1], [2, 3], [4, 5]]
    assert [len(s) for s in connected_components(cycle(7))] == [7]
    assert [s.to_list() for s in connected_components(empty(4))] == [[0], [1], [2], [3]]


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=4), graphs(min_n=2, max_n=4))
def test_component_law(g, h):
    # an isolated vertex of G contributes a bare copy of H, whose own components count
    if h.is_empty() or (g.has_isolated_vertex() and not h.is_connected()):
        return
    assert len(connected_components(lex_product(g, [h]).base)) == len(connected_components(g))


@settings(max_examples=40)
@given(graphs(min_n=1, max_n=4), graphs(min_n=1, max_n=4))
def test_join_symmetry(g, h):
    a, b = join(g, h).base, join(h, g).base
    assert (a.n, a.size(), sorted(a.degrees())) == (b.n, b.size(), sorted(b.degrees()))
    assert gamma_sp(a).value == gamma_sp(b).value
