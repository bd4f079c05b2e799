import pytest
from hypothesis import given, settings, strategies as st

from superdom.family_f import (
    DisconnectedGraphError,
    canonical_shape,
    construct_f,
    has_induced_p4_or_c4,
    is_gamma_sp_n_minus_1,
    recognize,
    neighbourhood_law_violations,
)
from superdom.graph import GraphError, complete, complete_bipartite, cycle, empty, path
from superdom.harness import iter_labeled
from superdom.solvers import gamma_sp


def test_construct_examples():
    assert construct_f([1], [2]) == complete_bipartite(1, 2)
    assert construct_f([4], []) == complete(4)
    fig = construct_f([2, 2], [1, 2])
    assert fig.n == 7
    assert fig.label == "F[2,2;1,2]"
    for bad in [([], []), ([1], [1, 1]), ([2, 2], []), ([0], [1])]:
        with pytest.raises(GraphError):
            construct_f(*bad)


def test_recognize_examples():
    fig = construct_f([2, 2], [1, 2])
    dec = recognize(fig)
    assert dec.shape() == ((2, 2), (1, 2))
    assert [s.to_list() for s in dec.cliques] == [[0, 1], [3, 4]]
    assert [s.to_list() for s in dec.empties] == [[2], [5, 6]]
    assert recognize(complete(4)).shape() == ((4,), ())
    assert recognize(path(4)) is None
    assert recognize(cycle(4)) is None
    assert recognize(complete_bipartite(1, 3)).shape() == ((1,), (3,))
    assert recognize(complete(2)).shape() == ((2,), ())
    with pytest.raises(DisconnectedGraphError):
        recognize(empty(2))


def test_is_gamma_sp_n_minus_1_examples():
    assert not is_gamma_sp_n_minus_1(cycle(4))
    assert is_gamma_sp_n_minus_1(complete_bipartite(1, 3))
    assert gamma_sp(complete_bipartite(1, 3)).value == 3


shapes = st.integers(1, 3).flatmap(
    lambda k: st.tuples(
        st.lists(st.integers(1, 3), min_size=k, max_size=k),
        st.lists(st.integers(1, 3), min_size=k - 1, max_size=k),
    )
)


@settings(max_examples=100)
@given(shapes)
def test_round_trip_and_laws(shape):
    cliques, empties = shape
    if sum(cliques) + sum(empties) < 2:
        return
    g = construct_f(cliques, empties)
    dec = recognize(g)
    assert dec is not None
    assert dec.shape() == canonical_shape(cliques, empties)
    assert neighbourhood_law_violations(g, dec) == []
    assert not has_induced_p4_or_c4(g)
    assert any(g.is_universal(v) for v in range(g.n))
    assert gamma_sp(g).value == g.n - 1


def test_canonical_shape():
    assert canonical_shape([2], [1]) == ((3,), ())
    assert canonical_shape([2, 1], [1, 2]) == ((2, 1), (1, 2))
    assert canonical_shape([1, 1], [2]) == ((1,), (3,))
    assert canonical_shape([2, 2], [2]) == ((2, 2), (2,))
    assert canonical_shape([1, 1], [1]) == ((1,), (2,))


def test_equivalence_connected_up_to_6():
    for n in range(2, 7):
        for g in iter_labeled(n, "connected"):
            assert (recognize(g) is not None) == (gamma_sp(g).value == n - 1), g


def test_induced_p4_c4_scan():
    assert has_induced_p4_or_c4(path(4))
    assert has_induced_p4_or_c4(cycle(4))
    assert has_induced_p4_or_c4(cycle(5))
    assert not has_induced_p4_or_c4(complete(5))
    assert not has_induced_p4_or_c4(complete_bipartite(1, 4))
