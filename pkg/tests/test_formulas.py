import pytest

from superdom import formulas
from superdom.formulas import Inapplicable
from superdom.graph import (
    GraphError,
    complete,
    complete_bipartite,
    corona_k1,
    cycle,
    disjoint_union,
    empty,
    path,
)
from superdom.products import join, lex_product
from superdom.solvers import gamma_sp


def lex_value(g, h):
    return gamma_sp(lex_product(g, [h]).base).value


def test_main_upper_examples():
    b = formulas.bound_main_upper(cycle(4), path(3))
    assert (b.value, b.variant) == (10, 2)
    assert b.general >= b.sharp
    h = disjoint_union(*[complete(2)] * 3)
    b = formulas.bound_main_upper(complete(2), h)
    assert (b.value, b.variant, b.sharp) == (9, 1, None)
    assert lex_value(complete(2), h) == 9
    b = formulas.bound_main_upper(path(2), complete(2))
    assert (b.value, b.sharp) == (3, None)
    assert lex_value(path(2), complete(2)) == 3
    with pytest.raises(Inapplicable):
        formulas.bound_main_upper(path(3), empty(2))


def test_trivial_lower_examples():
    assert formulas.bound_trivial_lower(complete(2), path(3)) == 4
    assert formulas.equality_trivial_lower(complete(2), path(3))
    assert lex_value(complete(2), path(3)) == 4
    assert not formulas.equality_trivial_lower(complete(2), complete(3))
    assert lex_value(complete(2), complete(3)) == 5
    assert not formulas.equality_trivial_lower(path(3), path(3))
    assert lex_value(path(3), path(3)) == 7 > 6
    with pytest.raises(Inapplicable):
        formulas.bound_trivial_lower(complete(1), path(3))
    with pytest.raises(Inapplicable):
        formulas.bound_trivial_lower(path(3), empty(3))


def test_min_upper_examples():
    g = corona_k1(2)
    assert gamma_sp(g).value == 2
    assert formulas.bound_min_upper(g, complete(2)) == 6 == lex_value(g, complete(2))
    assert formulas.bound_min_upper(complete(3), path(4)) == 10 == lex_value(complete(3), path(4))
    with pytest.raises(Inapplicable):
        formulas.bound_min_upper(complete(1), path(3))


def test_empty_upper_examples():
    for n in (2, 3):
        for m in (2, 3):
            assert formulas.bound_empty_upper(complete(n), m) == n * m - 2 == lex_value(complete(n), empty(m))
    assert formulas.bound_empty_upper(path(4), 2) == 6
    assert lex_value(path(4), empty(2)) <= 6
    two_k2 = disjoint_union(complete(2), complete(2))
    assert formulas.bound_empty_upper(two_k2, 2) == 4 == lex_value(two_k2, empty(2))
    with pytest.raises(Inapplicable):
        formulas.bound_empty_upper(empty(3), 2)
    with pytest.raises(Inapplicable):
        formulas.bound_empty_upper(path(3), 1)


@pytest.mark.parametrize(
    "kind, params, g, h, expected",
    [
        ("complete", (3,), complete(3), path(3), 7),
        ("complete", (3,), complete(3), path(4), 10),
        ("cycle", (4,), cycle(4), path(4), 12),
        ("cycle", (4,), cycle(4), path(3), 10),
        ("cycle", (5,), cycle(5), path(3), 12),
        ("cycle", (5,), cycle(5), path(4), 16),
        ("path", (5,), path(5), path(3), 11),
        ("complete_bipartite", (2, 3), complete_bipartite(2, 3), path(4), 14),
    ],
)
def test_exact_lex_examples(kind, params, g, h, expected):
    assert formulas.exact_lex(kind, params, h) == expected
    assert lex_value(g, h) == expected


def test_exact_lex_inapplicable():
    with pytest.raises(Inapplicable):
        formulas.exact_lex("complete", (3,), complete(3))
    with pytest.raises(Inapplicable):
        formulas.exact_lex("cycle", (5,), complete(3))
    with pytest.raises(Inapplicable):
        formulas.exact_lex("path", (3,), empty(3))
    with pytest.raises(Inapplicable):
        formulas.exact_lex("large_gap", path(3), path(3))
    with pytest.raises(GraphError):
        formulas.exact_lex("wheel", (4,), path(3))


def test_large_gap():
    h = disjoint_union(*[complete(2)] * 4)
    assert formulas.exact_lex("large_gap", path(3), h) == 2 * 4 + 1 * 8 == lex_value(path(3), h)


def test_classify_first_factor():
    kinds = dict(formulas.classify_first_factor(cycle(4)))
    assert kinds == {"cycle": (4,), "complete_bipartite": (2, 2)}
    assert dict(formulas.classify_first_factor(complete(2))) == {
        "complete": (2,),
        "path": (2,),
        "complete_bipartite": (1, 1),
    }
    assert formulas.classify_first_factor(empty(2)) == []


@pytest.mark.parametrize(
    "g, h, expected, used",
    [
        (path(4), path(4), 6, "thm21"),
        (complete(3), path(4), 5, "thm22"),
        (empty(2), path(4), 4, "thm23"),
        (path(4), empty(2), 4, "thm23"),
        (complete(2), complete(3), 4, "join-familyF"),
        (empty(3), complete(2), 4, "join-familyF"),
        (empty(2), empty(3), 3, "join-bipartite"),
    ],
)
def test_exact_join(g, h, expected, used):
    assert formulas.exact_join(g, h) == (expected, used)
    assert gamma_sp(join(g, h).base).value == expected


@pytest.mark.parametrize("g, alpha", [(complete(2), 1), (path(3), 2), (empty(2), 2), (cycle(4), 2), (complete(4), 1)])
def test_alpha_via_reduction(g, alpha):
    trace = formulas.alpha_via_reduction(g)
    assert trace.alpha == alpha
    assert trace.product_gamma_sp == trace.copies * (2 * g.n - alpha)
    assert trace.factor_gamma_sp == trace.copies


def test_reduction_trace_examples():
    t = formulas.alpha_via_reduction(complete(2))
    assert (t.copies, t.product_order, t.product_gamma_sp) == (3, 12, 9)
    t = formulas.alpha_via_reduction(path(3))
    assert (t.copies, t.product_order, t.product_gamma_sp) == (4, 24, 16)


def test_bound_report_consistency():
    rep = formulas.bound_report(cycle(4), path(3))
    ids = [t for t, _, _ in rep.applicable]
    assert {"thm10", "thm10-sharp", "thm11", "thm12", "prop17", "prop15"} <= set(ids)
    assert rep.gamma_sp_exact == 10 and rep.consistent()
    rep = formulas.bound_report(complete(3), path(4), op="join")
    assert rep.applicable == [("thm22", "exact", 5)] and rep.consistent()
    data = formulas.bound_report(complete(2), path(3), exact=False).to_json()
    assert list(data) == ["graph_id", "n", "n_prime", "op", "applicable", "gamma_sp_exact", "consistent"]
    assert data["gamma_sp_exact"] is None
    with pytest.raises(GraphError):
        formulas.bound_report(path(2), path(2), op="strong")
