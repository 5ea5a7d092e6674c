import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.eqsets import (
    Verdict,
    bound_witness_set,
    build_exp2,
    check_bounds,
    compute_eta_xp,
    covering_sizes,
    eta_cycle_closed_form,
    eta_cycle_witness,
    eta_definitional,
    eta_expandable_shortcut,
    eta_via_hitting_set,
    is_equimatchable_set,
    is_expandable,
)
from core.errors import GraphError, HypothesisError
from core.gadgets import make_kp4, make_prism
from core.gap import augmenting_p4s, compute_mu
from core.graph import build_family, complement, induced_subgraph
from core.matching import enumerate_maximal_matchings, matching_number

from .strategies import graphs, graphs_with_edges


def test_middle_of_p4_is_not_equimatchable(p4):
    report = is_equimatchable_set(p4, {1})
    assert report.verdict is Verdict.NOT_EQUIMATCHABLE
    small, large = report.counterexample
    assert small.edges == {(1, 2)}
    assert large.edges == {(0, 1), (2, 3)}
    assert report.to_document()["verdict"] == "not-equimatchable"


def test_leaf_of_p4_is_equimatchable(p4):
    report = is_equimatchable_set(p4, {0})
    assert report.verdict is Verdict.EQUIMATCHABLE
    assert report.size == 2
    assert report.counterexample is None


def test_vacuous_set():
    star = build_family("star", [3])
    report = is_equimatchable_set(star, {1, 2})
    assert report.verdict is Verdict.VACUOUS
    assert report.is_equimatchable


def test_set_outside_graph_is_rejected(p4):
    with pytest.raises(GraphError):
        is_equimatchable_set(p4, {4})


def test_counterexample_from_non_equimatchable_remainder():
    # covering vertex 0 of P6 leaves a P4 behind
    p6 = build_family("path", [6])
    report = is_equimatchable_set(p6, {0})
    assert report.verdict is Verdict.NOT_EQUIMATCHABLE
    small, large = report.counterexample
    assert large.size == small.size + 1
    assert {0} <= small.covered and {0} <= large.covered


@pytest.mark.parametrize(
    "g, eta",
    [
        (build_family("cycle", [6]), 3),
        (build_family("cycle", [7]), 0),
        (complement(build_family("kK2", [3])), 3),
        (build_family("path", [4]), 1),
    ],
)
def test_eta_of_known_graphs(g, eta):
    result = compute_eta_xp(g)
    assert result.eta == eta
    assert is_equimatchable_set(g, result.witness).is_equimatchable
    assert eta_via_hitting_set(g).eta == eta
    assert eta_definitional(g).eta == eta


def test_exp2_shapes(gap_two):
    assert build_exp2(build_family("cycle", [7])).hyperedges == ()
    assert build_exp2(build_family("cycle", [7])).uniformity is None
    assert build_exp2(gap_two).uniformity == 2
    assert build_exp2(build_family("cycle", [9])).uniformity == 9 - 2 * 4 + 2


@pytest.mark.parametrize("k", [3, 4])
def test_exp2_of_cocktail_party_is_perfect_matching(k):
    g = complement(build_family("kK2", [k]))
    exp2 = build_exp2(g)
    assert exp2.as_graph() == build_family("kK2", [k])
    doc = exp2.to_document()
    assert doc["uniformity"] == 2 and len(doc["hyperedges"]) == k


def test_exp2_as_graph_needs_pairs():
    with pytest.raises(GraphError):
        build_exp2(build_family("cycle", [9])).as_graph()


def test_eta_of_c9_by_hitting_set():
    assert eta_via_hitting_set(build_family("cycle", [9])).eta == 3


def test_expandable():
    assert is_expandable(build_family("complete", [4]))
    assert is_expandable(make_prism(2))
    assert not is_expandable(build_family("path", [4]))


def test_expandable_shortcut():
    prism = make_prism(2)
    result = eta_expandable_shortcut(prism)
    assert result.eta == 8
    assert result.eta == 2 * matching_number(prism) - 2
    assert eta_expandable_shortcut(build_family("complete", [6])).eta == 0
    with pytest.raises(HypothesisError) as info:
        eta_expandable_shortcut(build_family("path", [4]))
    assert info.value.hypothesis == "expandable"
    with pytest.raises(HypothesisError) as info:
        eta_expandable_shortcut(build_family("path", [3]))
    assert info.value.hypothesis == "perfect matching"


@pytest.mark.parametrize("n, eta", [(3, 0), (4, 0), (5, 0), (6, 3), (7, 0), (9, 3), (12, 6), (13, 5)])
def test_cycle_closed_form(n, eta):
    assert eta_cycle_closed_form(n) == eta
    assert len(eta_cycle_witness(n)) == eta


def test_cycle_closed_form_rejects_small_n():
    with pytest.raises(GraphError):
        eta_cycle_closed_form(2)


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_witness_is_equimatchable(n):
    c = build_family("cycle", [n])
    assert is_equimatchable_set(c, eta_cycle_witness(n)).is_equimatchable


def test_bounds_on_two_p4():
    report = check_bounds(make_kp4(2))
    assert (report.mu, report.eta, report.two_nu_minus_2) == (2, 2, 6)
    assert report.holds
    assert report.to_document()["holds"] is True


def test_bound_witness_needs_an_edge():
    with pytest.raises(GraphError):
        bound_witness_set(build_family("empty", [3]))


def test_separation_family():
    g = complement(build_family("kK2", [4]))
    report = check_bounds(g)
    assert report.eta == 4
    assert report.mu <= 1


@settings(max_examples=40, deadline=None)
@given(graphs_with_edges(max_n=9))
def test_bound_witness_is_equimatchable(g):
    s = bound_witness_set(g)
    assert len(s) == 2 * matching_number(g) - 2
    assert is_equimatchable_set(g, s).verdict is not Verdict.NOT_EQUIMATCHABLE


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=7))
def test_eta_oracles_agree(g):
    xp = compute_eta_xp(g)
    assert eta_via_hitting_set(g).eta == xp.eta
    assert eta_definitional(g).eta == xp.eta
    assert (xp.eta == 0) == (compute_mu(g) == 0)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=7))
def test_equimatchable_sets_are_hitting_sets(g):
    exp2 = build_exp2(g)
    for size in range(3):
        for s in itertools.combinations(g.vertices, size):
            assert is_equimatchable_set(g, s).is_equimatchable == exp2.is_hitting_set(s)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=7), st.data())
def test_report_matches_enumeration_and_is_monotone(g, data):
    s = data.draw(st.frozensets(st.sampled_from(range(g.n)), max_size=3)) if g.n else frozenset()
    report = is_equimatchable_set(g, s)
    sizes = covering_sizes(g, s)
    assert report.is_equimatchable == (len(sizes) <= 1)
    if report.verdict is Verdict.EQUIMATCHABLE:
        # covering maximal matchings are then maximum
        assert sizes == [matching_number(g)] == [report.size]
        for v in g.vertices:
            assert is_equimatchable_set(g, s | {v}).is_equimatchable
    if report.verdict is Verdict.NOT_EQUIMATCHABLE:
        small, large = report.counterexample
        assert small.size < large.size
        assert s <= small.covered and s <= large.covered


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=8))
def test_remainder_around_augmenting_p4_is_equimatchable(g):
    if compute_mu(g) != 1:
        return
    nu = matching_number(g)
    everything = frozenset(g.vertices)
    for m in enumerate_maximal_matchings(g):
        for u, w, y, v in augmenting_p4s(g, m):
            rest = everything - {u, w, y, v}
            h, labels = induced_subgraph(g, rest)
            index = {x: i for i, x in enumerate(labels)}
            target = (g.neighbourhood({u, v}) - {w, y}) & rest
            report = is_equimatchable_set(h, {index[x] for x in target})
            assert report.verdict is Verdict.EQUIMATCHABLE
            assert report.size == nu - 2
