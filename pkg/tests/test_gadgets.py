import pytest
from hypothesis import given, settings

from core.eqsets import check_bounds, eta_expandable_shortcut, eta_via_hitting_set, is_expandable
from core.errors import GraphError, HypothesisError, MatchingError
from core.gadgets import (
    GAP_TWO_MMM,
    cover_from_equimatchable_set,
    gap_two_fixture,
    k_of_maximal_matching,
    make_k_of,
    make_kp4,
    make_poljak_instance,
    make_prism,
    poljak_identity_holds,
)
from core.gap import compute_mu, decide_gap, has_disjoint_augmenting_p4s
from core.graph import Graph, build_family, independence_number, vertex_cover_number
from core.matching import (
    Matching,
    enumerate_maximal_matchings,
    is_maximal,
    matching_number,
    minimum_maximal_matching_oracle,
)

from .strategies import graphs


def test_k_of_single_vertex():
    k = make_k_of(build_family("complete", [1]))
    assert k.n == 4
    assert compute_mu(k) == 1


def test_k_of_path():
    p3 = build_family("path", [3])
    k = make_k_of(p3)
    assert k.n == 12
    assert matching_number(k) == 6
    mmm, beta = minimum_maximal_matching_oracle(k)
    assert 6 - beta == independence_number(p3) == 2
    assert len(mmm.exposed) == 2 * independence_number(p3)


def test_k_of_needs_a_vertex():
    with pytest.raises(GraphError):
        make_k_of(Graph(0, frozenset()))


def test_k_of_maximal_matching_exposes_the_set():
    p3 = build_family("path", [3])
    k = make_k_of(p3)
    m = k_of_maximal_matching(p3, {0, 2})
    assert is_maximal(k, m)
    assert m.exposed == {0, 2}
    assert m.size == 6 - 1


@pytest.mark.parametrize("iset", [{0, 1}, {0}, {0, 6}])
def test_k_of_maximal_matching_rejects(iset):
    # adjacent, odd, outside 2G
    with pytest.raises(MatchingError):
        k_of_maximal_matching(build_family("path", [3]), iset)


@settings(max_examples=25, deadline=None)
@given(graphs(min_n=1, max_n=3))
def test_k_of_gap_is_independence_number(g):
    k = make_k_of(g)
    assert matching_number(k) == 2 * g.n
    _, beta = minimum_maximal_matching_oracle(k)
    assert 2 * g.n - beta == independence_number(g)


@pytest.mark.parametrize(
    "family, params",
    [("path", [4]), ("cycle", [5]), ("complete", [4]), ("empty", [4]), ("star", [4]), ("complete-bipartite", [2, 4])],
)
def test_k_of_gap_is_exactly_independence_number(family, params):
    g = build_family(family, params)
    k = make_k_of(g)
    alpha = independence_number(g)
    yes = decide_gap(k, alpha)
    assert yes and yes.verify(k)
    assert not decide_gap(k, alpha + 1, "alg1")
    assert not decide_gap(k, alpha + 1, "alg2")


def test_prism():
    prism = make_prism(2)
    assert prism.n == 10 and prism.m == 15
    assert all(prism.degree(v) == 3 for v in prism.vertices)
    assert prism.has_edge(0, 1) and prism.has_edge(0, 2) and prism.has_edge(0, 8)
    with pytest.raises(GraphError):
        make_prism(1)


@pytest.mark.parametrize("k", [2, 3])
def test_prism_meets_upper_bound(k):
    prism = make_prism(k)
    assert is_expandable(prism)
    assert eta_expandable_shortcut(prism).eta == 2 * matching_number(prism) - 2


def test_prism_eta_by_hitting_set():
    assert eta_via_hitting_set(make_prism(2)).eta == 8


@pytest.mark.parametrize(
    "base, n, eta",
    [
        (build_family("complete", [4]), 16, 9),
        (build_family("complete-bipartite", [3, 3]), 24, 12),
    ],
)
def test_poljak_instance(base, n, eta):
    g = make_poljak_instance(base)
    assert g.n == n
    assert poljak_identity_holds(base)
    result = eta_expandable_shortcut(g)
    assert result.eta == eta == vertex_cover_number(base) + base.m

    cover = cover_from_equimatchable_set(base, result.witness)
    assert all(u in cover or v in cover for u, v in base.edges)
    assert len(cover) <= result.eta - base.m


def test_poljak_needs_cubic_graph():
    with pytest.raises(HypothesisError) as info:
        make_poljak_instance(build_family("path", [4]))
    assert info.value.hypothesis == "cubic"


def test_cover_needs_subdivision_cover():
    with pytest.raises(HypothesisError):
        cover_from_equimatchable_set(build_family("complete", [4]), set())


@pytest.mark.parametrize("k", [1, 3])
def test_kp4(k):
    g = make_kp4(k)
    assert g.n == 4 * k and g.m == 3 * k
    report = check_bounds(g)
    assert report.mu == report.eta == k


def test_connected_kp4():
    g = make_kp4(2, connected=True)
    assert g.has_edge(1, 5)
    report = check_bounds(g)
    assert report.mu == report.eta == 2
    with pytest.raises(GraphError):
        make_kp4(0)


def test_gap_two_fixture():
    g = gap_two_fixture()
    assert (g.n, g.m) == (10, 10)
    assert matching_number(g) == 5
    mmm = Matching(g, GAP_TWO_MMM)
    assert is_maximal(g, mmm)
    assert compute_mu(g) == 2
    assert not any(has_disjoint_augmenting_p4s(g, m) for m in enumerate_maximal_matchings(g))
