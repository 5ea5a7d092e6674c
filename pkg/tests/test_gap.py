import pytest
from hypothesis import given, settings

from core.gadgets import GAP_TWO_MMM, make_kp4
from core.gap import (
    DECIDERS,
    AugmentingP4Witness,
    GapCertificateA,
    GapCertificateB,
    augmenting_p4s,
    compute_mu,
    decide_gap,
    find_augmenting_p4_matching,
    find_p4_configuration,
    gap_pair_certificate,
    has_disjoint_augmenting_p4s,
    is_almost_equimatchable,
    is_equimatchable,
    shift_to_augmenting_p4,
)
from core.graph import build_family
from core.matching import (
    Matching,
    enumerate_maximal_matchings,
    is_maximal,
    matching_number,
    minimum_maximal_matching_oracle,
)

from .conftest import maximal_matching_sizes
from .strategies import graphs


@pytest.mark.parametrize("alg", sorted(DECIDERS))
def test_gap_two_deciders(gap_two, alg):
    answers = [bool(decide_gap(gap_two, k, alg)) for k in range(6)]
    assert answers == [True, True, True, False, False, False]


def test_gap_two_mu(gap_two):
    assert compute_mu(gap_two) == 2
    mmm, beta = minimum_maximal_matching_oracle(gap_two)
    assert beta == 3
    assert mmm.edges == GAP_TWO_MMM
    # the minimum maximal matching is unique
    assert [m.edges for m in enumerate_maximal_matchings(gap_two) if m.size == 3] == [GAP_TWO_MMM]


def test_gap_two_certificates(gap_two):
    v1 = decide_gap(gap_two, 2, "alg1")
    assert isinstance(v1.certificate, GapCertificateA)
    assert v1.verify(gap_two)
    assert v1.matching.size == 3
    assert v1.certificate.reassemble() == v1.matching
    v2 = decide_gap(gap_two, 2, "alg2")
    assert isinstance(v2.certificate, GapCertificateB)
    assert v2.verify(gap_two)
    doc = v2.to_document()
    assert doc["answer"] == "YES" and doc["certificate"]["type"] == "B"
    assert decide_gap(gap_two, 3, "alg2").to_document() == {"k": 3, "answer": "NO", "method": "alg2"}


def test_gap_two_has_no_disjoint_augmenting_p4s(gap_two):
    assert not any(has_disjoint_augmenting_p4s(gap_two, m) for m in enumerate_maximal_matchings(gap_two))


def test_two_p4_has_disjoint_augmenting_p4s():
    g = make_kp4(2)
    m = Matching(g, frozenset({(1, 2), (5, 6)}))
    assert augmenting_p4s(g, m) == [(0, 1, 2, 3), (4, 5, 6, 7)]
    assert has_disjoint_augmenting_p4s(g, m)


def test_cycle_six_has_gap_one():
    c6 = build_family("cycle", [6])
    assert decide_gap(c6, 1, "is-enum")
    assert not decide_gap(c6, 2, "is-enum")
    assert compute_mu(c6) == 1


def test_unknown_decider_and_negative_k(p4):
    with pytest.raises(ValueError):
        decide_gap(p4, 1, "magic")
    with pytest.raises(ValueError):
        decide_gap(p4, -1, "alg2")


def test_p4_configuration(p4):
    witness = find_p4_configuration(p4)
    assert witness.path == (0, 1, 2, 3)
    assert witness.matching.edges == {(1, 2)}
    assert witness.check()
    assert witness.augmented().edges == {(0, 1), (2, 3)}
    assert witness.to_document()["path"] == [0, 1, 2, 3]


@pytest.mark.parametrize("n", [3, 4, 5, 7])
def test_small_equimatchable_cycles(n):
    assert is_equimatchable(build_family("cycle", [n]))


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_graphs_are_equimatchable(n):
    assert is_equimatchable(build_family("complete", [n]))


def test_non_equimatchable_examples(p4):
    assert not is_equimatchable(p4)
    assert not is_equimatchable(build_family("cycle", [6]))


def test_almost_equimatchable(p4, gap_two):
    assert is_almost_equimatchable(p4)
    assert is_almost_equimatchable(p4, method="mu")
    assert not is_almost_equimatchable(gap_two)
    assert not is_almost_equimatchable(build_family("cycle", [7]))
    with pytest.raises(ValueError):
        is_almost_equimatchable(p4, method="guess")


def test_gap_pair_certificate(gap_two):
    small, large = gap_pair_certificate(gap_two, 2)
    assert (small.size, large.size) == (3, 5)
    assert small.covered <= large.covered
    assert gap_pair_certificate(gap_two, 3) is None


def test_shift_on_long_augmenting_path():
    p6 = build_family("path", [6])
    m = Matching(p6, frozenset({(1, 2), (3, 4)}))
    witness = shift_to_augmenting_p4(p6, m)
    assert witness.check()
    assert witness.matching.size == 2
    with pytest.raises(ValueError):
        shift_to_augmenting_p4(p6, Matching(p6, frozenset({(0, 1), (2, 3), (4, 5)})))


def test_kp4_mu():
    assert compute_mu(make_kp4(3)) == 3


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_deciders_agree_with_brute_force(g):
    _, beta = minimum_maximal_matching_oracle(g)
    nu = matching_number(g)
    for k in range(g.n // 2 + 1):
        expected = nu - beta >= k
        for alg in DECIDERS:
            verdict = decide_gap(g, k, alg)
            assert bool(verdict) == expected, (alg, k)
            assert verdict.verify(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_p4_recognizer_matches_definition(g):
    assert is_equimatchable(g) == (len(maximal_matching_sizes(g)) == 1)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=9))
def test_shifting_yields_augmenting_p4_at_every_size(g):
    _, beta = minimum_maximal_matching_oracle(g)
    nu = matching_number(g)
    for k in range(beta, nu):
        witness = find_augmenting_p4_matching(g, k)
        assert isinstance(witness, AugmentingP4Witness)
        assert witness.matching.size == k
        assert witness.check()
        bigger = witness.augmented()
        assert bigger.size == k + 1 and is_maximal(g, bigger)
    assert find_augmenting_p4_matching(g, nu) is None


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_almost_equimatchable_variants_agree(g):
    assert is_almost_equimatchable(g) == is_almost_equimatchable(g, method="mu")
