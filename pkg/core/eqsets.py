"""
core/eqsets.py

Equimatchable sets and the equimatchability defect eta(G).

A vertex set S is equimatchable when all maximal matchings covering S have
the same size (vacuously so when no matching covers S). eta(G) is the
smallest size of such a set; it is 0 exactly for equimatchable graphs.

Four ways to get eta, cheapest assumptions last:
  compute_eta_xp          subsets by size, each tested via minimal covering matchings
  eta_definitional        subsets against every non-maximum maximal matching
  eta_via_hitting_set     minimum hitting set of Exp2(G)
  eta_expandable_shortcut |V| - omega(G), valid for expandable graphs with
                          a perfect matching
"""

import enum
import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from core.errors import GraphError, HypothesisError
from core.gap import compute_mu, find_p4_configuration
from core.graph import Graph, edge, induced_subgraph, maximum_clique
from core.hitting_set import is_hitting_set, minimum_hitting_set
from core.logger import get_logger
from core.matching import (
    Matching,
    enumerate_maximal_matchings,
    has_matching_covering,
    has_perfect_matching,
    matching_number,
    maximum_matching,
    minimal_covering_matchings,
)

logger = get_logger(__name__)


class Verdict(enum.Enum):
    EQUIMATCHABLE = "equimatchable"
    NOT_EQUIMATCHABLE = "not-equimatchable"
    VACUOUS = "vacuous"


@dataclass(frozen=True)
class EquimatchableSetReport:
    s: FrozenSet[int]
    verdict: Verdict
    counterexample: Optional[Tuple[Matching, Matching]] = None
    size: Optional[int] = None  # common size of the covering maximal matchings

    @property
    def is_equimatchable(self) -> bool:
        """Vacuous sets count as equimatchable."""
        return self.verdict is not Verdict.NOT_EQUIMATCHABLE

    def to_document(self) -> Dict:
        doc = {"set": sorted(self.s), "verdict": self.verdict.value}
        if self.size is not None:
            doc["size"] = self.size
        if self.counterexample is not None:
            doc["counterexample"] = [m.to_document() for m in self.counterexample]
        return doc


@dataclass(frozen=True)
class EtaResult:
    eta: int
    witness: FrozenSet[int]
    method: str

    def to_document(self) -> Dict:
        return {"eta": self.eta, "witness": sorted(self.witness), "method": self.method}


@dataclass(frozen=True)
class Exp2Hypergraph:
    """Exposed sets of the second-best (size nu - 1) maximal matchings."""
    n: int
    hyperedges: Tuple[FrozenSet[int], ...]

    @property
    def uniformity(self) -> Optional[int]:
        sizes = {len(e) for e in self.hyperedges}
        if not sizes:
            return None
        if len(sizes) > 1:
            raise GraphError(f"hypergraph is not uniform: sizes {sorted(sizes)}")
        return sizes.pop()

    def is_hitting_set(self, s: Iterable[int]) -> bool:
        return is_hitting_set(s, self.hyperedges)

    def as_graph(self) -> Graph:
        """The 2-uniform case read as a graph on the same vertices."""
        if any(len(e) != 2 for e in self.hyperedges):
            raise GraphError("only a 2-uniform hypergraph can be read as a graph")
        return Graph(self.n, frozenset(edge(*sorted(e)) for e in self.hyperedges))

    def to_document(self) -> Dict:
        return {
            "n": self.n,
            "uniformity": self.uniformity,
            "hyperedges": [sorted(e) for e in self.hyperedges],
        }


# ---------- single sets ----------

def _lift(labels: Tuple[int, ...], m: Matching) -> FrozenSet:
    return frozenset(edge(labels[u], labels[v]) for u, v in m.edges)


def is_equimatchable_set(g: Graph, s: Iterable[int]) -> EquimatchableSetReport:
    """
    Every maximal matching covering S is a minimal covering matching M plus a
    maximal matching of G[Exp(M)]. So S is equimatchable iff each such
    G[Exp(M)] is equimatchable and |M| + nu(G[Exp(M)]) is the same for all M.
    """
    s = frozenset(s)
    outside = sorted(v for v in s if not 0 <= v < g.n)
    if outside:
        raise GraphError(f"vertices {outside} are not in the graph")
    if not has_matching_covering(g, s):
        return EquimatchableSetReport(s, Verdict.VACUOUS)

    everything = frozenset(g.vertices)
    seen: Optional[Tuple[int, Matching]] = None
    for m in minimal_covering_matchings(g, s):
        rest = everything - m.covered
        h, labels = induced_subgraph(g, rest)
        witness = find_p4_configuration(h)
        if witness is not None:
            small = Matching(g, m.edges | _lift(labels, witness.matching))
            large = Matching(g, m.edges | _lift(labels, witness.augmented()))
            logger.debug("set %s: G[Exp(M)] not equimatchable for M=%s", sorted(s), m.sorted_edges())
            return EquimatchableSetReport(s, Verdict.NOT_EQUIMATCHABLE, counterexample=(small, large))

        completed = Matching(g, m.edges | maximum_matching(g, rest).edges)
        if seen is None:
            seen = (completed.size, completed)
        elif completed.size != seen[0]:
            pair = sorted((seen[1], completed), key=lambda x: x.size)
            return EquimatchableSetReport(s, Verdict.NOT_EQUIMATCHABLE, counterexample=(pair[0], pair[1]))

    return EquimatchableSetReport(s, Verdict.EQUIMATCHABLE, size=seen[0])


# ---------- eta ----------

def compute_eta_xp(g: Graph) -> EtaResult:
    """Smallest equimatchable set, sizes ascending, lexicographic within a size."""
    for k in range(g.n + 1):
        for s in itertools.combinations(g.vertices, k):
            if is_equimatchable_set(g, s).is_equimatchable:
                return EtaResult(k, frozenset(s), "xp")
    # V(G) itself is always equimatchable or vacuous
    raise AssertionError("no equimatchable set found")


def eta_definitional(g: Graph) -> EtaResult:
    """S is equimatchable iff no non-maximum maximal matching covers it."""
    nu = matching_number(g)
    exposures = {m.exposed for m in enumerate_maximal_matchings(g) if m.size < nu}
    for k in range(g.n + 1):
        for s in itertools.combinations(g.vertices, k):
            if all(e & set(s) for e in exposures):
                return EtaResult(k, frozenset(s), "definitional")
    raise AssertionError("no equimatchable set found")


def build_exp2(g: Graph) -> Exp2Hypergraph:
    nu = matching_number(g)
    if nu == 0:
        return Exp2Hypergraph(g.n, ())
    found = {m.exposed for m in enumerate_maximal_matchings(g, size_cap=nu - 1) if m.size == nu - 1}
    hyperedges = tuple(sorted(found, key=lambda e: sorted(e)))
    logger.debug("Exp2: %d hyperedges on %d vertices", len(hyperedges), g.n)
    return Exp2Hypergraph(g.n, hyperedges)


def eta_via_hitting_set(g: Graph) -> EtaResult:
    exp2 = build_exp2(g)
    witness = minimum_hitting_set(g.n, exp2.hyperedges)
    return EtaResult(len(witness), witness, "hitting-set")


def is_expandable(g: Graph) -> bool:
    """G - u - v has a perfect matching for every non-adjacent pair u, v."""
    everything = frozenset(g.vertices)
    for u, v in itertools.combinations(g.vertices, 2):
        if not g.has_edge(u, v) and not has_perfect_matching(g, everything - {u, v}):
            return False
    return True


def eta_expandable_shortcut(g: Graph) -> EtaResult:
    """
    For an expandable graph with a perfect matching Exp2(G) is the
    complement of G, so eta(G) = tau(complement) = |V| - omega(G). The
    witness is everything outside a maximum clique.
    """
    if not has_perfect_matching(g):
        raise HypothesisError("perfect matching", "the graph has no perfect matching")
    if not is_expandable(g):
        raise HypothesisError("expandable", "some non-adjacent pair leaves no perfect matching")
    clique = maximum_clique(g)
    return EtaResult(g.n - len(clique), frozenset(g.vertices) - clique, "shortcut")


# ---------- cycles ----------

def eta_cycle_closed_form(n: int) -> int:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    if n in (3, 4, 5, 7):
        return 0
    if n % 2 == 0:
        return n // 2
    return (n - 3) // 2


def eta_cycle_witness(n: int) -> FrozenSet[int]:
    """A minimum equimatchable set of C_n under the path numbering of build_family."""
    eta_cycle_closed_form(n)
    if n in (3, 4, 5, 7):
        return frozenset()
    if n % 2 == 0:
        return frozenset(range(0, n, 2))
    k = (n - 1) // 2
    return frozenset(2 * i + 1 for i in range(k - 1))


# ---------- bounds ----------

def bound_witness_set(g: Graph) -> FrozenSet[int]:
    """V(M - e) for a maximum matching M and its first edge e: equimatchable, 2nu - 2 vertices."""
    m = maximum_matching(g)
    if m.size == 0:
        raise GraphError("the bound needs at least one edge")
    first = m.sorted_edges()[0]
    return m.covered - set(first)


@dataclass(frozen=True)
class BoundsReport:
    mu: int
    eta: int
    nu: int
    two_nu_minus_2: int
    holds: bool

    def to_document(self) -> Dict:
        return {
            "mu": self.mu,
            "eta": self.eta,
            "nu": self.nu,
            "two_nu_minus_2": self.two_nu_minus_2,
            "holds": self.holds,
        }


def check_bounds(g: Graph, decider: str = "alg2") -> BoundsReport:
    """mu <= eta always; eta <= 2 nu - 2 once there is an edge."""
    nu = matching_number(g)
    mu = compute_mu(g, decider)
    eta = eta_via_hitting_set(g).eta
    upper = 2 * nu - 2
    holds = mu <= eta and (g.m == 0 or eta <= upper)
    if not holds:
        logger.warning("bounds violated: mu=%d eta=%d 2nu-2=%d", mu, eta, upper)
    return BoundsReport(mu=mu, eta=eta, nu=nu, two_nu_minus_2=upper, holds=holds)


def covering_sizes(g: Graph, s: Iterable[int]) -> List[int]:
    """Distinct sizes of the maximal matchings covering S, by enumeration."""
    s = set(s)
    return sorted({m.size for m in enumerate_maximal_matchings(g) if s <= m.covered})
