"""
core/gap.py

Matching gap mu(G) = nu(G) - beta(G).

Deciders for "mu(G) >= k", all exact:

  brute     minimum maximal matching by enumeration
  is-enum   independent sets I of size |V| - 2(nu - k) such that G - I has
            a perfect matching (XP in |V|/2 - beta)
  alg1      Gallai-Edmonds guess of (I, M_A*, M_A) and per-component
            perfect / near-perfect matchings (XP in k + |A(G)|)
  alg2      a fixed maximum matching M*, guesses of I inside V(M*) and a
            compensating set Z (XP in k + rho(G))

Every YES verdict carries a maximal matching of size nu - k; alg1/alg2
additionally return their certificates, which re-verify independently.
"""

from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Tuple, Union

from core.gallai_edmonds import GallaiEdmondsDecomposition, decompose
from core.graph import Graph, connected_components, edge, independent_sets
from core.logger import get_logger
from core.matching import (
    Matching,
    augment,
    augmenting_path,
    as_matching,
    enumerate_maximal_matchings,
    extend_maximal_preserving_coverage,
    extend_to_maximal,
    is_maximal,
    matching_covering,
    matching_number,
    maximal_matching_of_size,
    maximum_matching,
    minimal_covering_matchings,
    minimum_maximal_matching_oracle,
    perfect_matching,
)

logger = get_logger(__name__)

Path4 = Tuple[int, int, int, int]


# ---------- witnesses and certificates ----------

@dataclass(frozen=True)
class AugmentingP4Witness:
    """A maximal matching M and an M-augmenting path u-w-y-v with wy in M."""
    matching: Matching
    path: Path4

    def augmented(self) -> Matching:
        """M - wy + {uw, yv}: maximal, one edge larger."""
        u, w, y, v = self.path
        return augment(self.matching, [u, w, y, v])

    def check(self) -> bool:
        g = self.matching.graph
        u, w, y, v = self.path
        exposed = self.matching.exposed
        return (
            is_maximal(g, self.matching)
            and edge(w, y) in self.matching.edges
            and u in exposed and v in exposed
            and g.has_edge(u, w) and g.has_edge(y, v)
        )

    def to_document(self) -> Dict:
        return {"matching": self.matching.to_document(), "path": list(self.path)}


@dataclass(frozen=True)
class GapCertificateA:
    """(I, M_A, M_A*, M_X, v_X) from the Gallai-Edmonds characterisation."""
    k: int
    I: FrozenSet[int]
    M_A: Matching
    M_A_star: Matching
    component_matchings: Tuple[Matching, ...]
    exposed_roots: FrozenSet[int]

    def reassemble(self) -> Matching:
        edges = set(self.M_A.edges)
        for mx in self.component_matchings:
            edges |= mx.edges
        return Matching(self.M_A.graph, frozenset(edges))

    def verify(self, g: Graph) -> bool:
        m = self.reassemble()
        return (
            len(self.I) == 2 * self.k
            and g.is_independent(self.I)
            and not (self.I & self.M_A.covered)
            and m.exposed == self.I | self.exposed_roots
            and is_maximal(g, m)
            and m.size == matching_number(g) - self.k
        )

    def to_document(self) -> Dict:
        return {
            "type": "A",
            "k": self.k,
            "I": sorted(self.I),
            "M_A": [list(e) for e in self.M_A.sorted_edges()],
            "M_A_star": [list(e) for e in self.M_A_star.sorted_edges()],
            "component_matchings": [[list(e) for e in mx.sorted_edges()] for mx in self.component_matchings],
            "exposed_roots": sorted(self.exposed_roots),
            "matching": self.reassemble().to_document(),
        }


@dataclass(frozen=True)
class GapCertificateB:
    """(M*, I, Z) with T, U and the perfect matching of H."""
    k: int
    M_star: Matching
    I: FrozenSet[int]
    Z: FrozenSet[int]
    T: FrozenSet[int]
    U: FrozenSet[int]
    H_matching: Matching

    def reassemble(self) -> Matching:
        return self.H_matching

    def verify(self, g: Graph) -> bool:
        m = self.H_matching
        exposed = self.I | self.Z | self.U
        nbr_i = g.neighbourhood(self.I)
        return (
            len(self.I) == 2 * self.k
            and not (self.I & self.Z)
            and (self.I | self.Z) <= self.M_star.covered
            and self.T == self.M_star.exposed & nbr_i
            and self.U == self.M_star.exposed - nbr_i
            and len(self.Z) == len(self.T)
            and all(len(g.adjacency[z] & self.T) <= 1 for z in self.Z)
            and g.is_independent(exposed)
            and m.exposed == exposed
            and is_maximal(g, m)
            and m.size == self.M_star.size - self.k
        )

    def to_document(self) -> Dict:
        return {
            "type": "B",
            "k": self.k,
            "M_star": [list(e) for e in self.M_star.sorted_edges()],
            "I": sorted(self.I),
            "Z": sorted(self.Z),
            "T": sorted(self.T),
            "U": sorted(self.U),
            "H_matching": [list(e) for e in self.H_matching.sorted_edges()],
            "matching": self.H_matching.to_document(),
        }


Certificate = Union[GapCertificateA, GapCertificateB]


@dataclass(frozen=True)
class GapVerdict:
    k: int
    holds: bool
    method: str
    matching: Optional[Matching] = None
    certificate: Optional[Certificate] = None

    def __bool__(self) -> bool:
        return self.holds

    def verify(self, g: Graph) -> bool:
        """A NO needs no witness; a YES must carry a maximal matching of size nu - k."""
        if not self.holds:
            return True
        if self.matching is None or not is_maximal(g, self.matching):
            return False
        if self.matching.size != matching_number(g) - self.k:
            return False
        return self.certificate is None or self.certificate.verify(g)

    def to_document(self) -> Dict:
        doc = {"k": self.k, "answer": "YES" if self.holds else "NO", "method": self.method}
        if self.matching is not None:
            doc["matching"] = self.matching.to_document()
        if self.certificate is not None:
            doc["certificate"] = self.certificate.to_document()
        return doc


def _check_k(k: int):
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")


# ---------- brute force ----------

def gap_at_least_bruteforce(g: Graph, k: int) -> GapVerdict:
    _check_k(k)
    nu = matching_number(g)
    if k > nu:
        return GapVerdict(k, False, "brute")
    mmm, beta = minimum_maximal_matching_oracle(g)
    if nu - beta < k:
        return GapVerdict(k, False, "brute")
    return GapVerdict(k, True, "brute", matching=extend_maximal_preserving_coverage(g, mmm, nu - k))


def gap_pair_certificate(g: Graph, k: int) -> Optional[Tuple[Matching, Matching]]:
    """Two maximal matchings whose sizes differ by at least k, or None."""
    _check_k(k)
    mmm, beta = minimum_maximal_matching_oracle(g)
    nu = matching_number(g)
    if nu - beta < k:
        return None
    return mmm, extend_maximal_preserving_coverage(g, mmm, nu)


# ---------- independent-set enumeration ----------

def gap_decide_is_enum(g: Graph, k: int) -> GapVerdict:
    _check_k(k)
    nu = matching_number(g)
    target = nu - k
    if target < 0:
        return GapVerdict(k, False, "is-enum")
    size = g.n - 2 * target
    if size < 0:
        return GapVerdict(k, False, "is-enum")
    everything = frozenset(g.vertices)
    tried = 0
    for iset in independent_sets(g, size):
        tried += 1
        pm = perfect_matching(g, everything - set(iset))
        if pm is not None:
            logger.debug("is-enum: k=%d accepted after %d independent sets", k, tried)
            return GapVerdict(k, True, "is-enum", matching=pm)
    logger.debug("is-enum: k=%d rejected after %d independent sets", k, tried)
    return GapVerdict(k, False, "is-enum")


# ---------- Gallai-Edmonds guesses ----------

def _star_matchings(g: Graph, ge: GallaiEdmondsDecomposition) -> Iterator[Tuple[Matching, FrozenSet[int]]]:
    """
    Matchings of |A| edges joining each A-vertex to a distinct D-component.
    Only the set of touched components matters downstream, so one
    matching per component set is produced (A-vertex to its lowest
    neighbour in the chosen component).
    """
    a_sorted = sorted(ge.A)
    options = {a: ge.components_adjacent_to(g, a) for a in a_sorted}
    seen = set()
    chosen: List[int] = []

    def assign(i: int) -> Iterator[Tuple[Matching, FrozenSet[int]]]:
        if i == len(a_sorted):
            key = frozenset(chosen)
            if key in seen:
                return
            seen.add(key)
            edges = frozenset(
                edge(a, min(g.adjacency[a] & ge.d_components[c])) for a, c in zip(a_sorted, chosen)
            )
            yield Matching(g, edges), key
            return
        for c in options[a_sorted[i]]:
            if c in chosen:
                continue
            chosen.append(c)
            yield from assign(i + 1)
            chosen.pop()

    yield from assign(0)


def gap_decide_alg1(g: Graph, k: int) -> GapVerdict:
    _check_k(k)
    if k > matching_number(g):
        return GapVerdict(k, False, "alg1")
    ge = decompose(g)
    c_comps = connected_components(g, ge.C)
    stars = list(_star_matchings(g, ge))
    a_sorted = sorted(ge.A)
    guesses = 0

    for iset_t in independent_sets(g, 2 * k):
        iset = frozenset(iset_t)
        closed_i = g.closed_neighbourhood(iset)
        targets = [a for a in a_sorted if a not in iset]
        saturating = list(minimal_covering_matchings(g, targets, avoid=iset))
        for star, touched in stars:
            for m_a in saturating:
                guesses += 1
                removed = iset | m_a.covered
                parts: List[Matching] = []
                roots = set()
                good = True

                full = list(c_comps) + [ge.d_components[c] for c in sorted(touched)]
                for comp in full:
                    pm = perfect_matching(g, comp - removed)
                    if pm is None:
                        good = False
                        break
                    parts.append(pm)
                if not good:
                    continue

                for ci, comp in enumerate(ge.d_components):
                    if ci in touched:
                        continue
                    rest = comp - removed
                    found = None
                    for vx in sorted(rest - closed_i):
                        pm = perfect_matching(g, rest - {vx})
                        if pm is not None:
                            found = (vx, pm)
                            break
                    if found is None:
                        good = False
                        break
                    roots.add(found[0])
                    parts.append(found[1])

                if good:
                    cert = GapCertificateA(
                        k=k,
                        I=iset,
                        M_A=m_a,
                        M_A_star=star,
                        component_matchings=tuple(parts),
                        exposed_roots=frozenset(roots),
                    )
                    logger.debug("alg1: k=%d accepted after %d guesses", k, guesses)
                    return GapVerdict(k, True, "alg1", matching=cert.reassemble(), certificate=cert)

    logger.debug("alg1: k=%d rejected after %d guesses", k, guesses)
    return GapVerdict(k, False, "alg1")


# ---------- fixed maximum matching ----------

def gap_decide_alg2(g: Graph, k: int) -> GapVerdict:
    _check_k(k)
    m_star = maximum_matching(g)
    if k > m_star.size:
        return GapVerdict(k, False, "alg2")
    covered = m_star.covered
    exposed = m_star.exposed
    everything = frozenset(g.vertices)
    guesses = 0

    for iset_t in independent_sets(g, 2 * k, candidates=covered):
        iset = frozenset(iset_t)
        nbr_i = g.neighbourhood(iset)
        t_set = exposed & nbr_i
        u_set = exposed - nbr_i
        z_candidates = [
            z for z in sorted(covered - iset - nbr_i)
            if len(g.adjacency[z] & t_set) <= 1 and not (g.adjacency[z] & u_set)
        ]
        for z_t in independent_sets(g, len(t_set), candidates=z_candidates):
            guesses += 1
            z_set = frozenset(z_t)
            pm = perfect_matching(g, everything - iset - z_set - u_set)
            if pm is not None:
                cert = GapCertificateB(
                    k=k, M_star=m_star, I=iset, Z=z_set, T=t_set, U=u_set, H_matching=pm
                )
                logger.debug("alg2: k=%d accepted after %d guesses", k, guesses)
                return GapVerdict(k, True, "alg2", matching=pm, certificate=cert)

    logger.debug("alg2: k=%d rejected after %d guesses", k, guesses)
    return GapVerdict(k, False, "alg2")


DECIDERS: Dict[str, Callable[[Graph, int], GapVerdict]] = {
    "brute": gap_at_least_bruteforce,
    "is-enum": gap_decide_is_enum,
    "alg1": gap_decide_alg1,
    "alg2": gap_decide_alg2,
}


def decide_gap(g: Graph, k: int, alg: str = "alg2") -> GapVerdict:
    try:
        decider = DECIDERS[alg]
    except KeyError:
        raise ValueError(f"unknown decider {alg!r}; choose from {', '.join(DECIDERS)}") from None
    verdict = decider(g, k)
    logger.info("mu >= %d by %s: %s", k, alg, "YES" if verdict else "NO")
    return verdict


# ---------- augmenting P4s ----------

def _oriented(path: List[int]) -> Path4:
    u, w, y, v = path
    return (u, w, y, v) if u < v else (v, y, w, u)


def augmenting_p4s(g: Graph, m) -> List[Path4]:
    """Every augmenting P4 u-w-y-v of M (wy in M, u and v exposed), oriented u < v."""
    m = as_matching(g, m)
    exposed = m.exposed
    found = set()
    for w, y in m.sorted_edges():
        for a, b in ((w, y), (y, w)):
            for u in g.adjacency[a] & exposed:
                for v in g.adjacency[b] & exposed:
                    if u != v:
                        found.add(_oriented([u, a, b, v]))
    return sorted(found)


def has_disjoint_augmenting_p4s(g: Graph, m) -> bool:
    paths = augmenting_p4s(g, m)
    for i, p in enumerate(paths):
        for q in paths[i + 1:]:
            if not set(p) & set(q):
                return True
    return False


def find_p4_configuration(g: Graph) -> Optional[AugmentingP4Witness]:
    """
    A maximal matching with an augmenting P4, found in polynomial time, or None.

    For a path u-w-y-v with u, v non-adjacent, such a matching exists iff
    G - {u, v, w, y} has a matching covering N({u, v}) - {w, y}; that
    matching plus wy is then completed greedily inside G - u - v.
    """
    everything = frozenset(g.vertices)
    for w, y in g.sorted_edges():
        for u in sorted(g.adjacency[w] - {y}):
            for v in sorted(g.adjacency[y] - {w}):
                if u == v or g.has_edge(u, v):
                    continue
                needed = (g.adjacency[u] | g.adjacency[v]) - {w, y}
                cover = matching_covering(g, needed, within=everything - {u, v, w, y})
                if cover is None:
                    continue
                base = Matching(g, cover.edges | {edge(w, y)})
                m = extend_to_maximal(g, base, within=everything - {u, v})
                return AugmentingP4Witness(m, _oriented([u, w, y, v]))
    return None


def is_equimatchable(g: Graph) -> bool:
    return find_p4_configuration(g) is None


def shift_to_augmenting_p4(g: Graph, m) -> AugmentingP4Witness:
    """
    Same-size maximal matching with an explicit augmenting P4, from a
    maximal non-maximum M.

    Take an augmenting path x1..xl; while some x in Exp(M) other than xl is
    adjacent to an even-position xi (4 <= i <= l-2), restart from x xi ... xl.
    Then shift M one step towards xl: x1 x2 x3 x4 is augmenting.
    """
    m = as_matching(g, m)
    if not is_maximal(g, m):
        raise ValueError("matching is not maximal")
    path = augmenting_path(g, m)
    if path is None:
        raise ValueError("matching is already maximum")

    exposed = m.exposed
    shortened = True
    while shortened and len(path) > 4:
        shortened = False
        last = path[-1]
        for j in range(3, len(path) - 2, 2):
            hits = sorted((g.adjacency[path[j]] & exposed) - {last})
            if hits:
                path = [hits[0]] + path[j:]
                shortened = True
                break

    if len(path) > 4:
        drop = {edge(path[j], path[j + 1]) for j in range(3, len(path) - 2, 2)}
        add = {edge(path[j], path[j + 1]) for j in range(4, len(path) - 1, 2)}
        m = Matching(g, (m.edges - drop) | add)
    return AugmentingP4Witness(m, _oriented(path[:4]))


def find_augmenting_p4_matching(g: Graph, k: int) -> Optional[AugmentingP4Witness]:
    """A maximal matching of size k with an augmenting P4; None unless beta <= k < nu."""
    if k < 0 or k >= matching_number(g):
        return None
    m = maximal_matching_of_size(g, k)
    if m is None:
        return None
    return shift_to_augmenting_p4(g, m)


# ---------- mu ----------

def compute_mu(g: Graph, decider: str = "alg2") -> int:
    """
    Largest k with mu(G) >= k. Equimatchable graphs are recognised in
    polynomial time first; otherwise k = 1 holds and k grows while the
    decider keeps answering YES.
    """
    if g.m == 0 or is_equimatchable(g):
        return 0
    nu = matching_number(g)
    k = 1
    while k < nu and decide_gap(g, k + 1, decider):
        k += 1
    return k


def is_almost_equimatchable(g: Graph, method: str = "exhaustive", decider: str = "alg2") -> bool:
    """
    mu(G) = 1. The exhaustive variant checks directly that some maximal
    matching has an augmenting P4 and that all such matchings share one size.
    """
    if method == "mu":
        return compute_mu(g, decider) == 1
    if method != "exhaustive":
        raise ValueError(f"unknown method {method!r}")
    sizes = {m.size for m in enumerate_maximal_matchings(g) if augmenting_p4s(g, m)}
    return len(sizes) == 1
