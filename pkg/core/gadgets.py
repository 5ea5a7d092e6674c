"""
core/gadgets.py

Extremal families and reduction gadgets, each paired with the identity it
is known to satisfy.

  make_k_of(G)             (G + G) joined with K_{2|V|}; mu = alpha(G)
  make_prism(k)            C_{2k+1} x K_2; eta = 2 nu - 2
  make_poljak_instance(G)  complement of the double subdivision of a cubic G;
                           eta = tau(G) + |E(G)|
  make_kp4(k)              k disjoint P4s (optionally tied by a clique); mu = eta = k
  gap_two_fixture()        10 vertices, mu = 2, no two disjoint augmenting P4s
"""

from typing import FrozenSet, Iterable

from core.errors import GraphError, HypothesisError, MatchingError
from core.graph import (
    Graph,
    build_family,
    cartesian_product,
    complement,
    copies,
    disjoint_union,
    double_subdivide,
    edge,
    join,
    vertex_cover_number,
)
from core.matching import Matching

GAP_TWO_EDGES = [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (3, 8), (8, 9)]
GAP_TWO_MMM = frozenset({(1, 2), (5, 6), (3, 8)})


def make_k_of(g: Graph) -> Graph:
    """
    K(G). Vertices 0..n-1 and n..2n-1 are the two copies of G, 2n..4n-1
    the clique.
    """
    if g.n < 1:
        raise GraphError("K(G) needs at least one vertex")
    return join(disjoint_union(g, g), build_family("complete", [2 * g.n]))


def k_of_maximal_matching(g: Graph, iset: Iterable[int]) -> Matching:
    """
    The maximal matching of K(G) exposing exactly I, an independent set of
    2G of even size: every other vertex of 2G is matched to its own clique
    vertex, the leftover clique vertices are paired up.
    """
    n = g.n
    iset = frozenset(iset)
    two_g = copies(g, 2)
    if any(not 0 <= v < 2 * n for v in iset):
        raise MatchingError("I must lie inside the two copies of G")
    if not two_g.is_independent(iset):
        raise MatchingError("I is not independent in 2G")
    if len(iset) % 2:
        raise MatchingError("I must have even size")

    k = make_k_of(g)
    others = [v for v in range(2 * n) if v not in iset]
    edges = {edge(v, 2 * n + i) for i, v in enumerate(others)}
    spare = list(range(2 * n + len(others), 4 * n))
    edges |= {edge(spare[i], spare[i + 1]) for i in range(0, len(spare), 2)}
    return Matching(k, frozenset(edges))


def make_prism(k: int) -> Graph:
    """C_{2k+1} x K_2; vertex (i, j) is 2i + j."""
    if k < 2:
        raise GraphError(f"prism needs k >= 2, got {k}")
    return cartesian_product(build_family("cycle", [2 * k + 1]), build_family("path", [2]))


def _is_cubic(g: Graph) -> bool:
    return g.n >= 4 and all(g.degree(v) == 3 for v in g.vertices)


def make_poljak_instance(g: Graph) -> Graph:
    """
    G' = complement of the double subdivision of G. V(G) stays a clique on
    0..n-1; edge i contributes the pair n + 2i, n + 2i + 1.
    """
    if not _is_cubic(g):
        raise HypothesisError("cubic", "input must be 3-regular with at least 4 vertices")
    return complement(double_subdivide(g))


def poljak_identity_holds(g: Graph) -> bool:
    return vertex_cover_number(double_subdivide(g)) == vertex_cover_number(g) + g.m


def cover_from_equimatchable_set(g: Graph, s: Iterable[int]) -> FrozenSet[int]:
    """
    Vertex cover C of G with |C| <= |S| - |E(G)| from an equimatchable set S of
    the Poljak instance of G (S covers the double subdivision).

    Per subdivided edge u-x-y-v exactly one of x, y is kept: when both are
    in S, y is swapped for v.
    """
    chosen = set(s)
    for i, (u, v) in enumerate(g.sorted_edges()):
        x, y = g.n + 2 * i, g.n + 2 * i + 1
        if x not in chosen and y not in chosen:
            raise HypothesisError(
                "vertex cover of the subdivision",
                f"edge {x}-{y} of the subdivided edge {u} {v} is not covered",
            )
        if x in chosen and y in chosen:
            chosen.discard(y)
            chosen.add(v)
        elif x in chosen and v not in chosen:
            raise HypothesisError("vertex cover of the subdivision", f"edge {y}-{v} is not covered")
        elif y in chosen and x not in chosen and u not in chosen:
            raise HypothesisError("vertex cover of the subdivision", f"edge {u}-{x} is not covered")
    return frozenset(v for v in chosen if v < g.n)


def make_kp4(k: int, connected: bool = False) -> Graph:
    """
    kP4 with copy i on 4i..4i+3. The connected variant turns the neighbours
    4i + 1 of the leaves 4i into a clique.
    """
    if k < 1:
        raise GraphError(f"kP4 needs k >= 1, got {k}")
    g = copies(build_family("path", [4]), k)
    if not connected:
        return g
    extra = {edge(4 * i + 1, 4 * j + 1) for i in range(k) for j in range(i + 1, k)}
    return Graph(g.n, g.edges | extra)


def gap_two_fixture() -> Graph:
    return Graph.from_edges(10, GAP_TWO_EDGES)
