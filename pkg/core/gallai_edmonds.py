"""
core/gallai_edmonds.py

Gallai-Edmonds decomposition (D, A, C).

D is computed with the deletion criterion: v is in D iff nu(G - v) = nu(G),
i.e. some maximum matching misses v. A = N(D) minus D, C = the rest.

g_ad is the bipartite graph on A and the contracted components of G[D]:
vertices 0..|A|-1 are the A-vertices in increasing order, vertex |A| + i is
component i of G[D]. Edges inside A are dropped. `ad_labels` maps each g_ad
vertex back: ("A", v) or ("D", i).
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from core.graph import Graph, connected_components
from core.logger import get_logger
from core.matching import has_perfect_matching, matching_number

logger = get_logger(__name__)


@dataclass(frozen=True)
class GallaiEdmondsDecomposition:
    D: FrozenSet[int]
    A: FrozenSet[int]
    C: FrozenSet[int]
    d_components: Tuple[FrozenSet[int], ...]
    g_ad: Graph
    ad_labels: Tuple[Tuple[str, int], ...]
    rho: int

    def component_of(self, v: int) -> Optional[int]:
        """Index of the D-component containing v, or None if v is not in D."""
        for i, comp in enumerate(self.d_components):
            if v in comp:
                return i
        return None

    def components_adjacent_to(self, g: Graph, a: int) -> List[int]:
        return sorted({i for i, comp in enumerate(self.d_components) if g.adjacency[a] & comp})

    def to_document(self) -> Dict:
        return {
            "D": sorted(self.D),
            "A": sorted(self.A),
            "C": sorted(self.C),
            "components": [sorted(c) for c in self.d_components],
            "rho": self.rho,
        }


def is_factor_critical(g: Graph, within: Optional[FrozenSet[int]] = None) -> bool:
    """Every single-vertex deletion of G[within] leaves a perfect matching."""
    vertices = frozenset(g.vertices) if within is None else frozenset(within)
    if len(vertices) % 2 == 0:
        return len(vertices) == 0
    return all(has_perfect_matching(g, vertices - {v}) for v in sorted(vertices))


def decompose(g: Graph) -> GallaiEdmondsDecomposition:
    nu = matching_number(g)
    everything = frozenset(g.vertices)
    D = frozenset(v for v in g.vertices if matching_number(g, everything - {v}) == nu)
    A = g.neighbourhood(D) - D
    C = everything - D - A
    comps = tuple(connected_components(g, D))

    if __debug__:
        for comp in comps:
            assert is_factor_critical(g, comp), f"D-component {sorted(comp)} is not factor-critical"

    a_sorted = sorted(A)
    labels: List[Tuple[str, int]] = [("A", a) for a in a_sorted]
    labels += [("D", i) for i in range(len(comps))]
    ad_edges = set()
    rho = 1
    for ai, a in enumerate(a_sorted):
        touching = [i for i, comp in enumerate(comps) if g.adjacency[a] & comp]
        for i in touching:
            ad_edges.add((ai, len(a_sorted) + i))
        rho = max(rho, len(touching))
    g_ad = Graph(len(labels), frozenset(ad_edges))

    logger.debug("decomposition: |D|=%d |A|=%d |C|=%d rho=%d", len(D), len(A), len(C), rho)
    return GallaiEdmondsDecomposition(
        D=D, A=A, C=C, d_components=comps, g_ad=g_ad, ad_labels=tuple(labels), rho=rho
    )


def rho(g: Graph) -> int:
    return decompose(g).rho
