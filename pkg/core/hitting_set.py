# core/hitting_set.py
"""
Exact minimum hitting set of a small hypergraph.

Hyperedges are kept as bitmasks. Search branches on the unhit hyperedge with
the fewest vertices (one branch per vertex of it) and prunes with a greedy
packing of pairwise disjoint unhit hyperedges, each of which needs its own
vertex. The greedy cover seeds the incumbent.
"""

from typing import FrozenSet, Iterable, List

from core.logger import get_logger

logger = get_logger(__name__)


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def reduce_hyperedges(masks: Iterable[int]) -> List[int]:
    """Drop duplicates and every hyperedge that contains another one."""
    unique = sorted(set(masks), key=lambda m: (_popcount(m), m))
    kept: List[int] = []
    for m in unique:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def greedy_hitting_set(n: int, hyperedges: Iterable[Iterable[int]]) -> FrozenSet[int]:
    """Repeatedly take the vertex in most unhit hyperedges (lowest index on ties)."""
    pending = reduce_hyperedges(_mask(e) for e in hyperedges)
    chosen = 0
    while pending:
        best, best_count = -1, -1
        for v in range(n):
            count = sum(1 for m in pending if m >> v & 1)
            if count > best_count:
                best, best_count = v, count
        chosen |= 1 << best
        pending = [m for m in pending if not m >> best & 1]
    return frozenset(_bits(chosen))


def _packing_bound(pending: List[int]) -> int:
    used, count = 0, 0
    for m in pending:
        if not m & used:
            used |= m
            count += 1
    return count


def minimum_hitting_set(n: int, hyperedges: Iterable[Iterable[int]]) -> FrozenSet[int]:
    """
    A minimum set of vertices meeting every hyperedge. Vertices are 0..n-1.
    An empty hyperedge cannot be hit and raises ValueError.
    """
    edges = [frozenset(e) for e in hyperedges]
    if any(not e for e in edges):
        raise ValueError("hypergraph has an empty hyperedge")
    for e in edges:
        bad = [v for v in e if not 0 <= v < n]
        if bad:
            raise ValueError(f"hyperedge vertices {sorted(bad)} are outside 0..{n - 1}")

    masks = reduce_hyperedges(_mask(e) for e in edges)
    if not masks:
        return frozenset()

    incumbent = [_mask(greedy_hitting_set(n, edges))]
    nodes = [0]

    def search(chosen: int, pending: List[int]):
        nodes[0] += 1
        if not pending:
            if _popcount(chosen) < _popcount(incumbent[0]):
                incumbent[0] = chosen
            return
        if _popcount(chosen) + _packing_bound(pending) >= _popcount(incumbent[0]):
            return
        branch_on = min(pending, key=lambda m: (_popcount(m), m))
        for v in _bits(branch_on):
            pick = 1 << v
            search(chosen | pick, [m for m in pending if not m & pick])

    search(0, masks)
    logger.debug("hitting set: %d hyperedges, %d nodes, optimum %d", len(masks), nodes[0], _popcount(incumbent[0]))
    return frozenset(_bits(incumbent[0]))


def is_hitting_set(s: Iterable[int], hyperedges: Iterable[Iterable[int]]) -> bool:
    chosen = set(s)
    return all(chosen & set(e) for e in hyperedges)
