"""
core/matching.py

Cardinality matching engine.

- maximum_matching: Edmonds' blossom search, one root at a time, returning
  explicit augmenting paths so callers (coverage-preserving extension, P4 shifting)
  can work with them.
- enumerate_maximal_matchings: exhaustive, for desk-scale oracles.
- matching_covering: "is there a matching covering S" reduced to a perfect
  matching question on an augmented graph.

Every function taking `within` works on the induced subgraph G[within]
without relabelling. Tie-breaking is always lowest vertex first.
"""

import math
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from core.errors import MatchingError
from core.graph import Edge, Graph, edge
from core.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Matching:
    graph: Graph
    edges: FrozenSet[Edge]

    def __post_init__(self):
        edges = frozenset(edge(u, v) for u, v in self.edges)
        used: Set[int] = set()
        for u, v in sorted(edges):
            if (u, v) not in self.graph.edges:
                raise MatchingError(f"edge ({u}, {v}) is not in the graph")
            if u in used or v in used:
                raise MatchingError(f"edge ({u}, {v}) shares a vertex with another edge")
            used.update((u, v))
        object.__setattr__(self, "edges", edges)

    @classmethod
    def empty(cls, g: Graph) -> "Matching":
        return cls(g, frozenset())

    @classmethod
    def from_mate(cls, g: Graph, mate: Sequence[int]) -> "Matching":
        return cls(g, frozenset((v, w) for v, w in enumerate(mate) if w > v))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def covered(self) -> FrozenSet[int]:
        """V(M)."""
        return frozenset(v for e in self.edges for v in e)

    @property
    def exposed(self) -> FrozenSet[int]:
        """Exp(M) = V(G) minus V(M)."""
        return frozenset(self.graph.vertices) - self.covered

    def mate(self) -> Dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u], out[v] = v, u
        return out

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def covers(self, vertices: Iterable[int]) -> bool:
        return set(vertices) <= self.covered

    def to_document(self) -> Dict:
        return {
            "size": self.size,
            "edges": [list(e) for e in self.sorted_edges()],
            "exposed": sorted(self.exposed),
        }


@dataclass(frozen=True)
class MatchingMetrics:
    n: int
    nu: int
    beta: Optional[int] = None

    @property
    def mu(self) -> Optional[int]:
        return None if self.beta is None else self.nu - self.beta

    @property
    def sigma(self) -> float:
        return self.n / 2 - self.nu

    def to_document(self) -> Dict:
        return {"nu": self.nu, "beta": self.beta, "mu": self.mu, "sigma": self.sigma}


# ---------- helpers ----------

def as_matching(g: Graph, m) -> Matching:
    """Accept a Matching or an iterable of edges; reject foreign matchings."""
    if isinstance(m, Matching):
        if m.graph != g:
            return Matching(g, m.edges)
        return m
    return Matching(g, frozenset(edge(u, v) for u, v in m))


def _allowed(g: Graph, within: Optional[Iterable[int]]) -> List[bool]:
    if within is None:
        return [True] * g.n
    mask = [False] * g.n
    for v in within:
        mask[v] = True
    return mask


def _sorted_adjacency(g: Graph) -> List[List[int]]:
    return [sorted(g.adjacency[v]) for v in g.vertices]


def _blossom_search(adj: List[List[int]], allowed: List[bool], mate: List[int], root: int) -> Optional[List[int]]:
    """
    One Edmonds search from an exposed root. Returns the augmenting path
    as a vertex list starting at `root`, or None.
    """
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: List[bool]):
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    used[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if not allowed[to] or base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if allowed[i] and blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    path = []
                    w = to
                    while w != -1:
                        pw = parent[w]
                        path += [w, pw]
                        w = mate[pw]
                    path.reverse()
                    return path
                used[mate[to]] = True
                queue.append(mate[to])
    return None


def _apply_path(mate: List[int], path: Sequence[int]):
    for i in range(0, len(path) - 1, 2):
        a, b = path[i], path[i + 1]
        mate[a], mate[b] = b, a


def _mate_list(g: Graph, m: Optional[Matching]) -> List[int]:
    mate = [-1] * g.n
    if m is not None:
        for u, v in m.edges:
            mate[u], mate[v] = v, u
    return mate


# ---------- maximum matching ----------

def augmenting_path(g: Graph, m, within: Optional[Iterable[int]] = None) -> Optional[List[int]]:
    """
    An M-augmenting path (vertex list, exposed endpoints first and last),
    searching from exposed roots in index order; None if M is maximum.
    """
    m = as_matching(g, m)
    allowed = _allowed(g, within)
    adj = _sorted_adjacency(g)
    mate = _mate_list(g, m)
    for root in g.vertices:
        if allowed[root] and mate[root] == -1:
            path = _blossom_search(adj, allowed, mate, root)
            if path:
                return path
    return None


def augment(m: Matching, path: Sequence[int]) -> Matching:
    """M symmetric-difference the path edges."""
    path_edges = {edge(path[i], path[i + 1]) for i in range(len(path) - 1)}
    return Matching(m.graph, m.edges ^ path_edges)


def maximum_matching(
    g: Graph, within: Optional[Iterable[int]] = None, initial: Optional[Matching] = None
) -> Matching:
    """
    Maximum matching of G[within], optionally grown from `initial` (which
    must lie inside `within`); every vertex covered by `initial` stays covered.
    """
    allowed = _allowed(g, within)
    adj = _sorted_adjacency(g)
    mate = _mate_list(g, initial)
    for root in g.vertices:
        if allowed[root] and mate[root] == -1:
            path = _blossom_search(adj, allowed, mate, root)
            if path:
                _apply_path(mate, path)
    return Matching.from_mate(g, mate)


def matching_number(g: Graph, within: Optional[Iterable[int]] = None) -> int:
    return maximum_matching(g, within).size


def perfect_matching(g: Graph, within: Optional[Iterable[int]] = None) -> Optional[Matching]:
    vertices = set(g.vertices) if within is None else set(within)
    if len(vertices) % 2:
        return None
    m = maximum_matching(g, vertices)
    return m if 2 * m.size == len(vertices) else None


def has_perfect_matching(g: Graph, within: Optional[Iterable[int]] = None) -> bool:
    return perfect_matching(g, within) is not None


def greedy_maximal_matching(g: Graph, within: Optional[Iterable[int]] = None) -> Matching:
    return extend_to_maximal(g, Matching.empty(g), within)


def extend_to_maximal(g: Graph, m: Matching, within: Optional[Iterable[int]] = None) -> Matching:
    """Add edges of G[within] in lexicographic order until M is maximal there."""
    allowed = _allowed(g, within)
    mate = _mate_list(g, m)
    for u, v in g.sorted_edges():
        if allowed[u] and allowed[v] and mate[u] == -1 and mate[v] == -1:
            mate[u], mate[v] = v, u
    return Matching.from_mate(g, mate)


# ---------- maximality ----------

def is_maximal(g: Graph, m) -> bool:
    """M is maximal iff Exp(M) is an independent set."""
    m = as_matching(g, m)
    return g.is_independent(m.exposed)


def is_maximal_within(g: Graph, m: Matching, within: Iterable[int]) -> bool:
    vertices = set(within)
    return g.is_independent(vertices - m.covered)


# ---------- exhaustive enumeration ----------

_UNDECIDED, _MATCHED, _EXPOSED = 0, 1, 2


def enumerate_maximal_matchings(g: Graph, size_cap: Optional[int] = None) -> Iterator[Matching]:
    """
    Every maximal matching of g exactly once (with |M| <= size_cap if given).

    Vertices are decided in index order: the lowest undecided vertex is
    either matched to a higher undecided neighbour (in increasing order) or
    left exposed, which is allowed only when no neighbour is exposed and
    forces every undecided neighbour to be matched later.
    """
    adj = _sorted_adjacency(g)
    status = [_UNDECIDED] * g.n
    blockers = [0] * g.n
    current: List[Edge] = []

    def stranded(w: int) -> bool:
        return not any(status[x] == _UNDECIDED for x in adj[w])

    def search(i: int) -> Iterator[Matching]:
        while i < g.n and status[i] != _UNDECIDED:
            i += 1
        if i == g.n:
            yield Matching(g, frozenset(current))
            return
        v = i

        if size_cap is None or len(current) < size_cap:
            for u in adj[v]:
                if status[u] != _UNDECIDED:
                    continue
                status[v] = status[u] = _MATCHED
                current.append((v, u))
                yield from search(i + 1)
                current.pop()
                status[v] = status[u] = _UNDECIDED

        if blockers[v] == 0:
            status[v] = _EXPOSED
            for w in adj[v]:
                blockers[w] += 1
            if not any(status[w] == _UNDECIDED and stranded(w) for w in adj[v]):
                yield from search(i + 1)
            for w in adj[v]:
                blockers[w] -= 1
            status[v] = _UNDECIDED

    yield from search(0)


def minimum_maximal_matching_oracle(g: Graph) -> Tuple[Matching, int]:
    """
    A minimum maximal matching and beta(G), by iterative deepening over
    the size cap from ceil(nu/2) (every maximal matching is at least half
    a maximum one).
    """
    nu = matching_number(g)
    for cap in range(math.ceil(nu / 2), nu + 1):
        first = next(enumerate_maximal_matchings(g, size_cap=cap), None)
        if first is not None:
            logger.debug("beta=%d found at cap %d (nu=%d)", first.size, cap, nu)
            return first, first.size
    # unreachable: a maximum matching is maximal
    m = maximum_matching(g)
    return m, m.size


def matching_metrics(g: Graph, with_beta: bool = False) -> MatchingMetrics:
    nu = matching_number(g)
    beta = minimum_maximal_matching_oracle(g)[1] if with_beta else None
    return MatchingMetrics(n=g.n, nu=nu, beta=beta)


# ---------- covering ----------

def matching_covering(
    g: Graph, s: Iterable[int], within: Optional[Iterable[int]] = None
) -> Optional[Matching]:
    """
    A matching of G[within] covering S, or None.

    Each vertex v of within \\ S gets a private partner v'; all partners
    (plus one dummy when |S| is odd) form a clique. G[within] has a matching
    covering S iff the augmented graph has a perfect matching.
    """
    vertices = set(g.vertices) if within is None else set(within)
    s = set(s)
    if not s <= vertices:
        raise MatchingError(f"vertices {sorted(s - vertices)} are outside the graph")
    if not s:
        return Matching.empty(g)

    outside = sorted(vertices - s)
    extra = len(outside) + (len(s) % 2)
    partners = list(range(g.n, g.n + extra))
    edges = set(g.edges)
    for v, p in zip(outside, partners):
        edges.add((v, p))
    for i, p in enumerate(partners):
        for q in partners[i + 1:]:
            edges.add((p, q))
    augmented = Graph(g.n + extra, frozenset(edges))

    pm = perfect_matching(augmented, vertices | set(partners))
    if pm is None:
        return None
    return Matching(g, frozenset(e for e in pm.edges if e[1] < g.n))


def has_matching_covering(g: Graph, s: Iterable[int], within: Optional[Iterable[int]] = None) -> bool:
    return matching_covering(g, s, within) is not None


def minimal_covering_matchings(
    g: Graph, s: Iterable[int], avoid: Iterable[int] = ()
) -> Iterator[Matching]:
    """
    Every inclusion-wise minimal matching covering S and exposing `avoid`,
    each exactly once: the lowest uncovered vertex of S is matched to a
    free neighbour, in increasing order. At most |S| edges each.
    """
    targets = sorted(set(s))
    blocked = set(avoid)
    used: Set[int] = set()
    current: List[Edge] = []

    def pick(i: int) -> Iterator[Matching]:
        while i < len(targets) and targets[i] in used:
            i += 1
        if i == len(targets):
            yield Matching(g, frozenset(current))
            return
        t = targets[i]
        if t in blocked:
            return
        for u in sorted(g.adjacency[t]):
            if u in blocked or u in used:
                continue
            used.update((t, u))
            current.append(edge(t, u))
            yield from pick(i + 1)
            current.pop()
            used.difference_update((t, u))

    yield from pick(0)


# ---------- extension (maximal matchings of prescribed size) ----------

def extend_maximal_preserving_coverage(g: Graph, m, k: int) -> Matching:
    """
    Maximal M' with |M'| = k and V(M) contained in V(M'), by applying k - |M|
    augmenting paths to the maximal matching M.
    """
    m = as_matching(g, m)
    if not is_maximal(g, m):
        raise MatchingError("the starting matching is not maximal")
    nu = matching_number(g)
    if not m.size <= k <= nu:
        raise MatchingError(f"k={k} outside [{m.size}, {nu}]")
    while m.size < k:
        path = augmenting_path(g, m)
        m = augment(m, path)
    return m


def maximal_matching_of_size(g: Graph, k: int) -> Optional[Matching]:
    """
    A maximal matching of size exactly k, or None when k is outside
    [beta, nu]. Starts from the greedy maximal matching when it is small
    enough and falls back to a minimum maximal matching otherwise.
    """
    nu = matching_number(g)
    if k < 0 or k > nu:
        return None
    start = greedy_maximal_matching(g)
    if start.size > k:
        start, beta = minimum_maximal_matching_oracle(g)
        if beta > k:
            return None
    return extend_maximal_preserving_coverage(g, start, k)
