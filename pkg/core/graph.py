"""
core/graph.py

Immutable simple undirected graph on vertices 0..n-1, plus the constructions
used throughout the package.

Labeling schemes (kept stable so certificates are reproducible):
  disjoint_union(g1, g2)    g1 keeps 0..n1-1, g2 is shifted by n1
  join(g1, g2)              same as disjoint_union, plus all cross edges
  cartesian_product(g, h)   vertex (u, v) -> u * |V(h)| + v   (row-major)
  double_subdivide(g)       edge i (in sorted order) uv, u < v, gets
                            x = n + 2i adjacent to u and y = n + 2i + 1
                            adjacent to v
"""

import hashlib
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import GraphError

Edge = Tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical (low, high) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Edge]
    adjacency: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {self.n!r}")
        nbrs: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) is not a canonical pair in range 0..{self.n - 1}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", frozenset(self.edges))
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build from (u, v) pairs in any orientation. Duplicates and loops are rejected."""
        seen = set()
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return all(not (self.adjacency[v] & vs) for v in vs)

    def neighbourhood(self, vertices: Iterable[int]) -> FrozenSet[int]:
        """N(U): union of the open neighbourhoods of U."""
        out = set()
        for v in vertices:
            out |= self.adjacency[v]
        return frozenset(out)

    def closed_neighbourhood(self, vertices: Iterable[int]) -> FrozenSet[int]:
        vs = frozenset(vertices)
        return vs | self.neighbourhood(vs)

    def fingerprint(self) -> str:
        text = f"{self.n}:" + ";".join(f"{u},{v}" for u, v in self.sorted_edges())
        return hashlib.sha1(text.encode("utf-8")).hexdigest()[:12]

    def to_document(self) -> Dict:
        return {
            "n": self.n,
            "m": self.m,
            "edges": [list(e) for e in self.sorted_edges()],
        }


EMPTY = Graph(0, frozenset())


# ---------- matrix bridge ----------

def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges:
        a[u, v] = a[v, u] = True
    return a


def from_matrix(a: np.ndarray) -> Graph:
    a = np.asarray(a, dtype=bool)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise GraphError(f"adjacency matrix must be square, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise GraphError("adjacency matrix is not symmetric")
    if a.diagonal().any():
        raise GraphError("adjacency matrix has a self-loop")
    pairs = np.argwhere(np.triu(a, 1))
    return Graph(a.shape[0], frozenset((int(u), int(v)) for u, v in pairs))


# ---------- constructions ----------

def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    a1, a2 = adjacency_matrix(g1), adjacency_matrix(g2)
    zero = np.zeros((g1.n, g2.n), dtype=bool)
    return from_matrix(np.block([[a1, zero], [zero.T, a2]]))


def copies(g: Graph, k: int) -> Graph:
    """kG, the disjoint union of k copies of g."""
    if k < 0:
        raise GraphError(f"number of copies must be non-negative, got {k}")
    out = EMPTY
    for _ in range(k):
        out = disjoint_union(out, g)
    return out


def join(g1: Graph, g2: Graph) -> Graph:
    a1, a2 = adjacency_matrix(g1), adjacency_matrix(g2)
    full = np.ones((g1.n, g2.n), dtype=bool)
    return from_matrix(np.block([[a1, full], [full.T, a2]]))


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    a1 = adjacency_matrix(g1).astype(np.int8)
    a2 = adjacency_matrix(g2).astype(np.int8)
    i1 = np.eye(g1.n, dtype=np.int8)
    i2 = np.eye(g2.n, dtype=np.int8)
    return from_matrix((np.kron(a1, i2) + np.kron(i1, a2)) > 0)


def complement(g: Graph) -> Graph:
    a = adjacency_matrix(g)
    return from_matrix(~a & ~np.eye(g.n, dtype=bool))


def double_subdivide(g: Graph) -> Graph:
    edges = []
    for i, (u, v) in enumerate(g.sorted_edges()):
        x, y = g.n + 2 * i, g.n + 2 * i + 1
        edges += [(u, x), (x, y), (y, v)]
    return Graph.from_edges(g.n + 2 * g.m, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """
    G[vertices], relabelled densely in increasing order.
    Returns (subgraph, labels) where labels[i] is the host vertex of i.
    """
    labels = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(labels)}
    sub = frozenset(
        edge(index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return Graph(len(labels), sub), labels


def connected_components(g: Graph, within: Optional[Iterable[int]] = None) -> List[FrozenSet[int]]:
    """Components of G[within] (all of G by default), ordered by smallest vertex."""
    allowed = set(g.vertices) if within is None else set(within)
    seen = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        seen.add(s)
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


# ---------- standard families ----------

def _need(kind: str, params: Sequence[int], count: int) -> List[int]:
    if len(params) != count:
        raise GraphError(f"{kind} takes {count} parameter(s), got {len(params)}")
    values = [int(p) for p in params]
    if any(p < 0 for p in values):
        raise GraphError(f"{kind} parameters must be non-negative, got {values}")
    return values


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def build_family(kind: str, params: Sequence[int] = ()) -> Graph:
    """
    Named graph with canonical numbering.

      path [n]                  v0 v1 ... v(n-1)
      cycle [n], n >= 3         path plus v(n-1) v0
      complete [n]
      complete-bipartite [a, b] sides 0..a-1 and a..a+b-1
      star [k]                  K(1,k), centre 0
      kK2 [k]                   edges (2i, 2i+1)
      empty [n]
      petersen []
    """
    kind = kind.strip().lower().replace("_", "-")
    if kind == "path":
        (n,) = _need(kind, params, 1)
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        (n,) = _need(kind, params, 1)
        if n < 3:
            raise GraphError(f"cycle needs at least 3 vertices, got {n}")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        (n,) = _need(kind, params, 1)
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if kind == "complete-bipartite":
        a, b = _need(kind, params, 2)
        return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])
    if kind == "star":
        (k,) = _need(kind, params, 1)
        return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])
    if kind == "kk2":
        (k,) = _need(kind, params, 1)
        return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])
    if kind == "empty":
        (n,) = _need(kind, params, 1)
        return Graph(n, frozenset())
    if kind == "petersen":
        _need(kind, params, 0)
        return _petersen()
    raise GraphError(f"unknown graph family {kind!r}")


# ---------- independent sets ----------

def independent_sets(
    g: Graph, size: int, candidates: Optional[Iterable[int]] = None
) -> Iterator[Tuple[int, ...]]:
    """
    All independent sets of exactly `size` vertices drawn from `candidates`
    (default: every vertex), as sorted tuples in lexicographic order.
    """
    pool = sorted(set(g.vertices) if candidates is None else set(candidates))
    if size < 0 or size > len(pool):
        return

    chosen: List[int] = []

    def extend(start: int, blocked: FrozenSet[int]) -> Iterator[Tuple[int, ...]]:
        if len(chosen) == size:
            yield tuple(chosen)
            return
        # not enough candidates left
        for i in range(start, len(pool) - (size - len(chosen)) + 1):
            v = pool[i]
            if v in blocked:
                continue
            chosen.append(v)
            yield from extend(i + 1, blocked | g.adjacency[v])
            chosen.pop()

    yield from extend(0, frozenset())


def maximum_independent_set(g: Graph, within: Optional[Iterable[int]] = None) -> FrozenSet[int]:
    """
    Exact maximum independent set by branch and bound on bitmasks.
    Vertices of degree <= 1 are taken greedily; otherwise branch on a
    vertex of maximum degree. Ties go to the lowest index.
    """
    allowed = set(g.vertices) if within is None else set(within)
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    start = 0
    for v in allowed:
        start |= 1 << v

    best = [0, 0]  # (size, mask)

    def bits(mask: int) -> Iterator[int]:
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def search(mask: int, taken: int, count: int):
        # forced picks
        while mask:
            pick = -1
            for v in bits(mask):
                if bin(nbr[v] & mask).count("1") <= 1:
                    pick = v
                    break
            if pick < 0:
                break
            taken |= 1 << pick
            count += 1
            mask &= ~((1 << pick) | nbr[pick])
        if count + bin(mask).count("1") <= best[0]:
            return
        if not mask:
            best[0], best[1] = count, taken
            return
        w, wdeg = -1, -1
        for v in bits(mask):
            d = bin(nbr[v] & mask).count("1")
            if d > wdeg:
                w, wdeg = v, d
        search(mask & ~((1 << w) | nbr[w]), taken | (1 << w), count + 1)
        search(mask & ~(1 << w), taken, count)

    search(start, 0, 0)
    return frozenset(bits(best[1]))


@dataclass(frozen=True)
class GraphInvariants:
    """alpha, tau and omega; a field is None when it was not requested."""
    alpha: Optional[int] = None
    tau: Optional[int] = None
    omega: Optional[int] = None

    @property
    def computed(self) -> Dict[str, bool]:
        return {name: getattr(self, name) is not None for name in ("alpha", "tau", "omega")}


def independence_number(g: Graph) -> int:
    return len(maximum_independent_set(g))


def vertex_cover_number(g: Graph) -> int:
    return g.n - independence_number(g)


def maximum_clique(g: Graph) -> FrozenSet[int]:
    return maximum_independent_set(complement(g))


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))


def graph_invariants(g: Graph, alpha: bool = True, omega: bool = True) -> GraphInvariants:
    a = independence_number(g) if alpha else None
    return GraphInvariants(
        alpha=a,
        tau=None if a is None else g.n - a,
        omega=clique_number(g) if omega else None,
    )
