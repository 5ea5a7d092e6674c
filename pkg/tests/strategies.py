from hypothesis import strategies as st

from core.graph import Graph

DENSITIES = (0.15, 0.3, 0.5, 0.75)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    """Simple graphs on 0..n-1; each pair is an edge with a drawn density."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    density = draw(st.sampled_from(DENSITIES))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rolls = draw(st.lists(st.integers(0, 99), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, r in zip(pairs, rolls) if r < density * 100))


@st.composite
def graphs_with_edges(draw, min_n: int = 2, max_n: int = 8) -> Graph:
    g = draw(graphs(min_n=min_n, max_n=max_n))
    if g.m == 0:
        return Graph(g.n, frozenset({(0, 1)}))
    return g


@st.composite
def hypergraphs(draw, max_n: int = 8, max_edges: int = 8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    edge = st.frozensets(st.integers(0, n - 1), min_size=1, max_size=min(n, 4))
    return n, draw(st.lists(edge, max_size=max_edges))
