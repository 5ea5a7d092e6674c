"""
core/graph_io.py

Edge-list text format:

    # comment lines and trailing comments start with '#'
    4           <- first non-empty line: vertex count n
    0 1         <- one edge per line, two integers in 0..n-1
    1 2
    2 3

Edges may be written in either orientation; writing the same pair twice
(in either order) is an error, as are self-loops and out-of-range vertices.
write_graph emits the strict form, one `u v` line per edge with
0 <= u < v < n, sorted; read_graph also accepts `v u` for the same edge.
"""

from typing import Iterable, List, Tuple

from core.errors import GraphFormatError
from core.graph import Graph, edge


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _meaningful(lines: Iterable[str]) -> Iterable[Tuple[int, str]]:
    for lineno, raw in enumerate(lines, start=1):
        body = _strip(raw)
        if body:
            yield lineno, body


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(lineno, f"{what} {token!r} is not an integer") from None


def read_graph(text: str) -> Graph:
    rows = _meaningful(text.splitlines())
    try:
        lineno, header = next(rows)
    except StopIteration:
        raise GraphFormatError(1, "missing vertex count") from None

    fields = header.split()
    if len(fields) != 1:
        raise GraphFormatError(lineno, f"expected a single vertex count, got {header!r}")
    n = _int(fields[0], lineno, "vertex count")
    if n < 0:
        raise GraphFormatError(lineno, f"vertex count must be non-negative, got {n}")

    seen = {}
    for lineno, body in rows:
        fields = body.split()
        if len(fields) != 2:
            raise GraphFormatError(lineno, f"expected 'u v', got {body!r}")
        u = _int(fields[0], lineno, "vertex")
        v = _int(fields[1], lineno, "vertex")
        if u == v:
            raise GraphFormatError(lineno, f"self-loop at vertex {u}")
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphFormatError(lineno, f"vertex {w} out of range 0..{n - 1}")
        e = edge(u, v)
        if e in seen:
            raise GraphFormatError(lineno, f"edge {e[0]} {e[1]} already declared on line {seen[e]}")
        seen[e] = lineno
    return Graph(n, frozenset(seen))


def write_graph(g: Graph) -> str:
    lines: List[str] = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as f:
        return read_graph(f.read())


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(write_graph(g))
