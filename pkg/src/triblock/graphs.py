"""Simple undirected graphs: parsing, neighborhoods, predicates, relabeling.

Graphs are immutable values over vertices 0..n-1, stored both as a dense
adjacency matrix (constant-time edge tests) and as sorted adjacency lists
(cheap neighborhood iteration).
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "ParseError",
    "parse_edge_list",
    "open_neighborhood",
    "closed_neighborhood",
    "induced_subgraph",
    "is_connected",
    "is_regular",
    "vertex_in_triangle",
    "apply_permutation",
    "to_edge_list_text",
]


class ParseError(ValueError):
    """Malformed edge-list input; ``line`` is the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "neighbors")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = np.zeros((n, n), dtype=np.uint8)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range: ({u}, {v}) with n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u, v] = 1
            adj[v, u] = 1
        self._finish(n, adj)

    def _finish(self, n: int, adj: np.ndarray) -> None:
        adj.setflags(write=False)
        self.n = n
        self.adj = adj
        self.neighbors = tuple(
            tuple(int(u) for u in np.flatnonzero(adj[v])) for v in range(n)
        )

    @classmethod
    def from_matrix(cls, adj: np.ndarray) -> "Graph":
        """Build a graph from a symmetric 0/1 matrix with a zero diagonal."""
        adj = np.ascontiguousarray(np.asarray(adj, dtype=np.uint8))
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if np.any(adj.diagonal()):
            raise ValueError("adjacency matrix has a self-loop")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency matrix must be symmetric")
        g = cls.__new__(cls)
        g._finish(adj.shape[0], adj.copy())
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.neighbors)

    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees()))

    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v."""
        return [(v, int(u)) for v in range(self.n) for u in self.neighbors[v] if v < u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")


def parse_edge_list(text: bytes | str) -> Graph:
    """Parse the edge-list format: header ``n m`` then m lines ``u v``.

    Lines starting with '#' (and blank lines) are ignored.  Rejects, with the
    offending line number: malformed headers and edge lines, out-of-range
    vertices, self-loops, duplicate edges, and a wrong edge count.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(0, f"input is not valid UTF-8: {exc}") from exc

    n = m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n < 0:
            if len(tokens) != 2:
                raise ParseError(lineno, f"malformed header: expected 'n m', got {line!r}")
            try:
                n, m = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(lineno, f"malformed header: expected 'n m', got {line!r}") from None
            if n < 0 or m < 0:
                raise ParseError(lineno, "header counts must be non-negative")
            continue
        if len(edges) == m:
            raise ParseError(lineno, f"expected {m} edge lines, found extra data: {line!r}")
        if len(tokens) != 2:
            raise ParseError(lineno, f"malformed edge line: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(lineno, f"malformed edge line: expected 'u v', got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex index out of range: {u} {v} (n={n})")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    if n < 0:
        raise ParseError(last_line, "missing header line 'n m'")
    if len(edges) != m:
        raise ParseError(last_line, f"expected {m} edge lines, found {len(edges)}")
    return Graph(n, edges)


def to_edge_list_text(g: Graph) -> str:
    """Serialize a graph in the edge-list format accepted by parse_edge_list."""
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def open_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Vertices adjacent to v, excluding v itself."""
    _check_vertex(g, v)
    return frozenset(g.neighbors[v])


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Vertices adjacent to v, plus v itself."""
    _check_vertex(g, v)
    return frozenset(g.neighbors[v]) | {v}


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertices, relabeled by their sorted order."""
    vs = sorted(set(vertices))
    for v in vs:
        _check_vertex(g, v)
    if not vs:
        return Graph(0)
    sub = g.adj[np.ix_(vs, vs)]
    return Graph.from_matrix(sub)


def is_connected(g: Graph) -> bool:
    """Whether the graph has one component; vacuously true for n = 0."""
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbors[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def is_regular(g: Graph) -> bool:
    """Whether every vertex has the same degree."""
    return len(set(g.degrees())) <= 1


def vertex_in_triangle(g: Graph, v: int) -> bool:
    """Whether v lies in a triangle, i.e. its open neighborhood has an edge."""
    _check_vertex(g, v)
    nb = g.neighbors[v]
    if len(nb) < 2:
        return False
    idx = np.array(nb, dtype=np.intp)
    return bool(g.adj[np.ix_(idx, idx)].any())


def apply_permutation(g: Graph, p: Sequence[int]) -> Graph:
    """Relabel the graph: the result has edge (p[u], p[v]) iff g has (u, v)."""
    if len(p) != g.n or sorted(p) != list(range(g.n)):
        raise ValueError(f"not a permutation of 0..{g.n - 1}: {p!r}")
    if g.n == 0:
        return Graph(0)
    idx = np.asarray(p, dtype=np.intp)
    out = np.zeros_like(g.adj)
    out[np.ix_(idx, idx)] = g.adj
    return Graph.from_matrix(out)
