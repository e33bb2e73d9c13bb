"""Simple undirected graph with degree, girth, and edge-list I/O.

Vertices are dense 0-indexed integers.  Edges are kept in canonical order
(lexicographic by sorted endpoint pair); the position of an edge in that
order is its edge id, the stable indexing every other module relies on.
Graphs are immutable after construction and safe to share.
"""

from __future__ import annotations

import hashlib
import math
from collections import deque
from collections.abc import Iterable

__all__ = [
    "Graph",
    "GraphFormatError",
    "parse_graph",
    "serialize_graph",
    "graph_digest",
    "girth",
    "max_degree",
    "is_regular",
]

Infinite = math.inf


class GraphFormatError(ValueError):
    """Raised when an edge-list document violates the input format."""


class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    Rejects self-loops and duplicate edges at construction.  ``edges`` is
    the canonical edge tuple; ``edge_id(u, v)`` maps an endpoint pair to
    its index in that tuple.
    """

    __slots__ = ("n", "edges", "adjacency", "_ids")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise ValueError(f"duplicate edge ({e[0]}, {e[1]})")
            canon.add(e)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        self._ids = {e: i for i, e in enumerate(self.edges)}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(a)) for a in adj
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._ids

    def edge_id(self, u: int, v: int) -> int:
        """Canonical index of edge {u, v}; KeyError if absent."""
        return self._ids[(u, v) if u < v else (v, u)]

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def connected_components(self) -> list[list[int]]:
        """Vertex lists of the connected components, each sorted ascending."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def has_cycle_shorter_than(self, bound: int) -> bool:
        """Exact test for girth < bound, by depth-limited BFS from every vertex.

        Only cycles shorter than ``bound`` matter, so each BFS stops at depth
        ``bound // 2``; a shortest cycle of length g < bound is witnessed at
        some root on it with both endpoints of one edge within that depth.
        """
        limit = bound // 2
        for root in range(self.n):
            dist = {root: 0}
            parent = {root: -1}
            queue = deque([root])
            while queue:
                u = queue.popleft()
                du = dist[u]
                for w in self.adjacency[u]:
                    if w not in dist:
                        if du + 1 <= limit:
                            dist[w] = du + 1
                            parent[w] = u
                            queue.append(w)
                    elif w != parent[u]:
                        if du + dist[w] + 1 < bound:
                            return True
        return False

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def max_degree(g: Graph) -> int:
    """Maximum vertex degree; 0 for edgeless graphs."""
    if g.n == 0:
        return 0
    return max(len(a) for a in g.adjacency)


def is_regular(g: Graph, r: int) -> bool:
    """True iff every vertex has degree exactly r."""
    return all(len(a) == r for a in g.adjacency)


def girth(g: Graph) -> int | float:
    """Length of the shortest cycle, or Infinite for forests.

    BFS from every vertex; a non-tree edge (u, w) seen from root r closes a
    cycle of length at most dist[u] + dist[w] + 1 through the BFS-tree LCA,
    so every candidate is a valid upper bound, and for any root lying on a
    globally shortest cycle the candidate is exact.
    """
    best: int | float = Infinite
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du >= best:
                continue  # no shorter cycle can be closed this deep
            for w in g.adjacency[u]:
                if dist[w] == -1:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = du + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format (see serialize_graph for the canonical form).

    Format: optional comment lines starting with '#'; first data line
    "n m"; then exactly m lines "u v" with 0 <= u, v < n and u != v.
    Rejects self-loops, duplicates, and out-of-range indices with a
    diagnostic naming the offending line.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphFormatError(f"line {lineno}: header must be 'n m'")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: header must be two integers"
                ) from None
            if n < 0 or m < 0:
                raise GraphFormatError(f"line {lineno}: negative header value")
            header = (n, m)
            continue
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: edge must be 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(
                f"line {lineno}: edge endpoints must be integers"
            ) from None
        n = header[0]
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(
                f"line {lineno}: vertex index out of range (n={n})"
            )
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphFormatError(
                f"line {lineno}: duplicate edge ({e[0]}, {e[1]})"
            )
        seen.add(e)
        edges.append(e)
        if len(edges) > header[1]:
            raise GraphFormatError(
                f"line {lineno}: more than {header[1]} edges declared in header"
            )
    if header is None:
        raise GraphFormatError("empty document: missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(
            f"header declares {header[1]} edges but {len(edges)} found"
        )
    return Graph(header[0], edges)


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list text: "n m" then edges sorted lexicographically."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_digest(g: Graph) -> str:
    """sha256 hex digest of the canonical serialization."""
    return hashlib.sha256(serialize_graph(g).encode("utf-8")).hexdigest()
