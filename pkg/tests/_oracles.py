"""Brute-force ground truth used by the test suite.

Everything here is deliberately dumb and independent of the library's
algorithmic paths: exhaustive cycle enumeration, cut enumeration, and
integer flow enumeration at desk scale.
"""

from __future__ import annotations

import itertools
import math
import random

from linarb.flow import UNBOUNDED, Arc, FlowNetwork
from linarb.graph import Graph


def brute_girth(g: Graph) -> int | float:
    """Shortest simple cycle by exhaustive path enumeration (n <= ~10)."""
    best: int | float = math.inf
    for s in range(g.n):
        stack = [(s, (s,), frozenset((s,)))]
        while stack:
            u, path, seen = stack.pop()
            if len(path) >= best:
                continue
            for w in g.adjacency[u]:
                if w < s:
                    continue  # cycles are counted from their minimum vertex
                if w == s and len(path) >= 3:
                    best = min(best, len(path))
                elif w not in seen:
                    stack.append((w, path + (w,), seen | {w}))
    return best


def brute_min_cut(net: FlowNetwork, s: int, t: int) -> int | float:
    """Minimum s-t cut by enumerating all vertex bipartitions."""
    others = [v for v in range(net.node_count) if v not in (s, t)]
    best: int | float = math.inf
    for mask in range(1 << len(others)):
        side = {s}
        for i, v in enumerate(others):
            if mask >> i & 1:
                side.add(v)
        cut = 0
        for a in net.arcs:
            if a.tail in side and a.head not in side:
                if a.capacity is UNBOUNDED:
                    cut = math.inf
                    break
                cut += a.capacity
        best = min(best, cut)
    return best


def brute_circulation_feasible(net: FlowNetwork) -> bool:
    """Existence of an integer circulation by plain enumeration.

    Only for pure circulations (no source/sink) with finite capacities.
    """
    ranges = [range(a.lower, a.capacity + 1) for a in net.arcs]
    for flows in itertools.product(*ranges):
        balance = [0] * net.node_count
        for a, f in zip(net.arcs, flows):
            balance[a.tail] -= f
            balance[a.head] += f
        if all(b == 0 for b in balance):
            return True
    return False


def brute_linear_arboricity(g: Graph, cap: int = 6) -> int:
    """Exact minimum linear-forest partition by trying every assignment.

    Independent of the library's oracle: enumerates forest counts from 1
    and, per count, all edge assignments (only viable for a handful of
    edges).
    """
    if g.m == 0:
        return 0

    def linear(eids: list[int]) -> bool:
        deg: dict[int, int] = {}
        parent: dict[int, int] = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        for e in eids:
            u, v = g.endpoints(e)
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
            if deg[u] > 2 or deg[v] > 2:
                return False
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            parent[ru] = rv
        return True

    for count in range(1, cap + 1):
        for assign in itertools.product(range(count), repeat=g.m):
            groups = [[] for _ in range(count)]
            for e, j in enumerate(assign):
                groups[j].append(e)
            if all(linear(grp) for grp in groups):
                return count
    raise AssertionError(f"no partition within {cap} forests")


def random_max_flow_network(rng: random.Random) -> FlowNetwork:
    """Random finite-capacity network with at most 10 nodes."""
    n = rng.randint(2, 10)
    arcs = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < 0.35:
                arcs.append(Arc(u, v, 0, rng.randint(0, 8)))
    if not arcs:
        arcs.append(Arc(0, n - 1, 0, rng.randint(0, 8)))
    return FlowNetwork(node_count=n, arcs=tuple(arcs), source=0, sink=n - 1)


def random_lower_bound_network(rng: random.Random) -> FlowNetwork:
    """Random pure circulation instance: <= 8 arcs, capacities <= 2."""
    n = rng.randint(2, 5)
    count = rng.randint(1, 8)
    arcs = []
    for _ in range(count):
        u = rng.randrange(n)
        v = rng.randrange(n)
        while v == u:
            v = rng.randrange(n)
        lower = rng.randint(0, 2)
        cap = rng.randint(lower, 2)
        arcs.append(Arc(u, v, lower, cap))
    return FlowNetwork(node_count=n, arcs=tuple(arcs))


def random_simple_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)
