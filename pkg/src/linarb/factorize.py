"""Split a 2k-regular graph into k edge-disjoint spanning cycle sets.

The classical argument is made algorithmic: orient each component along an
Euler circuit (so in- and out-degree are both k), form the bipartite graph
between out-copies and in-copies of the vertices (k-regular), and peel k
perfect matchings.  Each matching is a permutation of the vertex set whose
cycles, read as undirected edges, form one 2-factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph

__all__ = [
    "Factor",
    "TwoFactorization",
    "two_factorize",
    "factorization_from_cycles",
    "verify_two_factorization",
]


@dataclass(frozen=True)
class Factor:
    """One spanning 2-regular subgraph, stored as vertex-disjoint cycles.

    Each cycle is a vertex sequence of length >= 3; consecutive entries
    (cyclically) are the cycle's edges.
    """

    cycles: tuple[tuple[int, ...], ...]

    def edge_ids(self, g: Graph) -> list[int]:
        out = []
        for cyc in self.cycles:
            for i, u in enumerate(cyc):
                v = cyc[(i + 1) % len(cyc)]
                out.append(g.edge_id(u, v))
        return out


@dataclass(frozen=True)
class TwoFactorization:
    k: int
    factors: tuple[Factor, ...]
    # edge id -> (factor index, cycle index within the factor)
    cycle_index: dict[int, tuple[int, int]] = field(compare=False)

    def cycles(self) -> list[tuple[int, int, tuple[int, ...]]]:
        """All cycles as (factor index, cycle index, vertex sequence)."""
        out = []
        for fi, f in enumerate(self.factors):
            for ci, cyc in enumerate(f.cycles):
                out.append((fi, ci, cyc))
        return out


def _euler_circuit(g: Graph, vertices: list[int]) -> list[int]:
    """Euler circuit of the connected even-degree subgraph on ``vertices``.

    Iterative Hierholzer walk with sorted adjacency, so the circuit (and
    everything derived from it) is deterministic.  Returns the closed vertex
    sequence; first and last entries coincide.
    """
    ptr = {v: 0 for v in vertices}
    used = [False] * g.m
    stack = [vertices[0]]
    circuit: list[int] = []
    while stack:
        u = stack[-1]
        adj = g.adjacency[u]
        i = ptr[u]
        while i < len(adj) and used[g.edge_id(u, adj[i])]:
            i += 1
        ptr[u] = i
        if i == len(adj):
            circuit.append(stack.pop())
        else:
            w = adj[i]
            used[g.edge_id(u, w)] = True
            stack.append(w)
    circuit.reverse()
    return circuit


def _peel_matching(adj_out: dict[int, list[int]], left: list[int]) -> dict[int, int]:
    """One perfect matching of the bipartite out/in graph, by augmenting paths.

    ``adj_out[u]`` lists in-copies reachable from out-copy u.  The graph is
    regular, so a perfect matching exists; failure here means the caller's
    input was not as promised.
    """
    match_right: dict[int, int] = {}
    match_left: dict[int, int] = {}

    def augment(u: int, visited: set[int]) -> bool:
        for w in adj_out[u]:
            if w in visited:
                continue
            visited.add(w)
            if w not in match_right or augment(match_right[w], visited):
                match_right[w] = u
                match_left[u] = w
                return True
        return False

    for u in left:
        if u not in match_left and not augment(u, set()):
            raise RuntimeError(
                "no perfect matching in regular bipartite peel; "
                "input was not 2k-regular"
            )
    return match_left


def _permutation_cycles(succ: dict[int, int]) -> list[tuple[int, ...]]:
    """Cycles of a permutation, each rotated to start at its minimum vertex."""
    seen: set[int] = set()
    cycles = []
    for start in sorted(succ):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = succ[start]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = succ[v]
        cycles.append(tuple(cyc))
    return cycles


def two_factorize(g: Graph, k: int) -> TwoFactorization:
    """Decompose a 2k-regular graph into k edge-disjoint 2-factors.

    Deterministic: sorted adjacency drives the Euler walk and the matching
    scan order, so equal inputs give byte-equal factorizations.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not all(g.degree(v) == 2 * k for v in range(g.n)):
        raise ValueError(f"graph is not {2 * k}-regular")

    per_factor_cycles: list[list[tuple[int, ...]]] = [[] for _ in range(k)]
    for comp in g.connected_components():
        circuit = _euler_circuit(g, comp)
        # Orient every edge along the circuit: out-degree = in-degree = k.
        adj_out: dict[int, list[int]] = {v: [] for v in comp}
        for a, b in zip(circuit, circuit[1:]):
            adj_out[a].append(b)
        for fi in range(k):
            match = _peel_matching(adj_out, comp)
            for u, w in match.items():
                adj_out[u].remove(w)
            per_factor_cycles[fi].extend(_permutation_cycles(match))
    factors = tuple(
        Factor(tuple(sorted(cycles))) for cycles in per_factor_cycles
    )
    return _index_factors(g, k, factors)


def factorization_from_cycles(
    g: Graph, factor_cycles: list[list[list[int]]]
) -> TwoFactorization:
    """Build a TwoFactorization from explicit cycle lists (e.g. a generator
    hint), validating it against the graph."""
    for cycles in factor_cycles:
        for cyc in cycles:
            for i, u in enumerate(cyc):
                v = cyc[(i + 1) % len(cyc)]
                if u == v or not (0 <= u < g.n) or not g.has_edge(u, v):
                    raise ValueError(
                        f"invalid factorization: cycle uses non-edge ({u}, {v})"
                    )
    factors = tuple(
        Factor(tuple(sorted(tuple(c) for c in cycles)))
        for cycles in factor_cycles
    )
    tf = _index_factors(g, len(factors), factors)
    ok, diags = verify_two_factorization(g, tf)
    if not ok:
        raise ValueError(f"invalid factorization: {diags[0]}")
    return tf


def _index_factors(
    g: Graph, k: int, factors: tuple[Factor, ...]
) -> TwoFactorization:
    cycle_index: dict[int, tuple[int, int]] = {}
    for fi, f in enumerate(factors):
        for ci, cyc in enumerate(f.cycles):
            for i, u in enumerate(cyc):
                v = cyc[(i + 1) % len(cyc)]
                cycle_index[g.edge_id(u, v)] = (fi, ci)
    return TwoFactorization(k=k, factors=factors, cycle_index=cycle_index)


def verify_two_factorization(
    g: Graph, tf: TwoFactorization
) -> tuple[bool, list[str]]:
    """Re-check every factorization invariant against the graph.

    Returns (ok, diagnostics); diagnostics name the first violated
    invariant.
    """
    if len(tf.factors) != tf.k:
        return False, [f"expected {tf.k} factors, found {len(tf.factors)}"]
    seen_edges: dict[int, tuple[int, int]] = {}
    for fi, f in enumerate(tf.factors):
        covered: set[int] = set()
        for ci, cyc in enumerate(f.cycles):
            if len(cyc) < 3:
                return False, [f"factor {fi} cycle {ci} shorter than 3"]
            if len(set(cyc)) != len(cyc):
                return False, [f"factor {fi} cycle {ci} repeats a vertex"]
            for i, u in enumerate(cyc):
                v = cyc[(i + 1) % len(cyc)]
                if not g.has_edge(u, v):
                    return False, [
                        f"factor {fi} cycle {ci} uses non-edge ({u}, {v})"
                    ]
                eid = g.edge_id(u, v)
                if eid in seen_edges:
                    return False, [
                        "edge-disjointness violated: edge "
                        f"({u}, {v}) in factors {seen_edges[eid][0]} and {fi}"
                    ]
                seen_edges[eid] = (fi, ci)
            overlap = covered.intersection(cyc)
            if overlap:
                return False, [
                    f"factor {fi}: vertex {min(overlap)} on two cycles"
                ]
            covered.update(cyc)
        if covered != set(range(g.n)):
            missing = min(set(range(g.n)) - covered)
            return False, [f"factor {fi} does not span: vertex {missing} uncovered"]
    if len(seen_edges) != g.m:
        return False, ["union does not cover E(G)"]
    for eid, loc in tf.cycle_index.items():
        if seen_edges.get(eid) != loc:
            u, v = g.endpoints(eid)
            return False, [f"cycle_index wrong for edge ({u}, {v})"]
    if len(tf.cycle_index) != g.m:
        return False, ["cycle_index incomplete"]
    return True, []
