"""Integer max-flow and feasible circulation with lower bounds.

Max-flow is a blocking-flow solver: breadth-first level phases, each
saturating all shortest augmenting paths.  Circulations with lower bounds
reduce to max-flow the standard way: subtract lower bounds, route the
displaced supply through a super-source/super-sink pair, and declare the
instance feasible exactly when every super-source arc saturates.  All
arithmetic is on bounded integers; unbounded capacities are a sentinel
clamped to a safe finite surrogate.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

__all__ = [
    "UNBOUNDED",
    "Arc",
    "FlowNetwork",
    "FlowSolution",
    "max_flow",
    "feasible_circulation",
    "check_flow",
    "dump_network",
]

# Capacity sentinel: no finite bound on the arc.
UNBOUNDED = None


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    lower: int = 0
    capacity: int | None = UNBOUNDED


@dataclass(frozen=True)
class FlowNetwork:
    """Directed arcs with lower bounds and capacities.

    ``source``/``sink`` are optional; absent for pure circulations.  Arc
    order is significant: solutions report flows aligned with ``arcs``.
    """

    node_count: int
    arcs: tuple[Arc, ...]
    source: int | None = None
    sink: int | None = None

    def __post_init__(self):
        if self.node_count < 1:
            raise ValueError("node_count must be positive")
        object.__setattr__(self, "arcs", tuple(self.arcs))
        for a in self.arcs:
            if not (0 <= a.tail < self.node_count and 0 <= a.head < self.node_count):
                raise ValueError(f"arc ({a.tail}, {a.head}) out of range")
            if a.lower < 0:
                raise ValueError("negative lower bound")
            if a.capacity is not UNBOUNDED and a.capacity < a.lower:
                raise ValueError(
                    f"arc ({a.tail}, {a.head}): capacity {a.capacity} "
                    f"below lower bound {a.lower}"
                )


@dataclass(frozen=True)
class FlowSolution:
    """Per-arc integer flows aligned with the network's arc list.

    ``feasible`` reports circulation feasibility (always True for plain
    max-flow).  ``value`` is the s-t flow value for max-flow calls
    (math.inf when unbounded).  On infeasibility ``witness`` lists
    (node, required, routed) for each unsaturated super-source arc of the
    reduction.
    """

    flows: tuple[int, ...] | None
    feasible: bool
    value: int | float | None = None
    witness: tuple[tuple[int, int, int], ...] = ()


class _Dinic:
    """Arc-list residual graph; paired forward/backward arcs."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n)]

    def add_arc(self, u: int, v: int, c: int) -> int:
        i = len(self.head)
        self.head.append(v)
        self.cap.append(c)
        self.out[u].append(i)
        self.head.append(u)
        self.cap.append(0)
        self.out[v].append(i + 1)
        return i

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for i in self.out[u]:
                    w = self.head[i]
                    if self.cap[i] > 0 and level[w] == -1:
                        level[w] = level[u] + 1
                        queue.append(w)
            if level[t] == -1:
                return total
            it = [0] * self.n

            def push(u: int, limit: int) -> int:
                if u == t:
                    return limit
                while it[u] < len(self.out[u]):
                    i = self.out[u][it[u]]
                    w = self.head[i]
                    if self.cap[i] > 0 and level[w] == level[u] + 1:
                        got = push(w, min(limit, self.cap[i]))
                        if got > 0:
                            self.cap[i] -= got
                            self.cap[i ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                pushed = push(s, math.inf)
                if pushed == 0:
                    break
                total += pushed


def _finite_surrogate(arcs) -> int:
    """Safe stand-in for unbounded capacity: exceeds any useful flow."""
    total = 1
    for a in arcs:
        total += a.lower
        if a.capacity is not UNBOUNDED:
            total += a.capacity
    return total


def _reaches_via_unbounded(net: FlowNetwork, s: int, t: int) -> bool:
    adj: list[list[int]] = [[] for _ in range(net.node_count)]
    for a in net.arcs:
        if a.capacity is UNBOUNDED:
            adj[a.tail].append(a.head)
    seen = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            return True
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return False


def max_flow(net: FlowNetwork, s: int, t: int) -> FlowSolution:
    """Integer maximum flow from s to t; requires all lower bounds zero.

    Reports value math.inf (flows None) when s reaches t through unbounded
    arcs only, i.e. no finite cut exists.
    """
    if any(a.lower != 0 for a in net.arcs):
        raise ValueError("max_flow requires all lower bounds zero")
    if _reaches_via_unbounded(net, s, t):
        return FlowSolution(flows=None, feasible=True, value=math.inf)
    big = _finite_surrogate(net.arcs)
    solver = _Dinic(net.node_count)
    idx = [
        solver.add_arc(
            a.tail, a.head, a.capacity if a.capacity is not UNBOUNDED else big
        )
        for a in net.arcs
    ]
    value = solver.max_flow(s, t)
    flows = tuple(
        (a.capacity if a.capacity is not UNBOUNDED else big) - solver.cap[i]
        for a, i in zip(net.arcs, idx)
    )
    return FlowSolution(flows=flows, feasible=True, value=value)


def feasible_circulation(net: FlowNetwork) -> FlowSolution:
    """Integer circulation meeting every lower bound, or an infeasibility witness.

    Reduction: each arc (u, v, l, c) becomes (u, v, 0, c - l); node v owes
    inflow equal to its total incoming lower bounds (arc from the
    super-source) and outflow equal to its outgoing lower bounds (arc to
    the super-sink).  When the network has designated source and sink, an
    unbounded return arc sink -> source closes the circulation.  Feasible
    iff the reduced max-flow saturates all super-source arcs; then
    f(a) = f_reduced(a) + l(a).
    """
    n = net.node_count
    ss, tt = n, n + 1
    reduced_arcs: list[Arc] = []
    for a in net.arcs:
        cap = a.capacity - a.lower if a.capacity is not UNBOUNDED else UNBOUNDED
        reduced_arcs.append(Arc(a.tail, a.head, 0, cap))
    in_lower = [0] * n
    out_lower = [0] * n
    for a in net.arcs:
        in_lower[a.head] += a.lower
        out_lower[a.tail] += a.lower
    supply_arcs: list[tuple[int, int]] = []  # (arc position, node)
    for v in range(n):
        if in_lower[v] > 0:
            supply_arcs.append((len(reduced_arcs), v))
            reduced_arcs.append(Arc(ss, v, 0, in_lower[v]))
    for v in range(n):
        if out_lower[v] > 0:
            reduced_arcs.append(Arc(v, tt, 0, out_lower[v]))
    if net.source is not None and net.sink is not None:
        reduced_arcs.append(Arc(net.sink, net.source, 0, UNBOUNDED))
    reduced = FlowNetwork(node_count=n + 2, arcs=tuple(reduced_arcs))
    sol = max_flow(reduced, ss, tt)
    assert sol.flows is not None  # super-source arcs are finite cuts
    witness = tuple(
        (v, in_lower[v], sol.flows[pos])
        for pos, v in supply_arcs
        if sol.flows[pos] < in_lower[v]
    )
    if witness:
        return FlowSolution(flows=None, feasible=False, witness=witness)
    flows = tuple(
        sol.flows[i] + a.lower for i, a in enumerate(net.arcs)
    )
    return FlowSolution(flows=flows, feasible=True)


def check_flow(net: FlowNetwork, flows) -> tuple[bool, list[str]]:
    """Independent arc-by-arc, node-by-node validation of a flow vector."""
    problems = []
    if len(flows) != len(net.arcs):
        return False, ["flow vector length mismatch"]
    balance = [0] * net.node_count
    for a, f in zip(net.arcs, flows):
        if f < a.lower:
            problems.append(f"arc ({a.tail}, {a.head}): flow {f} < lower {a.lower}")
        if a.capacity is not UNBOUNDED and f > a.capacity:
            problems.append(
                f"arc ({a.tail}, {a.head}): flow {f} > capacity {a.capacity}"
            )
        balance[a.tail] -= f
        balance[a.head] += f
    for v in range(net.node_count):
        if v in (net.source, net.sink):
            continue
        if balance[v] != 0:
            problems.append(f"conservation violated at node {v}: {balance[v]:+d}")
    return not problems, problems


def dump_network(net: FlowNetwork) -> str:
    """Readable arc list for debugging (one arc per line)."""
    lines = [f"nodes {net.node_count} source {net.source} sink {net.sink}"]
    for a in net.arcs:
        cap = "inf" if a.capacity is UNBOUNDED else str(a.capacity)
        lines.append(f"{a.tail} -> {a.head}  lower={a.lower} cap={cap}")
    return "\n".join(lines) + "\n"
