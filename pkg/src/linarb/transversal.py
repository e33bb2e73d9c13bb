"""Select a sparse edge set hitting every cycle of a 2-factorization.

The selection network has four arc layers between a source and sink:
demand arcs force at least one unit through every cycle node, selection
arcs let a cycle pick its own edges (capacity 1 each), incidence arcs
forward a picked edge's unit to one of its endpoints, and capacity arcs
cap each vertex at delta units.  An integer circulation therefore yields a
transversal whose per-vertex *charge* is at most delta; the true degree of
the selected subgraph can exceed delta because only one endpoint of each
picked edge is charged.  A strict backtracking solver is provided for the
outright degree bound, and the planner maps (k, girth) to the cheapest
capacity parameter with a supported claim.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .factorize import TwoFactorization
from .flow import UNBOUNDED, Arc, FlowNetwork, feasible_circulation
from .graph import Graph

__all__ = [
    "RegimePlan",
    "RegimeError",
    "Transversal",
    "Infeasible",
    "Exhausted",
    "candidate_plans",
    "plan_regime",
    "build_network",
    "solve_paper",
    "solve_strict",
    "verify_transversal",
    "transversal_degree",
]

DEFAULT_C_MAX = 64
DEFAULT_TIME_BUDGET = 10.0


class RegimeError(ValueError):
    """No supported (delta, bound) claim applies to the given k and girth."""


@dataclass(frozen=True)
class RegimePlan:
    """Capacity parameter and claimed extra-forest count for one regime.

    ``tag`` names the girth condition family: G2K (girth >= 2k), GK
    (>= k), GK2 (>= k/2), GK4 (>= k/4), or G2KC(c) (>= 2k/c).
    """

    k: int
    girth: int
    delta: int
    t: int
    tag: str


@dataclass(frozen=True)
class Transversal:
    """Edge set hitting every cycle, with per-vertex accounting.

    ``charge`` maps each selected edge to the endpoint that absorbed its
    flow unit (None in strict mode, where the subgraph degree bound holds
    outright).  ``hits`` maps (factor, cycle) to the selected edges on that
    cycle.
    """

    edges: tuple[int, ...]
    charge: dict[int, int] | None
    hits: dict[tuple[int, int], tuple[int, ...]]
    mode: str  # "paper" or "strict"


@dataclass(frozen=True)
class Infeasible:
    """The selection network admits no circulation; carries the flow witness."""

    witness: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class Exhausted:
    """The strict search hit its time budget before deciding."""

    nodes_explored: int


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def candidate_plans(k: int, girth: int | float, c_max: int = DEFAULT_C_MAX) -> list[RegimePlan]:
    """All applicable regimes for (k, girth), cheapest claim first.

    Ordered by claimed extra forests, ties broken by smaller delta.  The
    general regime uses the smallest c with girth >= 2k/c, i.e.
    c = ceil(2k/girth).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if girth != girth or girth < 3:
        raise ValueError("girth of a simple graph is at least 3")
    # The acyclic sentinel (inf) behaves like any girth >= 2k; store a
    # finite stand-in so plans stay JSON-friendly.
    g = int(girth) if girth != float("inf") else 2 * k
    plans: list[RegimePlan] = []

    def add(tag: str, delta: int, t: int) -> None:
        plans.append(RegimePlan(k=k, girth=g, delta=delta, t=t, tag=tag))

    if g >= 2 * k:
        add("G2K", 1, 1)
    if g >= k:
        add("GK", 2, 2)
    if 2 * g >= k:
        add("GK2", 4, 3)
    if 4 * g >= k:
        add("GK4", 8, 5)
    c = _ceil_div(2 * k, g)
    if c <= c_max:
        add(f"G2KC({c})", c, (3 * c + 3) // 2)
    plans.sort(key=lambda p: (p.t, p.delta))
    return plans


def plan_regime(k: int, girth: int | float, c_max: int = DEFAULT_C_MAX) -> RegimePlan:
    """Cheapest applicable regime; RegimeError when none fits under c_max."""
    plans = candidate_plans(k, girth, c_max)
    if not plans:
        raise RegimeError(
            f"no applicable regime: girth {girth} too small for k={k} "
            f"even with c_max={c_max}"
        )
    return plans[0]


@dataclass(frozen=True)
class _Layout:
    """Canonical node numbering of the selection network.

    S=0, T=1, then one node per cycle (factor-major order), one per edge
    (edge-id order), one per vertex.  Arc order: demand, selection,
    incidence, capacity.
    """

    cycle_count: int
    m: int
    n: int

    def cycle_node(self, idx: int) -> int:
        return 2 + idx

    def edge_node(self, eid: int) -> int:
        return 2 + self.cycle_count + eid

    def vertex_node(self, v: int) -> int:
        return 2 + self.cycle_count + self.m + v

    @property
    def node_count(self) -> int:
        return 2 + self.cycle_count + self.m + self.n


def _layout_for(g: Graph, tf: TwoFactorization) -> tuple[_Layout, list[tuple[int, int, list[int]]]]:
    cycles = []
    for fi, ci, cyc in tf.cycles():
        eids = sorted(
            g.edge_id(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))
        )
        cycles.append((fi, ci, eids))
    return _Layout(cycle_count=len(cycles), m=g.m, n=g.n), cycles


def build_network(g: Graph, tf: TwoFactorization, delta: int) -> FlowNetwork:
    """Selection network for the given factorization and capacity parameter.

    Arc counts: one demand arc per cycle (lower 1, unbounded), one
    selection arc per (cycle, edge-on-cycle) pair (capacity 1), two
    incidence arcs per edge (capacity 1), one capacity arc per vertex
    (capacity delta).
    """
    if delta < 0:
        raise ValueError("delta must be non-negative")
    layout, cycles = _layout_for(g, tf)
    arcs: list[Arc] = []
    for idx in range(len(cycles)):
        arcs.append(Arc(0, layout.cycle_node(idx), 1, UNBOUNDED))
    for idx, (_, _, eids) in enumerate(cycles):
        for eid in eids:
            arcs.append(Arc(layout.cycle_node(idx), layout.edge_node(eid), 0, 1))
    for eid, (u, v) in enumerate(g.edges):
        arcs.append(Arc(layout.edge_node(eid), layout.vertex_node(u), 0, 1))
        arcs.append(Arc(layout.edge_node(eid), layout.vertex_node(v), 0, 1))
    for v in range(g.n):
        arcs.append(Arc(layout.vertex_node(v), 1, 0, delta))
    return FlowNetwork(
        node_count=layout.node_count, arcs=tuple(arcs), source=0, sink=1
    )


def solve_paper(
    g: Graph, tf: TwoFactorization, delta: int
) -> Transversal | Infeasible:
    """Solve the selection network; read the transversal off the flow.

    H is the set of edges forwarding a unit to an endpoint; each such edge
    charges exactly one endpoint.  Infeasibility is an ordinary result
    carrying the unsaturated-supply witness.
    """
    layout, cycles = _layout_for(g, tf)
    net = build_network(g, tf, delta)
    sol = feasible_circulation(net)
    if not sol.feasible:
        return Infeasible(witness=sol.witness)
    assert sol.flows is not None
    pos = 0
    hits: dict[tuple[int, int], tuple[int, ...]] = {}
    pos += len(cycles)  # demand arcs carry no selection information
    selected_per_cycle: dict[tuple[int, int], list[int]] = {}
    for fi, ci, eids in cycles:
        chosen = [eid for off, eid in enumerate(eids) if sol.flows[pos + off] >= 1]
        selected_per_cycle[(fi, ci)] = chosen
        pos += len(eids)
    charge: dict[int, int] = {}
    edges: list[int] = []
    for eid, (u, v) in enumerate(g.edges):
        fu = sol.flows[pos]
        fv = sol.flows[pos + 1]
        pos += 2
        if fu + fv >= 1:
            edges.append(eid)
            charge[eid] = u if fu >= 1 else v
    for key, chosen in selected_per_cycle.items():
        hits[key] = tuple(chosen)
    return Transversal(
        edges=tuple(edges), charge=charge, hits=hits, mode="paper"
    )


def solve_strict(
    g: Graph,
    tf: TwoFactorization,
    delta: int,
    time_budget: float = DEFAULT_TIME_BUDGET,
) -> Transversal | Exhausted | None:
    """Exact search for a transversal whose subgraph degree is at most delta.

    One edge per cycle suffices (cycles are edge-disjoint, and dropping
    surplus edges never raises a degree), so the search branches over
    cycles in ascending length, trying candidate edges by descending
    minimum remaining endpoint budget.  Returns None when the full search
    proves no transversal exists, Exhausted on timeout.
    """
    _, cycles = _layout_for(g, tf)
    order = sorted(cycles, key=lambda c: (len(c[2]), c[0], c[1]))
    budget = [delta] * g.n
    chosen: list[int] = []
    deadline = time.monotonic() + time_budget
    explored = 0
    timed_out = False

    def viable(eids: list[int]) -> bool:
        return any(
            budget[u] > 0 and budget[v] > 0
            for u, v in (g.endpoints(e) for e in eids)
        )

    def search(i: int) -> bool:
        nonlocal explored, timed_out
        explored += 1
        if explored % 1024 == 0 and time.monotonic() > deadline:
            timed_out = True
            return False
        if i == len(order):
            return True
        _, _, eids = order[i]
        cands = [
            (e, min(budget[g.endpoints(e)[0]], budget[g.endpoints(e)[1]]))
            for e in eids
        ]
        cands = [(e, b) for e, b in cands if b > 0]
        cands.sort(key=lambda p: (-p[1], p[0]))
        for e, _ in cands:
            u, v = g.endpoints(e)
            budget[u] -= 1
            budget[v] -= 1
            if all(viable(rest[2]) for rest in order[i + 1 :]):
                chosen.append(e)
                if search(i + 1):
                    return True
                chosen.pop()
            budget[u] += 1
            budget[v] += 1
            if timed_out:
                return False
        return False

    if search(0):
        hits = {
            (fi, ci): (e,) for (fi, ci, _), e in zip(order, chosen)
        }
        return Transversal(
            edges=tuple(sorted(chosen)), charge=None, hits=hits, mode="strict"
        )
    if timed_out:
        return Exhausted(nodes_explored=explored)
    return None


def transversal_degree(g: Graph, edges) -> int:
    """Maximum vertex degree of the subgraph spanned by the given edge ids."""
    deg = [0] * g.n
    for e in edges:
        u, v = g.endpoints(e)
        deg[u] += 1
        deg[v] += 1
    return max(deg, default=0)


def verify_transversal(
    g: Graph,
    tf: TwoFactorization,
    t: Transversal,
    delta: int,
    strict: bool,
) -> tuple[bool, list[str]]:
    """Re-check hit-totality and the mode-appropriate degree bound.

    Strict mode requires subgraph degree <= delta.  Paper mode requires
    per-vertex charges <= delta and only *reports* the true subgraph
    degree (a warning, not a failure, when it exceeds delta).
    """
    diags: list[str] = []
    edge_set = set(t.edges)
    for e in edge_set:
        if e >= g.m:
            return False, [f"unknown edge id {e}"]
    for fi, ci, cyc in tf.cycles():
        eids = {
            g.edge_id(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))
        }
        if not eids & edge_set:
            return False, [f"cycle ({fi},{ci}) unhit"]
    true_deg = transversal_degree(g, edge_set)
    if strict:
        if true_deg > delta:
            return False, [
                f"subgraph degree {true_deg} exceeds delta={delta} in strict mode"
            ]
    else:
        if t.charge is None:
            return False, ["paper-mode transversal missing charges"]
        if set(t.charge) != edge_set:
            return False, ["charge map does not match edge set"]
        counts = [0] * g.n
        for e, w in t.charge.items():
            u, v = g.endpoints(e)
            if w not in (u, v):
                return False, [f"edge {e} charges non-endpoint {w}"]
            counts[w] += 1
        worst = max(counts, default=0)
        if worst > delta:
            return False, [f"vertex charge {worst} exceeds delta={delta}"]
        if true_deg > delta:
            diags.append(
                f"warning: true degree {true_deg} exceeds delta={delta} "
                "(charges within budget)"
            )
    return True, diags
