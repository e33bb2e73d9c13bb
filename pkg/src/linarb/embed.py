"""Embed a bounded-degree graph into a regular supergraph, girth preserved.

The host consists of M layered copies of the input joined by circulant
shifts: layer-internal edges replicate the input graph, and each vertex
with a degree deficit gains edges to copies of itself in other layers.  A
shift s < M/2 contributes two to the degree (to layers +s and -s); the
antipodal shift M/2 contributes one and is reserved for odd deficits.
Shift values are drawn greedily from a single difference-distinct (Sidon)
pool so short circulant cycles are unlikely; the girth requirement is then
*checked outright* on the constructed graph, doubling M and retrying when
the check fails.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, girth, max_degree

__all__ = [
    "EmbeddingSpec",
    "EmbeddedGraph",
    "EmbedError",
    "embed",
    "verify_embedding",
]

DEFAULT_MAX_DOUBLINGS = 8


class EmbedError(ValueError):
    """Invalid embedding request, or no verified host within the retry bound."""


@dataclass(frozen=True)
class EmbeddingSpec:
    """Host parameters: degree target, girth target, layer count, and the
    per-vertex shift sets that pay down each degree deficit."""

    host_degree: int
    girth_target: int
    layer_count: int
    shifts: dict[int, tuple[int, ...]]


@dataclass(frozen=True)
class EmbeddedGraph:
    """Host graph on n*M vertices; input vertex i in layer a is i*M + a."""

    graph: Graph
    spec: EmbeddingSpec

    @property
    def layer_count(self) -> int:
        return self.spec.layer_count

    def vertex(self, i: int, layer: int) -> int:
        return i * self.spec.layer_count + layer

    def base_layer(self) -> list[int]:
        m = self.spec.layer_count
        return [i * m for i in range(self.graph.n // m)]


def _greedy_sidon(count: int, modulus: int) -> list[int] | None:
    """First ``count`` residues in 1..modulus/2-1 with pairwise-distinct
    differences mod ``modulus`` (the antipode is excluded: it is reserved).

    Also keeps differences distinct from the antipode itself, so mixed
    short cycles through antipodal edges stay unlikely.  Returns None when
    the range cannot supply enough values.
    """
    if count == 0:
        return []
    half = modulus // 2
    chosen: list[int] = []
    diffs = {half, modulus - half}
    for cand in range(1, half):
        new: set[int] = set()
        ok = True
        for a in chosen + [0]:
            for d in ((cand - a) % modulus, (a - cand) % modulus):
                if d == 0 or d in diffs or d in new:
                    ok = False
                    break
                new.add(d)
            if not ok:
                break
        if ok:
            chosen.append(cand)
            diffs |= new
            if len(chosen) == count:
                return chosen
    return None


def _build_host(
    h: Graph, degree: int, girth_target: int, layers: int
) -> EmbeddedGraph | None:
    """One construction attempt at a fixed (even) layer count; None when the
    Sidon pool under layers/2 cannot cover every paired deficit slot."""
    deficits = [degree - h.degree(v) for v in range(h.n)]
    pair_slots = sum(d // 2 for d in deficits)
    pool = _greedy_sidon(pair_slots, layers)
    if pool is None:
        return None
    half = layers // 2
    shifts: dict[int, tuple[int, ...]] = {}
    cursor = 0
    for v, d in enumerate(deficits):
        own = pool[cursor : cursor + d // 2]
        cursor += d // 2
        if d % 2 == 1:
            own = own + [half]
        if own:
            shifts[v] = tuple(own)
    edges: set[tuple[int, int]] = set()
    for u, v in h.edges:
        for a in range(layers):
            x, y = u * layers + a, v * layers + a
            edges.add((x, y) if x < y else (y, x))
    for v, own in shifts.items():
        for s in own:
            for a in range(layers):
                x = v * layers + a
                y = v * layers + (a + s) % layers
                if x != y:
                    edges.add((x, y) if x < y else (y, x))
    g = Graph(h.n * layers, edges)
    spec = EmbeddingSpec(
        host_degree=degree,
        girth_target=girth_target,
        layer_count=layers,
        shifts=shifts,
    )
    return EmbeddedGraph(graph=g, spec=spec)


def embed(
    h: Graph,
    degree: int,
    girth_target: int,
    layers: int | None = None,
    max_doublings: int = DEFAULT_MAX_DOUBLINGS,
) -> EmbeddedGraph:
    """Regular host containing ``h`` induced in every layer.

    Requires degree >= max degree of h and girth_target <= girth of h.
    The layer count starts at 2 * girth_target * (degree + 1) (rounded
    even) unless given, and doubles until the constructed host passes
    regularity and girth verification; EmbedError after ``max_doublings``.
    """
    if degree < max_degree(h):
        raise EmbedError(
            f"target degree {degree} below max degree {max_degree(h)} of input"
        )
    if girth_target >= 3 and girth(h) < girth_target:
        raise EmbedError(
            f"input girth {girth(h)} below target {girth_target}"
        )
    if h.n == 0:
        raise EmbedError("cannot embed the empty graph")
    m = layers if layers is not None else 2 * max(girth_target, 3) * (degree + 1)
    if m % 2 == 1:
        m += 1
    if m < 4:
        m = 4
    for _ in range(max_doublings + 1):
        eg = _build_host(h, degree, girth_target, m)
        if eg is not None:
            ok, _ = verify_embedding(h, eg, degree, girth_target)
            if ok:
                return eg
        m *= 2
    raise EmbedError(
        f"no verified host within {max_doublings} doublings "
        f"(degree={degree}, girth_target={girth_target}); adjacent odd "
        "deficits force antipodal 4-cycles that no layer count removes"
    )


def verify_embedding(
    h: Graph, eg: EmbeddedGraph, degree: int, girth_target: int
) -> tuple[bool, list[str]]:
    """Direct whole-graph checks: layer 0 induces exactly h, the host is
    degree-regular, and the host has no cycle shorter than the target."""
    diags: list[str] = []
    g = eg.graph
    m = eg.layer_count
    if g.n != h.n * m:
        return False, [f"host has {g.n} vertices, expected {h.n * m}"]
    base = [i * m for i in range(h.n)]
    for i in range(h.n):
        for j in range(i + 1, h.n):
            host_edge = g.has_edge(base[i], base[j])
            if host_edge != h.has_edge(i, j):
                return False, [
                    f"not induced: pair ({i}, {j}) "
                    f"{'extra in' if host_edge else 'missing from'} base layer"
                ]
    bad = [v for v in range(g.n) if g.degree(v) != degree]
    if bad:
        return False, [
            f"not {degree}-regular: vertex {bad[0]} has degree {g.degree(bad[0])}"
        ]
    if girth_target >= 3 and g.has_cycle_shorter_than(girth_target):
        return False, [f"girth violated: cycle shorter than {girth_target}"]
    return True, diags
