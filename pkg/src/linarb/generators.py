"""Generators for even-regular test graphs with controlled girth.

The random family is a union of k uniformly random cyclic permutations of
the vertex set: each permutation contributes one Hamilton cycle, so the
result is 2k-regular by construction and ships with a known decomposition
into k spanning cycle sets (the "hint"), letting callers skip the generic
factorization step.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph

__all__ = [
    "GenSpec",
    "GenerationError",
    "generate",
    "random_regular_with_girth",
    "named_graph",
    "NAMED_GRAPHS",
]

DEFAULT_RETRIES = 10_000

FAMILIES = (
    "cycle",
    "complete",
    "complete_bipartite",
    "circulant",
    "random_regular",
    "named",
)

NAMED_GRAPHS = ("petersen", "k5", "k7", "k44")


class GenerationError(ValueError):
    """Raised for invalid generator parameters or an exhausted retry budget."""


@dataclass(frozen=True)
class GenSpec:
    """Parameters for one generated graph.

    Family-specific fields: ``n`` (cycle, complete, circulant,
    random_regular), ``parts`` (complete_bipartite), ``shifts`` (circulant),
    ``k`` / ``g_min`` / ``retries`` (random_regular), ``name`` (named).
    ``seed`` drives all randomized families.
    """

    family: str
    n: int = 0
    k: int = 0
    g_min: int = 3
    parts: tuple[int, int] = (0, 0)
    shifts: tuple[int, ...] = ()
    name: str = ""
    seed: int = 0
    retries: int = DEFAULT_RETRIES


# FactorizationHint: one entry per factor, each a list of cycles given as
# vertex sequences.  For the permutation model every factor is one Hamilton
# cycle.
FactorizationHint = list[list[list[int]]]


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GenerationError("cycle requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GenerationError("complete_bipartite requires both parts >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def circulant_graph(n: int, shifts: tuple[int, ...]) -> Graph:
    if n < 3:
        raise GenerationError("circulant requires n >= 3")
    if len(set(shifts)) != len(shifts):
        raise GenerationError("circulant shifts must be distinct")
    for s in shifts:
        if not 1 <= s <= n // 2:
            raise GenerationError(
                f"circulant shift {s} outside valid range 1..{n // 2}"
            )
    edges = {
        tuple(sorted((i, (i + s) % n))) for s in shifts for i in range(n)
    }
    return Graph(n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def named_graph(name: str) -> Graph:
    table = {
        "petersen": petersen_graph,
        "k5": lambda: complete_graph(5),
        "k7": lambda: complete_graph(7),
        "k44": lambda: complete_bipartite_graph(4, 4),
    }
    if name not in table:
        raise GenerationError(
            f"unknown named graph {name!r}; choose from {', '.join(NAMED_GRAPHS)}"
        )
    return table[name]()


def _random_hamilton_cycle(rng: random.Random, n: int) -> list[int]:
    order = list(range(n))
    rng.shuffle(order)
    return order


def random_regular_with_girth(
    n: int,
    k: int,
    g_min: int,
    seed: int,
    retries: int = DEFAULT_RETRIES,
) -> tuple[Graph, FactorizationHint]:
    """2k-regular simple graph with girth >= g_min, plus its known factors.

    Rejection-samples unions of k random Hamilton cycles until the union is
    simple and meets the girth floor.  The retry sequence is a pure function
    of the seed.  Raises GenerationError when the budget runs out, which
    signals an over-constrained (n, k, g_min) combination.
    """
    if n < 3:
        raise GenerationError("random_regular requires n >= 3")
    if k < 1:
        raise GenerationError("random_regular requires k >= 1")
    if g_min > n:
        raise GenerationError(
            f"retry budget exhausted: girth cannot exceed n={n} (g_min={g_min})"
        )
    rng = random.Random(seed)
    for _ in range(retries):
        seen: set[tuple[int, int]] = set()
        cycles: list[list[int]] = []
        simple = True
        for _ in range(k):
            order = _random_hamilton_cycle(rng, n)
            for i in range(n):
                u, v = order[i], order[(i + 1) % n]
                e = (u, v) if u < v else (v, u)
                if e in seen:
                    simple = False
                    break
                seen.add(e)
            if not simple:
                break
            cycles.append(order)
        if not simple:
            continue
        g = Graph(n, seen)
        if g_min > 3 and g.has_cycle_shorter_than(g_min):
            continue
        hint: FactorizationHint = [[c] for c in cycles]
        return g, hint
    raise GenerationError(
        f"retry budget exhausted after {retries} attempts "
        f"(n={n}, k={k}, g_min={g_min}, seed={seed})"
    )


def generate(spec: GenSpec) -> Graph:
    """Build the graph described by ``spec``."""
    if spec.family == "cycle":
        return cycle_graph(spec.n)
    if spec.family == "complete":
        return complete_graph(spec.n)
    if spec.family == "complete_bipartite":
        return complete_bipartite_graph(*spec.parts)
    if spec.family == "circulant":
        return circulant_graph(spec.n, spec.shifts)
    if spec.family == "random_regular":
        g, _ = random_regular_with_girth(
            spec.n, spec.k, spec.g_min, spec.seed, spec.retries
        )
        return g
    if spec.family == "named":
        return named_graph(spec.name)
    raise GenerationError(
        f"unknown family {spec.family!r}; choose from {', '.join(FAMILIES)}"
    )
