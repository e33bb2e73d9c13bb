import random

import pytest

from linarb.factorize import (
    Factor,
    TwoFactorization,
    factorization_from_cycles,
    two_factorize,
    verify_two_factorization,
)
from linarb.generators import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    random_regular_with_girth,
)
from linarb.graph import Graph, girth


def test_cycle_is_its_own_factor():
    g = cycle_graph(6)
    tf = two_factorize(g, 1)
    assert tf.k == 1
    assert len(tf.factors[0].cycles) == 1
    assert len(tf.factors[0].cycles[0]) == 6
    ok, diags = verify_two_factorization(g, tf)
    assert ok, diags


def test_k5_two_factors_are_five_cycles():
    # any vertex-disjoint cycle cover of 5 vertices by cycles of length >= 3
    # is a single 5-cycle
    g = complete_graph(5)
    tf = two_factorize(g, 2)
    ok, diags = verify_two_factorization(g, tf)
    assert ok, diags
    for f in tf.factors:
        assert len(f.cycles) == 1
        assert len(f.cycles[0]) == 5


def test_k44_factors_have_even_cycles():
    g = complete_bipartite_graph(4, 4)
    tf = two_factorize(g, 2)
    ok, diags = verify_two_factorization(g, tf)
    assert ok, diags
    for f in tf.factors:
        covered = set()
        for cyc in f.cycles:
            assert len(cyc) % 2 == 0 and len(cyc) >= 4
            covered.update(cyc)
        assert covered == set(range(8))


def test_factorization_on_random_corpus():
    rng = random.Random(17)
    for k in (1, 2, 3):
        for _ in range(4):
            n = rng.randint(max(3, 2 * k + 1), 24)
            g, _ = random_regular_with_girth(n, k, 3, seed=rng.randint(0, 999))
            tf = two_factorize(g, k)
            ok, diags = verify_two_factorization(g, tf)
            assert ok, diags
            total = sum(len(c) for f in tf.factors for c in f.cycles)
            assert total == g.m == k * g.n
            shortest = min(len(c) for f in tf.factors for c in f.cycles)
            assert shortest >= girth(g)


def test_disconnected_graph_factorizes_per_component():
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    g = Graph(6, edges)
    tf = two_factorize(g, 1)
    ok, diags = verify_two_factorization(g, tf)
    assert ok, diags
    assert len(tf.factors[0].cycles) == 2


def test_rejects_non_regular_input():
    with pytest.raises(ValueError, match="regular"):
        two_factorize(Graph(3, [(0, 1), (1, 2)]), 1)
    with pytest.raises(ValueError, match="regular"):
        two_factorize(cycle_graph(5), 2)


def test_verifier_flags_edge_reuse():
    g = cycle_graph(3)
    cyc = (0, 1, 2)
    tf = TwoFactorization(
        k=2,
        factors=(Factor(cycles=(cyc,)), Factor(cycles=(cyc,))),
        cycle_index={g.edge_id(0, 1): (0, 0)},
    )
    ok, diags = verify_two_factorization(g, tf)
    assert not ok
    assert "edge-disjointness" in diags[0]


def test_verifier_flags_missing_coverage():
    g = complete_graph(5)
    tf_good = two_factorize(g, 2)
    # drop one whole factor: k claims 2 but only one factor present
    tf_bad = TwoFactorization(
        k=2,
        factors=(tf_good.factors[0],),
        cycle_index={},
    )
    ok, diags = verify_two_factorization(g, tf_bad)
    assert not ok


def test_verifier_flags_non_spanning_factor():
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    tf = TwoFactorization(
        k=1,
        factors=(Factor(cycles=((0, 1, 2),)),),
        cycle_index={},
    )
    ok, diags = verify_two_factorization(g, tf)
    assert not ok
    assert "span" in diags[0] or "cover" in diags[0]


def test_hint_round_trip():
    g = cycle_graph(8)
    tf = factorization_from_cycles(g, [[[0, 1, 2, 3, 4, 5, 6, 7]]])
    assert tf.k == 1
    with pytest.raises(ValueError, match="invalid factorization"):
        factorization_from_cycles(g, [[[0, 1, 2]]])
