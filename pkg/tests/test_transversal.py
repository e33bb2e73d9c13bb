import random

import pytest

from linarb.factorize import two_factorize
from linarb.flow import UNBOUNDED
from linarb.generators import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    random_regular_with_girth,
)
from linarb.graph import girth
from linarb.transversal import (
    Exhausted,
    Infeasible,
    RegimeError,
    Transversal,
    build_network,
    candidate_plans,
    plan_regime,
    solve_paper,
    solve_strict,
    transversal_degree,
    verify_transversal,
)
from linarb.verify import oracle_transversal


def _ceil_div(a, b):
    return -(-a // b)


def test_plan_regime_examples():
    p = plan_regime(2, 4)
    assert (p.tag, p.delta, p.t) == ("G2K", 1, 1)
    p = plan_regime(4, 4)
    assert (p.tag, p.delta, p.t) == ("GK", 2, 2)
    p = plan_regime(10, 5, c_max=10)
    assert (p.tag, p.delta, p.t) == ("GK2", 4, 3)


def test_plan_regime_general_family():
    # nothing named applies: k=50, girth=3 -> c = ceil(100/3) = 34
    p = plan_regime(50, 3, c_max=64)
    assert p.tag == "G2KC(34)"
    assert p.delta == 34
    assert p.t == (3 * 34 + 3) // 2


def test_plan_regime_no_applicable():
    with pytest.raises(RegimeError, match="no applicable regime"):
        plan_regime(100, 3, c_max=2)


def test_candidate_plans_satisfy_feasibility_condition():
    for k in (1, 2, 3, 5, 8, 13):
        for g in (3, 4, 5, 8, 13, 40):
            for p in candidate_plans(k, g):
                assert g >= _ceil_div(2 * k, p.delta)
                assert (p.t, p.delta) in {
                    (1, 1), (2, 2), (3, 4), (5, 8),
                    ((3 * p.delta + 3) // 2, p.delta),
                }


def test_build_network_counts_for_c6():
    g = cycle_graph(6)
    tf = two_factorize(g, 1)
    net = build_network(g, tf, 1)
    assert net.node_count == 2 + 1 + 6 + 6
    assert len(net.arcs) == 1 + 6 + 12 + 6
    demand = [a for a in net.arcs if a.tail == 0]
    assert len(demand) == 1
    assert demand[0].lower == 1 and demand[0].capacity is UNBOUNDED


def test_build_network_arc_count_identity():
    rng = random.Random(5)
    for k in (1, 2):
        g, _ = random_regular_with_girth(12, k, 3, seed=rng.randint(0, 99))
        tf = two_factorize(g, k)
        net = build_network(g, tf, 2)
        cycle_count = sum(len(f.cycles) for f in tf.factors)
        total_len = sum(len(c) for f in tf.factors for c in f.cycles)
        assert len(net.arcs) == cycle_count + total_len + 2 * g.m + g.n


def test_build_network_selection_arcs_respect_cycle_index():
    g = complete_bipartite_graph(4, 4)
    tf = two_factorize(g, 2)
    net = build_network(g, tf, 1)
    cycle_count = sum(len(f.cycles) for f in tf.factors)
    assert sum(1 for a in net.arcs if a.tail == 0) == cycle_count
    # selection arcs leave cycle node (fi, ci) only toward edges of that cycle
    cycles = tf.cycles()
    for a in net.arcs:
        if 2 <= a.tail < 2 + cycle_count and a.head >= 2 + cycle_count:
            fi, ci, _ = cycles[a.tail - 2]
            eid = a.head - 2 - cycle_count
            assert tf.cycle_index[eid] == (fi, ci)


def test_solve_paper_on_cycle():
    g = cycle_graph(6)
    tf = two_factorize(g, 1)
    res = solve_paper(g, tf, 1)
    assert isinstance(res, Transversal)
    assert res.mode == "paper"
    assert 1 <= len(res.edges) <= 6
    ok, diags = verify_transversal(g, tf, res, 1, strict=False)
    assert ok, diags


def test_solve_paper_feasible_under_girth_condition():
    # girth >= 2k implies the uniform fractional flow exists, hence an
    # integer one; no Infeasible outcomes allowed here
    rng = random.Random(9)
    for k in (1, 2):
        for _ in range(4):
            g, _ = random_regular_with_girth(
                16, k, 2 * k, seed=rng.randint(0, 999)
            )
            tf = two_factorize(g, k)
            res = solve_paper(g, tf, 1)
            assert isinstance(res, Transversal)
            ok, diags = verify_transversal(g, tf, res, 1, strict=False)
            assert ok, diags


def test_solve_paper_below_condition_reports_either_way():
    # girth < ceil(2k/delta) may still be feasible; both outcomes are valid
    g = complete_graph(5)  # girth 3 < 4 = 2k
    tf = two_factorize(g, 2)
    res = solve_paper(g, tf, 1)
    assert isinstance(res, (Transversal, Infeasible))


def test_solve_strict_on_cycle():
    g = cycle_graph(6)
    tf = two_factorize(g, 1)
    res = solve_strict(g, tf, 1)
    assert isinstance(res, Transversal)
    assert res.mode == "strict"
    assert len(res.edges) == 1
    ok, diags = verify_transversal(g, tf, res, 1, strict=True)
    assert ok, diags


def test_solve_strict_k5_degree_two():
    g = complete_graph(5)
    tf = two_factorize(g, 2)
    res = solve_strict(g, tf, 2)
    assert isinstance(res, Transversal)
    assert transversal_degree(g, res.edges) <= 2
    ok, diags = verify_transversal(g, tf, res, 2, strict=True)
    assert ok, diags


def test_solve_strict_k5_delta_one_matches_oracle():
    g = complete_graph(5)
    tf = two_factorize(g, 2)
    cycles = [list(c) for _, _, c in tf.cycles()]
    oracle = oracle_transversal(g, cycles, 1)
    assert oracle is not None and len(oracle) == 2
    res = solve_strict(g, tf, 1)
    assert isinstance(res, Transversal)
    assert transversal_degree(g, res.edges) <= 1


def test_solve_strict_unsatisfiable_returns_none():
    g = cycle_graph(3)
    tf = two_factorize(g, 1)
    assert solve_strict(g, tf, 0) is None


def test_solve_strict_timeout_is_exhausted():
    g, _ = random_regular_with_girth(30, 3, 3, seed=4)
    tf = two_factorize(g, 3)
    res = solve_strict(g, tf, 1, time_budget=0.0)
    assert res is None or isinstance(res, (Transversal, Exhausted))


def test_verify_transversal_detects_unhit_cycle():
    g = cycle_graph(6)
    tf = two_factorize(g, 1)
    empty = Transversal(edges=(), charge=None, hits={}, mode="strict")
    ok, diags = verify_transversal(g, tf, empty, 1, strict=True)
    assert not ok
    assert "unhit" in diags[0]


def test_verify_transversal_paper_mode_warns_on_true_degree():
    g = cycle_graph(4)
    tf = two_factorize(g, 1)
    # both edges at vertex 0 selected, each charged away from vertex 0:
    # charges stay within delta=1 but the true degree at 0 is 2
    e01 = g.edge_id(0, 1)
    e03 = g.edge_id(0, 3)
    t = Transversal(
        edges=(e01, e03),
        charge={e01: 1, e03: 3},
        hits={(0, 0): (e01, e03)},
        mode="paper",
    )
    ok, diags = verify_transversal(g, tf, t, 1, strict=False)
    assert ok
    assert any("true degree" in d for d in diags)
    ok_strict, diags_strict = verify_transversal(g, tf, t, 1, strict=True)
    assert not ok_strict


def test_paper_charges_always_within_delta():
    rng = random.Random(31)
    for k in (1, 2, 3):
        g, _ = random_regular_with_girth(18, k, 3, seed=rng.randint(0, 999))
        tf = two_factorize(g, k)
        delta = max(1, _ceil_div(2 * k, girth(g)))
        res = solve_paper(g, tf, delta)
        assert isinstance(res, Transversal)
        counts = {}
        for e, w in res.charge.items():
            assert w in g.endpoints(e)
            counts[w] = counts.get(w, 0) + 1
        assert max(counts.values()) <= delta
