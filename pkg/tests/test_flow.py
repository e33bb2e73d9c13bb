import math
import random

import pytest

from linarb.flow import (
    UNBOUNDED,
    Arc,
    FlowNetwork,
    check_flow,
    dump_network,
    feasible_circulation,
    max_flow,
)

from _oracles import (
    brute_circulation_feasible,
    brute_min_cut,
    random_lower_bound_network,
    random_max_flow_network,
)


def test_single_arc():
    net = FlowNetwork(2, [Arc(0, 1, 0, 5)], source=0, sink=1)
    sol = max_flow(net, 0, 1)
    assert sol.value == 5
    assert sol.flows == (5,)


def test_two_parallel_paths():
    net = FlowNetwork(
        4,
        [Arc(0, 1, 0, 1), Arc(1, 3, 0, 1), Arc(0, 2, 0, 1), Arc(2, 3, 0, 1)],
    )
    assert max_flow(net, 0, 3).value == 2


def test_unbounded_path_reports_unbounded():
    net = FlowNetwork(3, [Arc(0, 1, 0, UNBOUNDED), Arc(1, 2, 0, UNBOUNDED)])
    sol = max_flow(net, 0, 2)
    assert sol.value == math.inf
    assert sol.flows is None


def test_unbounded_arc_behind_finite_bottleneck():
    net = FlowNetwork(3, [Arc(0, 1, 0, 3), Arc(1, 2, 0, UNBOUNDED)])
    assert max_flow(net, 0, 2).value == 3


def test_max_flow_rejects_lower_bounds():
    net = FlowNetwork(2, [Arc(0, 1, 1, 2)])
    with pytest.raises(ValueError, match="lower"):
        max_flow(net, 0, 1)


def test_network_validation():
    with pytest.raises(ValueError, match="below lower"):
        FlowNetwork(2, [Arc(0, 1, 3, 2)])
    with pytest.raises(ValueError, match="out of range"):
        FlowNetwork(2, [Arc(0, 5, 0, 1)])


def test_unit_circulation_on_three_cycle():
    net = FlowNetwork(3, [Arc(0, 1, 1, 1), Arc(1, 2, 1, 1), Arc(2, 0, 1, 1)])
    sol = feasible_circulation(net)
    assert sol.feasible
    assert sol.flows == (1, 1, 1)
    ok, problems = check_flow(net, sol.flows)
    assert ok, problems


def test_dead_end_lower_bound_is_infeasible():
    net = FlowNetwork(2, [Arc(0, 1, 1, 1)])
    sol = feasible_circulation(net)
    assert not sol.feasible
    assert sol.witness == ((1, 1, 0),)


def test_source_sink_circulation_uses_return_arc():
    # one unit must cross 0 -> 1 -> 2; only the sink->source return arc
    # makes that possible
    net = FlowNetwork(
        3, [Arc(0, 1, 1, 1), Arc(1, 2, 0, 1)], source=0, sink=2
    )
    sol = feasible_circulation(net)
    assert sol.feasible
    assert sol.flows == (1, 1)
    ok, problems = check_flow(net, sol.flows)
    assert ok, problems


def test_max_flow_matches_brute_min_cut():
    rng = random.Random(101)
    for _ in range(60):
        net = random_max_flow_network(rng)
        sol = max_flow(net, net.source, net.sink)
        assert sol.value == brute_min_cut(net, net.source, net.sink)
        ok, problems = check_flow(net, sol.flows)
        assert ok, problems
        assert all(isinstance(f, int) for f in sol.flows)


def test_feasibility_matches_exhaustive_search():
    rng = random.Random(202)
    for _ in range(60):
        net = random_lower_bound_network(rng)
        sol = feasible_circulation(net)
        assert sol.feasible == brute_circulation_feasible(net)
        if sol.feasible:
            ok, problems = check_flow(net, sol.flows)
            assert ok, problems


def test_solver_is_deterministic():
    rng = random.Random(7)
    net = random_max_flow_network(rng)
    a = max_flow(net, net.source, net.sink)
    b = max_flow(net, net.source, net.sink)
    assert a.flows == b.flows and a.value == b.value


def test_dump_network_lists_arcs():
    net = FlowNetwork(2, [Arc(0, 1, 1, UNBOUNDED)], source=0, sink=1)
    text = dump_network(net)
    assert "0 -> 1" in text and "cap=inf" in text
