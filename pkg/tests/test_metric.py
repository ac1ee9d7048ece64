import random
from fractions import Fraction

import pytest

from conftest import random_connected_graph, random_metric_graph, random_tree_pairs
from cutgap.bruteforce import all_paths_min, min_connected_multiset, min_multiset_by_size
from cutgap.cutlp import is_metric
from cutgap.graphcore import GraphError, MultiGraph, is_k_edge_connected
from cutgap.metric import (MetricError, closure_graph, ecsm_to_ecss, expand_to_paths, is_k_connected_multiset,
                           metric_closure, minimalize, multiset_cost, multiset_graph, pair_multiset)


def doubled_tree(rng, g):
    index = {e.pair: i for i, e in enumerate(g.edges)}
    return {index[min(u, v), max(u, v)]: 2 for u, v in random_tree_pairs(rng, g.n)}


def random_two_ecsm(rng, g):
    """A doubled spanning tree plus a few random extra copies."""
    ms = doubled_tree(rng, g)
    for _ in range(rng.randint(0, 3)):
        i = rng.randrange(g.m)
        ms[i] = ms.get(i, 0) + 1
    return ms


def test_closure_examples():
    path = MultiGraph(3, [(0, 1, 2), (1, 2, 3)])
    dist, paths = metric_closure(path)
    assert dist[0][2] == 5 and paths[0, 2] == [0, 1]
    tri = MultiGraph(3, [(0, 1, 5), (1, 2, 1), (0, 2, 1)])
    dist, paths = metric_closure(tri)
    assert dist[0][1] == 2 and paths[0, 1] == [2, 1]
    assert is_metric(closure_graph(tri))
    with pytest.raises(GraphError):
        metric_closure(MultiGraph(3, [(0, 1)]))


def test_closure_matches_path_enumeration():
    rng = random.Random(3)
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(2, 6), rng.randint(0, 5))
        dist, paths = metric_closure(g)
        for u in range(g.n):
            for v in range(g.n):
                if u != v:
                    assert dist[u][v] == all_paths_min(g, u, v)
                    assert sum(g.edges[i].cost for i in paths[u, v]) == dist[u][v]
        assert is_metric(closure_graph(g))


def test_expand_to_paths_keeps_cost_and_connectivity():
    rng = random.Random(8)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(1, 5))
        dist, _ = metric_closure(g)
        tour = {(i, (i + 1) % g.n): 1 for i in range(g.n)}
        ms = expand_to_paths(tour, g)
        assert multiset_cost(g, ms) == sum(dist[u][v] for u, v in tour)
        assert is_k_connected_multiset(g, ms, 2)


def test_minimalize_example():
    k4 = MultiGraph.complete(4)
    ms = {i: 1 for i in range(6)}
    out = minimalize(k4, ms, 2)
    assert sum(out.values()) == 4 and is_k_connected_multiset(k4, out, 2)
    with pytest.raises(GraphError):
        minimalize(k4, {0: 1}, 2)


def test_minimalize_is_minimal_on_random_input():
    rng = random.Random(21)
    for _ in range(25):
        g = random_metric_graph(rng, rng.randint(3, 6))
        ms = random_two_ecsm(rng, g)
        out = minimalize(g, ms, 2)
        assert is_k_connected_multiset(g, out, 2)
        assert all(out[i] <= ms[i] for i in out)
        for i in out:
            less = dict(out)
            less[i] -= 1
            assert not is_k_connected_multiset(g, less, 2)


def test_conversion_of_k3_double_edge():
    k3 = MultiGraph.complete(3)
    trace = []
    out = ecsm_to_ecss(k3, {0: 2, 2: 2}, trace)
    assert out == {0: 1, 1: 1, 2: 1}
    assert len(trace) == 1


def test_conversion_rejects_bad_input():
    with pytest.raises(MetricError):
        ecsm_to_ecss(MultiGraph.complete(2), {0: 2})
    bad = MultiGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 5)])
    with pytest.raises(MetricError):
        ecsm_to_ecss(bad, {0: 2, 1: 2})
    with pytest.raises(GraphError):
        ecsm_to_ecss(MultiGraph.complete(4), {0: 1})


def check_conversion(g, ms):
    out = ecsm_to_ecss(g, ms)
    assert all(c == 1 for c in out.values())
    assert is_k_edge_connected(multiset_graph(g, out), 2)
    assert multiset_cost(g, out) <= multiset_cost(g, ms)
    return out


def test_conversion_on_random_metric_instances():
    rng = random.Random(77)
    for _ in range(60):
        g = random_metric_graph(rng, rng.randint(3, 8))
        check_conversion(g, random_two_ecsm(rng, g))


def test_conversion_on_positive_metric_with_doubled_path():
    k5 = MultiGraph.complete(5)
    index = {e.pair: i for i, e in enumerate(k5.edges)}
    ms = {index[i, i + 1]: 2 for i in range(4)}
    out = check_conversion(k5, ms)
    assert multiset_cost(k5, out) == 5
    assert sorted(pair_multiset(k5, out).values()) == [1] * 5


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_unit_complete_graph_optima_agree(n):
    g = MultiGraph.complete(n)
    ecsm, ms = min_multiset_by_size(g, 2)
    ecss, _ = min_connected_multiset(g, 2, 1)
    assert ecsm == ecss == n
    assert multiset_cost(g, check_conversion(g, ms)) == n


def test_metric_optima_agree_on_random_small_instances():
    rng = random.Random(404)
    checked = 0
    while checked < 12:
        g = random_metric_graph(rng, rng.randint(3, 5), span=4)
        if any(e.cost == 0 for e in g.edges):
            continue
        ecsm, ms = min_connected_multiset(g, 2, 2)
        ecss, _ = min_connected_multiset(g, 2, 1)
        assert ecsm == ecss
        assert multiset_cost(g, check_conversion(g, ms)) == ecsm
        checked += 1


def test_pair_multiset_merges_parallel_records():
    g = MultiGraph(2, [(0, 1, 1), (0, 1, 2)])
    assert pair_multiset(g, {0: 1, 1: 2}) == {(0, 1): 3}
    assert multiset_cost(g, {0: 1, 1: 2}) == Fraction(5)
