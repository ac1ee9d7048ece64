import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cutgap.decompose import (SPLIT_MAX_EDGES, SplitBoundError, SplitResult, complete_witness_for_a1,
                              f_lower_witness, split_search, splitting_gap_bound, splitting_limit, verify_split)
from cutgap.graphcore import Edge, MultiGraph, edge_connectivity, is_k_edge_connected

K33 = MultiGraph.from_pairs(6, [(u, v) for u in range(3) for v in range(3, 6)])
C3 = MultiGraph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])


def brute_split(g, a, b):
    groups = {}
    for e in g.edges:
        groups[e.pair] = groups.get(e.pair, 0) + e.mult
    items = sorted(groups.items())
    for counts in product(*(range(m + 1) for _, m in items)):
        one = MultiGraph(g.n, [Edge(u, v, 0, c) for ((u, v), _), c in zip(items, counts) if c])
        two = MultiGraph(g.n, [Edge(u, v, 0, m - c) for ((u, v), m), c in zip(items, counts) if m - c])
        if is_k_edge_connected(one, a) and is_k_edge_connected(two, b):
            return True
    return False


def random_multigraph(rng, n, m):
    edges = [Edge(rng.randrange(v), v) for v in range(1, n)]
    while len(edges) < m:
        u, v = rng.sample(range(n), 2)
        edges.append(Edge(u, v))
    return MultiGraph(n, edges)


def test_k4_splits_into_two_trees():
    res = split_search(MultiGraph.complete(4), 1, 1)
    assert res.feasible and verify_split(MultiGraph.complete(4), res, 1, 1)
    assert sum(p.total_multiplicity() for p in res.partition) == 6


def test_k33_and_c3_do_not_split():
    assert not split_search(K33, 1, 1).feasible
    assert not split_search(C3, 1, 1).feasible


def test_witnesses():
    w = f_lower_witness(1, 1, K33)
    assert w.verified and w.bound == 4
    w = f_lower_witness(1, 1, C3)
    assert w.verified and w.bound == 3
    path = MultiGraph.from_pairs(3, [(0, 1), (1, 2)])
    w = f_lower_witness(1, 1, path)
    assert w.verified and w.bound == 2
    w = f_lower_witness(2, 1, path)
    assert not w.verified and "cut" in w.reason
    assert not f_lower_witness(1, 1, MultiGraph.complete(4)).verified
    assert not f_lower_witness(1, 1, MultiGraph(1)).verified


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_complete_witness_for_a1(a):
    w = complete_witness_for_a1(a)
    assert w.verified and w.bound == a + 2


def test_doubled_cycle_and_k5():
    c5x2 = MultiGraph(5, [Edge(i, (i + 1) % 5, 1, 2) for i in range(5)])
    for a, b in ((1, 1), (2, 2)):
        res = split_search(c5x2, a, b)
        assert res.feasible and verify_split(c5x2, res, a, b)
    res = split_search(MultiGraph.complete(5), 2, 2)
    assert res.feasible and verify_split(MultiGraph.complete(5), res, 2, 2)
    # 10 edges cannot hold 5 + 8
    assert not split_search(c5x2, 2, 3).feasible


def test_verify_split_rejects_wrong_partitions():
    g = MultiGraph.complete(4)
    res = split_search(g, 1, 1)
    p1, p2 = res.partition
    assert not verify_split(g, SplitResult(True, (p1, p1)), 1, 1)
    assert not verify_split(g, SplitResult(False), 1, 1)
    assert not verify_split(g, res, 2, 1)


def test_split_bounds_and_arguments():
    big = MultiGraph(2, [Edge(0, 1, 1, SPLIT_MAX_EDGES + 1)])
    with pytest.raises(SplitBoundError):
        split_search(big, 1, 1)
    with pytest.raises(ValueError):
        split_search(C3, 0, 1)
    assert split_search(MultiGraph(1), 1, 1).feasible


def test_search_agrees_with_brute_force():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(2, 5)
        g = random_multigraph(rng, n, rng.randint(n - 1, 9))
        for a, b in ((1, 1), (1, 2), (2, 1), (2, 2)):
            res = split_search(g, a, b)
            assert res.feasible == brute_split(g, a, b)
            if res.feasible:
                assert verify_split(g, res, a, b)


def test_four_connected_multigraphs_split():
    rng = random.Random(31)
    seen = 0
    while seen < 25:
        n = rng.randint(2, 6)
        g = random_multigraph(rng, n, rng.randint(2 * n, 20))
        if edge_connectivity(g) < 4:
            continue
        res = split_search(g, 1, 1)
        assert res.feasible and verify_split(g, res, 1, 1)
        seen += 1


def test_bound_examples():
    assert splitting_gap_bound(2, 2, 1, 10) == Fraction(2047, 1024)
    assert splitting_gap_bound(0, 3, 1, 0) == 1
    assert splitting_limit(2, 2, 1, 10) == Fraction(2049, 1024)
    with pytest.raises(ValueError):
        splitting_gap_bound(1, 0, 1, 1)


@given(st.integers(0, 30), st.integers(1, 30), st.integers(1, 20), st.integers(0, 20))
def test_bound_never_exceeds_limit(c, k, t, n):
    value = splitting_gap_bound(c, k, t, n)
    assert isinstance(value, Fraction)
    assert value <= splitting_limit(c, k, t, n)
    assert value * k * 2 ** n >= 2 ** n * (k + c) - c
