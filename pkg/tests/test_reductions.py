import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_tree_pairs
from cutgap.bruteforce import min_cost_kecss
from cutgap.graphcore import GraphError, edge_connectivity, is_k_edge_connected
from cutgap.reductions import (Gadget, PathCoverInstance, ReductionError, SetCoverInstance, all_setcover_instances,
                               augmented_graph, cover_from_witness, covered_by_paths, covers, fundamental_cut_sizes,
                               kecss_from_pcot, normalize_witness, orderings, path_edges, pcot_is_feasible, pcot_opt,
                               setcover_opt, setcover_to_pcot, witness_from_cover)

PATH4 = PathCoverInstance.build(4, [(0, 1), (1, 2), (2, 3)], [(0, 2), (1, 3), (0, 3)])
STAR = PathCoverInstance.build(4, [(0, 1), (0, 2), (0, 3)], [(1, 2), (2, 3), (1, 3)])


def random_instance(rng, n, npairs):
    tree = random_tree_pairs(rng, n)
    pairs = []
    while len(pairs) < npairs:
        u, v = rng.sample(range(n), 2)
        pairs.append((u, v))
    return PathCoverInstance.build(n, tree, pairs)


def brute_pcot(inst):
    for size in range(len(inst.pairs) + 1):
        for combo in combinations(inst.pairs, size):
            if covered_by_paths(inst, combo):
                return size
    return None


def test_instance_validation():
    with pytest.raises(GraphError):
        PathCoverInstance.build(4, [(0, 1), (1, 2)], [])
    with pytest.raises(GraphError):
        PathCoverInstance.build(3, [(0, 1), (1, 2), (0, 2)], [])
    with pytest.raises(GraphError):
        PathCoverInstance.build(3, [(0, 1), (1, 2)], [(0, 5)])
    assert PathCoverInstance.build(3, [(0, 1), (1, 2)], [(2, 0)]).pairs == ((0, 2),)


def test_path_edges_examples():
    assert path_edges(PATH4, (0, 3)) == frozenset({0, 1, 2})
    assert path_edges(PATH4, (1, 3)) == frozenset({1, 2})
    assert path_edges(STAR, (1, 3)) == frozenset({0, 2})
    with pytest.raises(ReductionError):
        path_edges(PATH4, (2, 2))


def test_pcot_feasibility_examples():
    assert pcot_is_feasible(PATH4, [(0, 3)])
    assert not pcot_is_feasible(PATH4, [(0, 2)])
    assert pcot_is_feasible(PATH4, [(0, 2), (1, 3)])
    assert not pcot_is_feasible(STAR, [(1, 2)])
    assert pcot_is_feasible(STAR, [(1, 2), (2, 3)])


def test_pcot_opt_examples():
    assert pcot_opt(PATH4).size == 1 and pcot_opt(PATH4).witness == ((0, 3),)
    assert pcot_opt(STAR).size == 2
    bare = PathCoverInstance.build(3, [(0, 1), (1, 2)], [(0, 1)])
    assert not pcot_opt(bare).feasible


def test_pcot_opt_equals_exhaustive_search():
    rng = random.Random(11)
    for _ in range(150):
        inst = random_instance(rng, rng.randint(2, 8), rng.randint(1, 9))
        res = pcot_opt(inst)
        want = brute_pcot(inst)
        assert res.feasible == (want is not None)
        if res.feasible:
            assert res.size == want
            assert pcot_is_feasible(inst, res.witness)
            assert [inst.pairs[i] for i in res.indices] == list(res.witness)


def test_equivalence_of_coverage_and_two_connectivity_randomized():
    rng = random.Random(2024)
    agree = 0
    for _ in range(1200):
        inst = random_instance(rng, rng.randint(2, 10), rng.randint(0, 8))
        y = [p for p in inst.pairs if rng.random() < 0.6]
        by_paths = covered_by_paths(inst, y)
        by_cuts = is_k_edge_connected(augmented_graph(inst, y), 2)
        assert by_paths == by_cuts
        agree += 1
    assert agree == 1200


@given(st.integers(2, 9), st.integers(0, 6), st.randoms(use_true_random=False))
def test_equivalence_property(n, npairs, rng):
    inst = random_instance(rng, n, npairs)
    assert pcot_is_feasible(inst, inst.pairs) == is_k_edge_connected(augmented_graph(inst, inst.pairs), 2)


def test_fundamental_cuts_of_a_tree_are_single_edges():
    rng = random.Random(5)
    for _ in range(40):
        inst = random_instance(rng, rng.randint(2, 9), 0)
        assert fundamental_cut_sizes(inst) == [1] * inst.tree.m


def test_kecss_multigraph_form():
    g = kecss_from_pcot(PATH4, 3)
    assert g.n == 4 and g.m == 2 * 3 + 3
    assert sum(1 for e in g.edges if e.cost == 0) == 6
    with pytest.raises(ReductionError):
        kecss_from_pcot(PATH4, 1)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_kecss_simple_form_is_simple(k):
    g = kecss_from_pcot(STAR, k, simple=True)
    assert g.n == 4 * (k + 1)
    assert len({e.pair for e in g.edges}) == g.m
    zero = [e for e in g.edges if e.cost == 0]
    assert len(zero) == 4 * (k + 1) * k // 2 + 3 * (k - 1)
    assert sum(1 for e in g.edges if e.cost == 1) == len(STAR.pairs)
    # zero edges alone: each clique is k-connected, tree links carry k - 1
    from cutgap.graphcore import MultiGraph
    assert edge_connectivity(MultiGraph(g.n, zero)) == k - 1


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("simple", [False, True])
def test_kecss_optimum_equals_pcot_on_small_random_trees(k, simple):
    rng = random.Random(100 + k)
    checked = 0
    while checked < 12:
        inst = random_instance(rng, rng.randint(2, 5), rng.randint(1, 6))
        res = pcot_opt(inst)
        if not res.feasible:
            continue
        cost, _ = min_cost_kecss(kecss_from_pcot(inst, k, simple), k)
        assert cost == res.size
        checked += 1


def test_zero_edge_forcing_does_not_change_optimum():
    for inst in (PATH4, STAR):
        g = kecss_from_pcot(inst, 2)
        assert min_cost_kecss(g, 2, force_zero=True)[0] == min_cost_kecss(g, 2, force_zero=False)[0]


def test_setcover_validation():
    ok = SetCoverInstance.build(3, [(1, 2, 3), (1, 2, 3)])
    assert ok.validate() is ok
    bad = SetCoverInstance.build(3, [(1, 2, 3), (1, 2, 2)])
    problems = bad.violations()
    assert any("3-uniformity" in p for p in problems)
    assert any("2-regularity" in p for p in problems)
    with pytest.raises(ReductionError):
        setcover_to_pcot(bad)
    assert SetCoverInstance.build([4, 5, 6], [(4, 5, 6)]).ground == (4, 5, 6)


def test_instance_catalogue():
    assert len(all_setcover_instances(0)) == 1
    assert len(all_setcover_instances(2)) == 1
    assert all_setcover_instances(3) == []
    four = all_setcover_instances(4)
    assert len(four) == 3
    assert all(not sc.violations() for sc in four)
    assert {setcover_opt(sc)[0] for sc in four} == {2, 3}


def test_gadget_layout():
    sc = SetCoverInstance.build(3, [(1, 2, 3), (2, 1, 3)])
    gd = Gadget(sc)
    assert (gd.v(1), gd.v(3), gd.p(0), gd.q(0), gd.p(1), gd.q(1)) == (1, 3, 4, 5, 6, 7)
    inst = setcover_to_pcot(sc)
    assert inst.tree.n == 8 and len(inst.pairs) == 6
    assert set(e.pair for e in inst.tree.edges) == {(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7)}
    assert gd.gadget_pairs(1) == [(6, 7), (1, 6), (3, 7)]


@pytest.mark.parametrize("k", [0, 2, 4])
def test_claim_on_every_instance_and_ordering(k):
    for sc in all_setcover_instances(k):
        best, _ = setcover_opt(sc)
        for ordered in orderings(sc):
            inst = setcover_to_pcot(ordered)
            res = pcot_opt(inst)
            assert res.size == k + best
            chosen = cover_from_witness(ordered, res.witness)
            assert covers(ordered, chosen) and len(chosen) == best
            assert pcot_is_feasible(inst, normalize_witness(ordered, res.witness))


def test_cover_to_witness_round_trip():
    for sc in all_setcover_instances(4):
        for r in range(5):
            for cover in combinations(range(4), r):
                y = witness_from_cover(sc, cover)
                assert len(y) == 4 + r
                assert pcot_is_feasible(setcover_to_pcot(sc), y) == covers(sc, cover)
                assert cover_from_witness(sc, y) == list(cover)


def test_kecss_matches_pcot_on_gadget_instances():
    for sc in all_setcover_instances(2) + all_setcover_instances(4)[:1]:
        inst = setcover_to_pcot(sc)
        want = pcot_opt(inst).size
        for k in (2, 3):
            assert min_cost_kecss(kecss_from_pcot(inst, k), k)[0] == want


def test_pcot_lower_bound_half_k():
    # each gadget needs a pair, so OPT >= k, well above k / 2
    for k in (2, 4):
        for sc in all_setcover_instances(k):
            assert pcot_opt(setcover_to_pcot(sc)).size >= k
