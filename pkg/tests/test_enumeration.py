from fractions import Fraction

import pytest

from cutgap.cutlp import FractionalSolution
from cutgap.extremepoints import (FIGURE_SOLUTIONS, EnumerationBoundError, basic_solutions_on_support,
                                  brute_force_basic_solutions, candidate_supports, construct_fibonacci,
                                  enumerate_extreme_points, solution_label, value_multiset)
from cutgap.extremepoints.enumeration import max_n_allowed
from cutgap.graphcore import MultiGraph, canonical_label


def _key(x):
    return tuple(sorted((x.graph.edges[i].pair, v) for i, v in x.values.items()))


def test_candidate_supports_counts_up_to_iso():
    # K4 is the only simple graph on 4 vertices with min degree 3
    assert [g.m for g in candidate_supports(4, max_edges=6)] == [6]
    # with the 2n - 3 edge cap nothing survives on 4 or 5 vertices
    assert candidate_supports(4) == [] and candidate_supports(5) == []
    six = candidate_supports(6)
    labels = {canonical_label(g) for g in six}
    assert len(labels) == len(six)
    prism = MultiGraph.from_pairs(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert canonical_label(prism) in labels
    assert all(g.m <= 9 and min(g.degree(v) for v in range(6)) >= 3 for g in six)


def test_prism_support_has_exactly_the_half_point():
    prism = construct_fibonacci(3).support_graph()
    found = basic_solutions_on_support(prism)
    assert len(found) == 1
    assert value_multiset(found[0]) == {Fraction(1, 2): 6, Fraction(1): 3}


def test_cycle_support_has_the_tour():
    c5 = MultiGraph.from_pairs(5, [(i, (i + 1) % 5) for i in range(5)])
    found = basic_solutions_on_support(c5)
    assert [sorted(x.values.values()) for x in found] == [[1] * 5]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_search_agrees_with_brute_force_oracle(n):
    supports = candidate_supports(n, min_degree=2, vertex_connectivity=0)
    assert supports
    for g in supports:
        fast = sorted(_key(x) for x in basic_solutions_on_support(g))
        slow = sorted(_key(x) for x in brute_force_basic_solutions(g))
        assert fast == slow


def test_search_agrees_with_oracle_on_some_six_vertex_supports():
    supports = candidate_supports(6)
    for g in supports[:4]:
        assert sorted(map(_key, basic_solutions_on_support(g))) == sorted(map(_key, brute_force_basic_solutions(g)))
    prism = construct_fibonacci(3).support_graph()
    assert sorted(map(_key, basic_solutions_on_support(prism))) == sorted(map(_key, brute_force_basic_solutions(prism)))


def test_small_n_have_nothing_fractional():
    for n in (3, 4, 5):
        assert enumerate_extreme_points(n) == []
        audit = enumerate_extreme_points(n, min_support_degree=2, vertex_connectivity=0)
        assert [p.stats.denominator for p in audit] == [1]


def test_n6_unique_fractional_class():
    points = enumerate_extreme_points(6)
    assert len(points) == 1
    assert points[0].stats.as_tuple() == (Fraction(1, 2), 2, 3, 6, 9)
    assert points[0].label == solution_label(construct_fibonacci(3))


def test_n6_audit_adds_only_the_tour():
    audit = enumerate_extreme_points(6, min_support_degree=2, vertex_connectivity=0)
    assert sorted(p.stats.denominator for p in audit) == [1, 2]
    assert enumerate_extreme_points(6, min_denominator=2, min_support_degree=2, vertex_connectivity=0)[0].label \
        == solution_label(FIGURE_SOLUTIONS["a"])


def test_filters_and_bound(monkeypatch):
    assert enumerate_extreme_points(6, min_max_degree=4) == []
    monkeypatch.delenv("CUTGAP_MAX_N", raising=False)
    assert max_n_allowed() == 7
    with pytest.raises(EnumerationBoundError):
        enumerate_extreme_points(8)
    monkeypatch.setenv("CUTGAP_MAX_N", "9")
    assert max_n_allowed() == 9


@pytest.mark.slow
def test_n7_finds_the_degree_four_point():
    points = enumerate_extreme_points(7)
    assert [p.stats.as_tuple() for p in points] == [(Fraction(1, 2), 2, 4, 7, 11)]
    assert points[0].label == solution_label(FIGURE_SOLUTIONS["b"])


def test_solution_label_sees_values():
    g = MultiGraph.complete(4)
    a = FractionalSolution(g, {0: 1, 1: Fraction(1, 2)})
    b = FractionalSolution(g, {0: Fraction(1, 2), 1: 1})
    c = FractionalSolution(g, {0: 1, 5: 1})
    assert solution_label(a) == solution_label(b)
    assert solution_label(a) != solution_label(c)


def test_workers_give_same_answer():
    serial = enumerate_extreme_points(6, min_support_degree=2, vertex_connectivity=0)
    pooled = enumerate_extreme_points(6, min_support_degree=2, vertex_connectivity=0, workers=2)
    assert [p.label for p in serial] == [p.label for p in pooled]
