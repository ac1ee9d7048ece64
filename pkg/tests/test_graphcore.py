import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cutgap.extremepoints import construct_fibonacci
from cutgap.graphcore import (CutSet, Edge, GraphError, MultiGraph, canonical_label, cut_edges, cut_size,
                              cut_weight, edge_connectivity, global_min_cut, is_k_edge_connected,
                              is_k_vertex_connected, normalized_masks)

C4 = MultiGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
P4 = MultiGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3)])
K33 = MultiGraph.from_pairs(6, [(i, j) for i in range(3) for j in range(3, 6)])


def brute_connectivity(g):
    return min(cut_size(g, CutSet(g.n, m)) for m in normalized_masks(g.n))


def test_graph_validation():
    with pytest.raises(GraphError):
        MultiGraph(0)
    with pytest.raises(GraphError):
        MultiGraph(2, [Edge(0, 0)])
    with pytest.raises(GraphError):
        MultiGraph(2, [Edge(0, 2)])
    with pytest.raises(GraphError):
        MultiGraph(2, [Edge(0, 1, Fraction(-1))])
    with pytest.raises(GraphError):
        MultiGraph(2, [Edge(0, 1, 1, 0)])


def test_cut_edges_examples():
    s = CutSet.of(4, [0, 1])
    assert sorted(e.pair for e in cut_edges(C4, s)) == [(0, 3), (1, 2)]
    assert cut_size(C4, s) == 2
    assert cut_edges(C4, CutSet.of(4, [2])) == [e for e in C4.edges if 2 in e.pair]
    assert cut_size(MultiGraph.complete(4), s) == 4
    for bad in (0, 15):
        with pytest.raises((GraphError, ValueError)):
            CutSet(4, bad)


def test_min_cut_examples():
    assert global_min_cut(C4)[1] == 2
    assert global_min_cut(MultiGraph.complete(4))[1] == 3
    isolated = MultiGraph.from_pairs(3, [(0, 1)])
    assert global_min_cut(isolated, [Fraction(5)])[1] == 0
    with pytest.raises(GraphError, match="no proper cut"):
        global_min_cut(MultiGraph(1))


def test_edge_connectivity_examples():
    assert edge_connectivity(MultiGraph.from_pairs(7, [(i, (i + 1) % 7) for i in range(7)])) == 2
    for n in range(2, 8):
        assert edge_connectivity(MultiGraph.complete(n)) == n - 1
    assert edge_connectivity(K33) == 3 == brute_connectivity(K33)
    with pytest.raises(GraphError):
        edge_connectivity(MultiGraph(1))


def test_k_edge_connected_examples():
    assert not is_k_edge_connected(P4, 2)
    assert is_k_edge_connected(C4, 2)
    doubled = P4.scaled_multiplicities(2)
    assert is_k_edge_connected(doubled, 2) and brute_connectivity(doubled) == 2
    assert is_k_edge_connected(MultiGraph(1), 0)
    assert is_k_edge_connected(MultiGraph.from_pairs(3, []), 0)


def test_canonical_label_examples():
    base = canonical_label(C4)
    for perm in permutations(range(4)):
        assert canonical_label(C4.relabel(perm)) == base
    assert canonical_label(P4) != base
    rng = random.Random(7)
    x = construct_fibonacci(3)
    g = x.support_graph()
    for _ in range(20):
        perm = list(range(6))
        rng.shuffle(perm)
        assert canonical_label(g.relabel(perm)) == canonical_label(g)
    with pytest.raises(GraphError, match="canonicalization bound exceeded"):
        canonical_label(MultiGraph.complete(13))


def test_canonical_label_sees_multiplicity_not_cost():
    a = MultiGraph(3, [Edge(0, 1, 1, 2), Edge(1, 2)])
    b = MultiGraph(3, [Edge(0, 1), Edge(1, 2, 5, 2)])
    c = MultiGraph(3, [Edge(0, 1), Edge(1, 2)])
    assert canonical_label(a) == canonical_label(b) != canonical_label(c)


def test_canonical_label_separates_nonisomorphic_cubic_graphs():
    prism = MultiGraph.from_pairs(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert canonical_label(prism) != canonical_label(K33)


def test_vertex_connectivity():
    assert is_k_vertex_connected(4, [e.pair for e in MultiGraph.complete(4).edges], 3)
    assert not is_k_vertex_connected(4, [e.pair for e in C4.edges], 3)
    assert is_k_vertex_connected(6, [e.pair for e in K33.edges], 3)


graphs = st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, 3)), max_size=14)))


def _build(data):
    n, raw = data
    return MultiGraph(n, [Edge(u, v, 1, m) for u, v, m in raw if u != v])


@given(graphs, st.data())
def test_cut_symmetry_and_min_cut_bound(data, draw):
    g = _build(data)
    weights = [Fraction(draw.draw(st.integers(0, 5)), draw.draw(st.integers(1, 3))) for _ in g.edges]
    mask = draw.draw(st.integers(1, (1 << g.n) - 2))
    full = (1 << g.n) - 1
    assert cut_weight(g, mask, weights) == cut_weight(g, full ^ mask, weights)
    cut, value = global_min_cut(g, weights)
    assert value == cut_weight(g, cut.mask, weights)
    assert value == min(cut_weight(g, m, weights) for m in normalized_masks(g.n))
    assert value <= min(cut_weight(g, 1 << v, weights) for v in range(g.n))


@given(graphs)
def test_doubling_doubles_connectivity(data):
    g = _build(data)
    assert edge_connectivity(g.scaled_multiplicities(2)) == 2 * edge_connectivity(g)
    assert edge_connectivity(g) == brute_connectivity(g)


def test_canonical_label_permutation_invariance_randomized():
    rng = random.Random(11)
    for trial in range(120):
        n = rng.randint(3, 8)
        pairs = {tuple(sorted(rng.sample(range(n), 2))) for _ in range(rng.randint(n, 2 * n))}
        g = MultiGraph.from_pairs(n, sorted(pairs))
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_label(g.relabel(perm)) == canonical_label(g)


def test_canonical_label_is_complete_on_small_graphs():
    # same label must mean isomorphic: compare against permutation search on 5 vertices
    rng = random.Random(5)
    allp = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    seen = {}
    for _ in range(150):
        g = MultiGraph.from_pairs(5, sorted(rng.sample(allp, rng.randint(3, 7))))
        key = frozenset(e.pair for e in g.edges)
        label = canonical_label(g)
        for other in seen.get(label, []):
            assert any(frozenset(tuple(sorted((p[a], p[b]))) for a, b in other) == key
                       for p in permutations(range(5)))
        seen.setdefault(label, []).append(key)


def test_multigraph_pickles():
    import pickle
    g = MultiGraph(3, [Edge(0, 1, Fraction(1, 2), 2), Edge(1, 2)])
    assert pickle.loads(pickle.dumps(g)) == g
