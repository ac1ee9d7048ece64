"""Exhaustive search for small extreme points of the subtour LP.

Pipeline: generate candidate support graphs, then for each one list the
basic solutions of the degree-bounded LP (k = 2) whose support is exactly
that graph, and keep the ones that certify. Results are reported up to
isomorphism.
"""
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from ..cutlp import FractionalSolution, check_feasible
from ..exactmath import IncrementalBasis, InconsistentSystem, NonUniqueSolution, rank, solve_unique
from ..graphcore import (MultiGraph, adjacency_masks, canonical_label, induced_connected,
                         is_connected_mask, is_k_edge_connected, is_k_vertex_connected)
from .certify import SolutionStats, crossing_row, stats, verify_extreme
from .construction import sets_cross

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 7


class EnumerationBoundError(ValueError):
    pass


def max_n_allowed():
    override = os.environ.get("CUTGAP_MAX_N")
    if override:
        log.warning("CUTGAP_MAX_N=%s overrides the enumeration bound of %d; runs may take very long",
                    override, DEFAULT_MAX_N)
        return int(override)
    return DEFAULT_MAX_N


def candidate_supports(n, min_degree=3, max_edges=None, vertex_connectivity=3):
    """Simple graphs on n vertices that may carry an extreme point, one per isomorphism class.

    Filters: minimum degree, at most ``max_edges`` (default 2n - 3) edges,
    2-edge-connected, and ``vertex_connectivity``-vertex-connected (set it to
    0 or 1 to disable).
    """
    if max_edges is None:
        max_edges = 2 * n - 3
    pairs = list(combinations(range(n), 2))
    min_edges = (min_degree * n + 1) // 2
    # remaining[i][v]: number of pairs at index >= i touching v
    remaining = [[0] * n for _ in range(len(pairs) + 1)]
    for i in range(len(pairs) - 1, -1, -1):
        remaining[i] = list(remaining[i + 1])
        u, v = pairs[i]
        remaining[i][u] += 1
        remaining[i][v] += 1

    seen = set()
    found = []
    deg = [0] * n
    chosen = []

    def emit():
        if not is_connected_mask(n, chosen):
            return
        if vertex_connectivity >= 2 and not is_k_vertex_connected(n, chosen, vertex_connectivity):
            return
        g = MultiGraph.from_pairs(n, chosen)
        if not _two_edge_connected(g):
            return
        label = canonical_label(g)
        if label not in seen:
            seen.add(label)
            found.append(g)

    def rec(i):
        if len(chosen) > max_edges:
            return
        for v in range(n):
            if deg[v] + remaining[i][v] < min_degree:
                return
        if len(chosen) + (len(pairs) - i) < min_edges:
            return
        if i == len(pairs):
            if len(chosen) >= min_edges:
                emit()
            return
        u, v = pairs[i]
        chosen.append((u, v))
        deg[u] += 1
        deg[v] += 1
        rec(i + 1)
        chosen.pop()
        deg[u] -= 1
        deg[v] -= 1
        rec(i + 1)

    rec(0)
    return found


def _two_edge_connected(g):
    return is_k_edge_connected(g, 2)


def _candidate_tight_masks(n, pairs):
    """Root-avoiding sets of size 2..n-2 inducing connected subgraphs on both sides."""
    adj = adjacency_masks(n, pairs)
    full = (1 << n) - 1
    out = []
    for m in range(1, 1 << (n - 1)):
        mask = m << 1
        size = bin(mask).count("1")
        if size < 2 or size > n - 2:
            continue
        if induced_connected(adj, mask) and induced_connected(adj, full ^ mask):
            out.append(mask)
    return out


def _all_nonsingleton_masks(n):
    return [m << 1 for m in range(1, 1 << (n - 1)) if 2 <= bin(m).count("1") <= n - 2]


def _accept(g, sol):
    if any(v <= 0 for v in sol):
        return None
    x = FractionalSolution(g, dict(enumerate(sol)))
    return x if check_feasible(x, 2, bounded=True) else None


def basic_solutions_on_support(g: MultiGraph):
    """Extreme points of the subtour LP whose support is exactly E(g).

    Any such point is fixed by the degree equations plus a laminar family of
    tight cuts, and a tight cut of a feasible point induces connected
    subgraphs on both sides; the search only walks families of that kind.
    """
    n = g.n
    m = g.m
    x0 = FractionalSolution(g, {})
    degree_rows = [crossing_row(x0, 1 << v, range(m)) for v in range(n)]
    base = IncrementalBasis(m)
    for row in degree_rows:
        base.add(row)
    need = m - base.rank
    masks = _candidate_tight_masks(n, [e.pair for e in g.edges])
    rows = {mask: crossing_row(x0, mask, range(m)) for mask in masks}
    results = {}

    def finish(family):
        a = degree_rows + [rows[s] for s in family]
        try:
            sol = solve_unique(a, [2] * len(a))
        except (NonUniqueSolution, InconsistentSystem):
            return
        x = _accept(g, sol)
        if x is not None:
            results[tuple(sol)] = x

    def rec(start, family, basis):
        if len(family) == need:
            finish(family)
            return
        for j in range(start, len(masks)):
            mask = masks[j]
            if any(sets_cross(mask, f) for f in family):
                continue
            nb = basis.copy()
            if not nb.add(rows[mask]):
                continue
            family.append(mask)
            rec(j + 1, family, nb)
            family.pop()

    rec(0, [], base)
    return list(results.values())


def brute_force_basic_solutions(g: MultiGraph):
    """Independent oracle: every cut subset of the right size, no laminarity or connectivity pruning."""
    n, m = g.n, g.m
    x0 = FractionalSolution(g, {})
    degree_rows = [crossing_row(x0, 1 << v, range(m)) for v in range(n)]
    need = m - rank(degree_rows)
    masks = _all_nonsingleton_masks(n)
    rows = {mask: crossing_row(x0, mask, range(m)) for mask in masks}
    results = {}
    for family in combinations(masks, need):
        a = degree_rows + [rows[s] for s in family]
        try:
            sol = solve_unique(a, [2] * len(a))
        except (NonUniqueSolution, InconsistentSystem):
            continue
        x = _accept(g, sol)
        if x is not None:
            results[tuple(sol)] = x
    return list(results.values())


def solution_label(x: FractionalSolution):
    return canonical_label(x.graph, {i: x.value(i) for i in range(x.graph.m)})


@dataclass
class EnumeratedPoint:
    solution: FractionalSolution
    stats: SolutionStats
    label: str

    def __iter__(self):
        return iter((self.solution, self.stats))


def _points_on(g):
    out = []
    for x in basic_solutions_on_support(g):
        if not verify_extreme(x, 2).ok:  # pragma: no cover - the search only produces vertices
            raise AssertionError("enumerated point failed certification")
        out.append(x)
    return out


def enumerate_extreme_points(n, min_denominator=None, min_max_degree=None, *,
                             min_support_degree=3, vertex_connectivity=3, check_bound=True, workers=None):
    """Extreme points of the subtour LP on n vertices, one per isomorphism class.

    With the default filters the support graphs have minimum degree 3, at
    most 2n - 3 edges and are 3-vertex-connected. Pass
    ``min_support_degree=2, vertex_connectivity=0`` for an unfiltered audit.
    ``workers > 1`` spreads the support graphs over a process pool.
    """
    if check_bound:
        bound = max_n_allowed()
        if n > bound:
            raise EnumerationBoundError(f"n={n} exceeds the enumeration bound {bound} (set CUTGAP_MAX_N)")
    if n < 3:
        return []
    supports = candidate_supports(n, min_support_degree, vertex_connectivity=vertex_connectivity)
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            per_support = list(pool.map(_points_on, supports))
    else:
        per_support = [_points_on(g) for g in supports]
    out = {}
    for found in per_support:
        for x in found:
            label = solution_label(x)
            if label not in out:
                out[label] = EnumeratedPoint(x, stats(x), label)
    points = sorted(out.values(), key=lambda p: (p.stats.denominator, p.stats.max_support_degree, p.label))
    if min_denominator is not None:
        points = [p for p in points if p.stats.denominator >= min_denominator]
    if min_max_degree is not None:
        points = [p for p in points if p.stats.max_support_degree >= min_max_degree]
    return points


def enumerate_up_to(n_max, **kwargs):
    """Per-n results for n = 3..n_max, as a dict n -> list of EnumeratedPoint."""
    return {n: enumerate_extreme_points(n, **kwargs) for n in range(3, n_max + 1)}


def value_multiset(x: FractionalSolution):
    counts = {}
    for v in x.values.values():
        counts[v] = counts.get(v, 0) + 1
    return dict(sorted(counts.items()))


__all__ = [
    "EnumerationBoundError", "EnumeratedPoint", "basic_solutions_on_support", "brute_force_basic_solutions",
    "candidate_supports", "enumerate_extreme_points", "enumerate_up_to", "solution_label", "value_multiset",
]
