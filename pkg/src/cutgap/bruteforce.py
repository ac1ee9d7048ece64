"""Exhaustive oracles used to cross-check the fast paths on small instances."""
from fractions import Fraction
from itertools import combinations, permutations

from .graphcore import Edge, MultiGraph, is_k_edge_connected


def tsp_brute(cost_matrix):
    """Minimum Hamiltonian cycle cost over all (n-1)!/2 tours."""
    n = len(cost_matrix)
    best = None
    for perm in permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue
        tour = (0,) + perm
        c = sum((cost_matrix[tour[i]][tour[(i + 1) % n]] for i in range(n)), Fraction(0))
        if best is None or c < best:
            best = c
    return best


def _subgraph(g, chosen):
    return MultiGraph(g.n, [g.edges[i] for i in chosen])


def min_cost_kecss(g: MultiGraph, k, force_zero=True):
    """Cheapest k-edge-connected spanning subgraph, each edge record usable once.

    With ``force_zero`` every zero-cost edge is taken up front (never a loss).
    When the remaining edges all cost 1, subsets are tried by size so the
    first hit is optimal. Returns ``(cost, edge indices)`` or ``(None, None)``.
    """
    if any(e.mult != 1 for e in g.edges):
        g = MultiGraph(g.n, [Edge(e.u, e.v, e.cost) for e in g.edges for _ in range(e.mult)])
    forced = [i for i, e in enumerate(g.edges) if force_zero and e.cost == 0]
    rest = [i for i in range(g.m) if i not in set(forced)]
    if all(g.edges[i].cost == 1 for i in rest):
        for size in range(len(rest) + 1):
            for combo in combinations(rest, size):
                chosen = forced + list(combo)
                if is_k_edge_connected(_subgraph(g, chosen), k):
                    return Fraction(size), sorted(chosen)
        return None, None
    best = (None, None)
    for r in range(len(rest) + 1):
        for combo in combinations(rest, r):
            c = sum((g.edges[i].cost for i in combo), Fraction(0))
            if best[0] is not None and c >= best[0]:
                continue
            chosen = forced + list(combo)
            if is_k_edge_connected(_subgraph(g, chosen), k):
                best = (c, sorted(chosen))
    return best


def min_two_connected_multiset(g: MultiGraph, max_mult, upper=None):
    """2-ECSS (``max_mult=1``) or capped 2-ECSM (``max_mult=2``) optimum."""
    return min_connected_multiset(g, 2, max_mult, upper)


def min_connected_multiset(g: MultiGraph, k, max_mult, upper=None):
    """Cheapest k-edge-connected multi-subset of g with at most ``max_mult`` copies per edge.

    Depth-first over edges (cheapest first) with a degree-deficit lower
    bound. Returns ``(cost, {edge index: copies})``.
    """
    n = g.n
    order = sorted(range(g.m), key=lambda i: (g.edges[i].cost, i))
    # cheapest cost of an edge at position >= p touching v
    suffix_min = [[None] * n for _ in range(len(order) + 1)]
    for p in range(len(order) - 1, -1, -1):
        suffix_min[p] = list(suffix_min[p + 1])
        e = g.edges[order[p]]
        for v in (e.u, e.v):
            if suffix_min[p][v] is None or e.cost < suffix_min[p][v]:
                suffix_min[p][v] = e.cost
    remaining = [[0] * n for _ in range(len(order) + 1)]
    for p in range(len(order) - 1, -1, -1):
        remaining[p] = list(remaining[p + 1])
        e = g.edges[order[p]]
        remaining[p][e.u] += max_mult
        remaining[p][e.v] += max_mult
    best = [upper, None]
    deg = [0] * n
    counts = {}

    def bound(p, cost):
        extra = Fraction(0)
        for v in range(n):
            need = k - deg[v]
            if need > 0:
                if remaining[p][v] < need:
                    return None
                extra += need * suffix_min[p][v]
        return cost + extra / 2

    def rec(p, cost):
        lb = bound(p, cost)
        if lb is None:
            return
        if best[1] is not None and lb >= best[0]:
            return
        if best[1] is None and best[0] is not None and lb > best[0]:
            return
        if p == len(order):
            ms = {i: c for i, c in counts.items() if c}
            if is_k_edge_connected(MultiGraph(n, [Edge(g.edges[i].u, g.edges[i].v, g.edges[i].cost, c)
                                                  for i, c in sorted(ms.items())]), k):
                if best[1] is None or cost < best[0]:
                    best[0], best[1] = cost, ms
            return
        i = order[p]
        e = g.edges[i]
        for c in range(max_mult, -1, -1):
            counts[i] = c
            deg[e.u] += c
            deg[e.v] += c
            rec(p + 1, cost + c * e.cost)
            deg[e.u] -= c
            deg[e.v] -= c
        counts[i] = 0

    rec(0, Fraction(0))
    return best[0] if best[1] is not None else None, best[1]


def min_multiset_by_size(g: MultiGraph, max_mult):
    """Unit-cost variant: smallest total multiplicity, searched size by size."""
    n, m = g.n, g.m

    def rec(i, left, counts):
        if left == 0:
            ms = {j: c for j, c in enumerate(counts) if c}
            graph = MultiGraph(n, [Edge(g.edges[j].u, g.edges[j].v, g.edges[j].cost, c) for j, c in ms.items()])
            return ms if is_k_edge_connected(graph, 2) else None
        if i == m:
            return None
        for c in range(min(max_mult, left), -1, -1):
            counts[i] = c
            found = rec(i + 1, left - c, counts)
            if found is not None:
                return found
        counts[i] = 0
        return None

    for size in range(n, 2 * m + 1):
        found = rec(0, size, [0] * m)
        if found is not None:
            return size, found
    return None, None


def all_paths_min(g: MultiGraph, s, t):
    """Shortest s-t cost by enumerating simple paths."""
    adj = [[] for _ in range(g.n)]
    for e in g.edges:
        adj[e.u].append((e.v, e.cost))
        adj[e.v].append((e.u, e.cost))
    best = [None]

    def walk(u, seen, cost):
        if u == t:
            if best[0] is None or cost < best[0]:
                best[0] = cost
            return
        for w, c in adj[u]:
            if w not in seen:
                seen.add(w)
                walk(w, seen, cost + c)
                seen.remove(w)

    walk(s, {s}, Fraction(0))
    return best[0]
