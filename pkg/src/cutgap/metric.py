"""Metric closure, path expansion, minimalization and the 2-ECSM to 2-ECSS conversion.

Multi-subsets of a graph's edges are plain dicts ``edge index -> copies``.
"""
from fractions import Fraction

from .cutlp import metric_violation
from .graphcore import Edge, GraphError, MultiGraph, is_k_edge_connected


class MetricError(ValueError):
    pass


def metric_closure(g: MultiGraph):
    """All-pairs shortest-path costs and one shortest path per pair.

    Returns ``(dist, paths)`` where ``dist[u][v]`` is exact and
    ``paths[u, v]`` lists the edge indices of g along a shortest u-v path.
    """
    n = g.n
    if not g.is_connected():
        raise GraphError("metric closure needs a connected graph")
    dist = [[None] * n for _ in range(n)]
    via = [[None] * n for _ in range(n)]  # edge index for direct hops, vertex for relayed ones
    for v in range(n):
        dist[v][v] = Fraction(0)
    for i, e in enumerate(g.edges):
        for a, b in ((e.u, e.v), (e.v, e.u)):
            if dist[a][b] is None or e.cost < dist[a][b]:
                dist[a][b] = e.cost
                via[a][b] = ("edge", i)
    for w in range(n):
        dw = dist[w]
        for u in range(n):
            du = dist[u]
            if du[w] is None:
                continue
            for v in range(n):
                if dw[v] is None:
                    continue
                cand = du[w] + dw[v]
                if du[v] is None or cand < du[v]:
                    du[v] = cand
                    via[u][v] = ("through", w)

    def unfold(u, v):
        if u == v:
            return []
        kind, ref = via[u][v]
        if kind == "edge":
            return [ref]
        return unfold(u, ref) + unfold(ref, v)

    paths = {(u, v): unfold(u, v) for u in range(n) for v in range(n) if u != v}
    return dist, paths


def closure_graph(g: MultiGraph) -> MultiGraph:
    """Complete graph on V(g) weighted by shortest-path costs."""
    dist, _ = metric_closure(g)
    return MultiGraph.complete(g.n, lambda u, v: dist[u][v])


def multiset_graph(g: MultiGraph, ms) -> MultiGraph:
    """The multigraph formed by ``ms`` copies of g's edges."""
    edges = []
    for i, c in sorted(ms.items()):
        if c < 0:
            raise ValueError(f"negative multiplicity on edge {i}")
        if c:
            e = g.edges[i]
            edges.append(Edge(e.u, e.v, e.cost, c * e.mult))
    return MultiGraph(g.n, edges)


def multiset_cost(g: MultiGraph, ms):
    return sum((g.edges[i].cost * c for i, c in ms.items()), Fraction(0))


def is_k_connected_multiset(g: MultiGraph, ms, k):
    return g.n == 1 or is_k_edge_connected(multiset_graph(g, ms), k)


def pair_multiset(g: MultiGraph, ms):
    """Translate ``edge index -> copies`` into ``(u, v) -> copies``."""
    out = {}
    for i, c in ms.items():
        if c:
            p = g.edges[i].pair
            out[p] = out.get(p, 0) + c
    return out


def expand_to_paths(solution, g: MultiGraph):
    """Replace every closure edge of ``solution`` by a shortest path of g.

    ``solution`` maps vertex pairs to copies. Returns a multi-subset of E(g).
    """
    _, paths = metric_closure(g)
    out = {}
    for (u, v), c in sorted(solution.items()):
        if u == v:
            raise GraphError("closure solution contains a loop")
        for i in paths[min(u, v), max(u, v)]:
            out[i] = out.get(i, 0) + c
    return dict(sorted(out.items()))


def minimalize(g: MultiGraph, ms, k):
    """Drop single copies in descending cost order while k-edge-connectivity survives.

    One pass is enough: a copy that cannot be dropped stays necessary once
    other copies are gone.
    """
    ms = {i: c for i, c in ms.items() if c}
    if not is_k_connected_multiset(g, ms, k):
        raise GraphError(f"input multiset is not {k}-edge-connected")
    order = sorted(ms, key=lambda i: (-g.edges[i].cost, -i))
    for i in order:
        while ms.get(i, 0):
            ms[i] -= 1
            if is_k_connected_multiset(g, ms, k):
                continue
            ms[i] += 1
            break
    return {i: c for i, c in sorted(ms.items()) if c}


def _bridges(n, pairs):
    """Bridges of a simple graph given as a set of sorted pairs."""
    adj = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    disc = [-1] * n
    low = [0] * n
    out = set()
    timer = [0]

    def dfs(u, parent):
        disc[u] = low[u] = timer[0]
        timer[0] += 1
        for w in adj[u]:
            if disc[w] == -1:
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] > disc[u]:
                    out.add((min(u, w), max(u, w)))
            elif w != parent:
                low[u] = min(low[u], disc[w])

    for v in range(n):
        if disc[v] == -1:
            dfs(v, -1)
    return out


def ecsm_to_ecss(g: MultiGraph, ms, trace=None):
    """Turn a 2-edge-connected multi-subset of a metric complete graph into a simple one.

    After minimalizing, each remaining doubled pair uv is a bridge of the
    underlying simple graph. One copy of uv and one edge uw (or vw) are
    swapped for the shortcut vw (or uw); the triangle inequality keeps the
    cost from rising. ``trace``, if a list, receives one record per swap.
    """
    if g.n < 3:
        raise MetricError("conversion needs at least 3 vertices")
    why = metric_violation(g)
    if why is not None:
        raise MetricError(f"costs are not metric ({why})")
    index = {e.pair: i for i, e in enumerate(g.edges)}
    start_cost = multiset_cost(g, ms)
    ms = minimalize(g, ms, 2)
    while True:
        pm = pair_multiset(g, ms)
        doubled = sorted(p for p, c in pm.items() if c >= 2)
        if not doubled:
            break
        u, v = doubled[0]
        if pm[u, v] > 2:
            raise AssertionError(f"minimal 2-ECSM has a parallel triple on {(u, v)}")
        if (u, v) not in _bridges(g.n, set(pm)):
            raise AssertionError(f"parallel pair {(u, v)} is not a bridge of the simplification")
        options = []
        for hub, far in ((u, v), (v, u)):
            for w in range(g.n):
                if w not in (u, v) and (min(hub, w), max(hub, w)) in pm:
                    options.append((w, hub, far))
        w, hub, far = min(options)
        drop = index[min(hub, w), max(hub, w)]
        ms[index[u, v]] -= 1
        ms[drop] -= 1
        add = index[min(far, w), max(far, w)]
        ms[add] = ms.get(add, 0) + 1
        ms = {i: c for i, c in ms.items() if c}
        if trace is not None:
            trace.append({"pair": (u, v), "hub": hub, "w": w, "added": (min(far, w), max(far, w))})
        if not is_k_connected_multiset(g, ms, 2):  # pragma: no cover - the swap keeps 2-edge-connectivity
            raise AssertionError("swap broke 2-edge-connectivity")
        ms = minimalize(g, ms, 2)
    if multiset_cost(g, ms) > start_cost:  # pragma: no cover - metric costs forbid it
        raise AssertionError("conversion increased the cost")
    return dict(sorted(ms.items()))
