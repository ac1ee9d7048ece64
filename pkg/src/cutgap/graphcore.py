"""Multigraphs, vertex cuts and edge-connectivity.

Vertices are the integers ``0..n-1``; vertex 0 is the root used to normalize
cuts (a normalized cut never contains it). Cuts are stored as integer
bitmasks, which Python extends to any width.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .exactmath import as_fraction

ROOT = 0


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    cost: Fraction = Fraction(1)
    mult: int = 1

    @property
    def pair(self):
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)

    def other(self, w):
        return self.v if w == self.u else self.u


class MultiGraph:
    """Immutable multigraph with exact rational edge costs.

    Parallel edges may be given either as repeated entries or through the
    ``mult`` field of a single entry; the two are interchangeable for every
    connectivity question.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        out = []
        for e in edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            u, v = int(e.u), int(e.v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            cost = as_fraction(e.cost)
            if cost < 0:
                raise GraphError(f"edge ({u},{v}) has negative cost")
            if int(e.mult) < 1:
                raise GraphError(f"edge ({u},{v}) has nonpositive multiplicity")
            out.append(Edge(u, v, cost, int(e.mult)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(out))

    def __setattr__(self, name, value):
        raise AttributeError("MultiGraph is immutable")

    def __reduce__(self):
        return (MultiGraph, (self.n, self.edges))

    def __repr__(self):
        return f"MultiGraph(n={self.n}, edges={len(self.edges)})"

    def __eq__(self, other):
        return isinstance(other, MultiGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    @classmethod
    def from_pairs(cls, n, pairs, cost=1):
        return cls(n, [Edge(u, v, as_fraction(cost)) for u, v in pairs])

    @classmethod
    def complete(cls, n, cost=None):
        """Complete graph; ``cost`` may be None (unit), a number or a callable (u, v)."""
        edges = []
        for u, v in combinations(range(n), 2):
            c = 1 if cost is None else (cost(u, v) if callable(cost) else cost)
            edges.append(Edge(u, v, as_fraction(c)))
        return cls(n, edges)

    @property
    def m(self):
        return len(self.edges)

    def total_multiplicity(self):
        return sum(e.mult for e in self.edges)

    def degree(self, v):
        return sum(e.mult for e in self.edges if v in (e.u, e.v))

    def neighbors(self, v):
        return sorted({e.other(v) for e in self.edges if v in (e.u, e.v)})

    def pair_index(self):
        """Map from vertex pair to the list of edge indices joining it."""
        index = {}
        for i, e in enumerate(self.edges):
            index.setdefault(e.pair, []).append(i)
        return index

    def with_multiplicities(self, mults):
        """Copy keeping edge i with multiplicity ``mults[i]`` (entries of 0 are dropped)."""
        return MultiGraph(self.n, [Edge(e.u, e.v, e.cost, k) for e, k in zip(self.edges, mults) if k > 0])

    def scaled_multiplicities(self, factor: int):
        return MultiGraph(self.n, [Edge(e.u, e.v, e.cost, e.mult * factor) for e in self.edges])

    def relabel(self, perm):
        """Vertex ``v`` becomes ``perm[v]``."""
        return MultiGraph(self.n, [Edge(perm[e.u], perm[e.v], e.cost, e.mult) for e in self.edges])

    def weight_matrix(self, weights=None):
        """Dense symmetric matrix of summed weights (default: multiplicities)."""
        w = [[0] * self.n for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            val = e.mult if weights is None else weights[i]
            w[e.u][e.v] += val
            w[e.v][e.u] += val
        return w

    def is_connected(self):
        return is_connected_mask(self.n, [(e.u, e.v) for e in self.edges])


@dataclass(frozen=True)
class CutSet:
    """A proper nonempty vertex subset S, stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.mask <= 0 or self.mask >= full or self.mask & ~full:
            raise GraphError("a cut must be a nonempty proper subset of the vertices")

    @classmethod
    def of(cls, n, members):
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} outside 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    @property
    def members(self):
        return tuple(v for v in range(self.n) if self.mask >> v & 1)

    def __contains__(self, v):
        return bool(self.mask >> v & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    def complement(self):
        return CutSet(self.n, ((1 << self.n) - 1) ^ self.mask)

    def normalized(self):
        return self.complement() if self.mask & 1 << ROOT else self

    def crosses(self, u, v):
        return (self.mask >> u & 1) != (self.mask >> v & 1)

    def __repr__(self):
        return f"CutSet({set(self.members)})"


def normalized_masks(n) -> Iterator[int]:
    """All 2^(n-1) - 1 cuts that avoid the root, as bitmasks."""
    for m in range(1, 1 << (n - 1)):
        yield m << 1


def popcount(mask):
    return bin(mask).count("1")


def cut_edges(g: MultiGraph, s: CutSet):
    """Edges with exactly one end in ``s`` (each carries its multiplicity)."""
    if s.n != g.n:
        raise GraphError("cut and graph have different vertex counts")
    return [e for e in g.edges if s.crosses(e.u, e.v)]


def cut_size(g: MultiGraph, s: CutSet) -> int:
    return sum(e.mult for e in cut_edges(g, s))


def cut_weight(g: MultiGraph, mask: int, weights) -> Fraction:
    total = 0
    for i, e in enumerate(g.edges):
        if (mask >> e.u & 1) != (mask >> e.v & 1):
            total += weights[i]
    return total


def stoer_wagner(n, w):
    """Global minimum cut of a dense symmetric weight matrix.

    Returns ``(value, mask)`` where ``mask`` is one side of the cut. Ties are
    broken by lowest vertex index, so the output is deterministic. Works on
    any exact numeric type.
    """
    if n < 2:
        raise GraphError("no proper cut exists")
    w = [list(row) for row in w]
    groups = [1 << v for v in range(n)]
    active = list(range(n))
    best_val = None
    best_mask = None
    while len(active) > 1:
        start = active[0]
        added = [start]
        conn = {v: w[start][v] for v in active if v != start}
        prev = start
        while conn:
            # Most tightly connected vertex; lowest index on ties.
            nxt = None
            for v in active:
                if v in conn and (nxt is None or conn[v] > conn[nxt]):
                    nxt = v
            cut_of_phase = conn.pop(nxt)
            for v in conn:
                conn[v] += w[nxt][v]
            if not conn:
                if best_val is None or cut_of_phase < best_val:
                    best_val = cut_of_phase
                    best_mask = groups[nxt]
                # Merge the last vertex into the one before it.
                groups[prev] |= groups[nxt]
                for v in active:
                    if v != prev and v != nxt:
                        w[prev][v] += w[nxt][v]
                        w[v][prev] = w[prev][v]
                active.remove(nxt)
            prev = nxt
            added.append(nxt)
    return best_val, best_mask


def global_min_cut(g: MultiGraph, weights=None):
    """Minimum-weight cut and its value; weights default to multiplicities.

    The returned cut is normalized (it avoids the root vertex).
    """
    if g.n < 2:
        raise GraphError("no proper cut exists")
    if weights is not None and len(weights) != g.m:
        raise GraphError("one weight per edge is required")
    value, mask = stoer_wagner(g.n, g.weight_matrix(weights))
    return CutSet(g.n, mask).normalized(), value


def edge_connectivity(g: MultiGraph) -> int:
    if g.n < 2:
        raise GraphError("edge connectivity needs at least two vertices")
    return global_min_cut(g)[1]


def is_k_edge_connected(g: MultiGraph, k: int) -> bool:
    if k <= 0:
        return True
    if g.n < 2:
        return True
    # Cheap necessary conditions before the full min-cut.
    deg = [0] * g.n
    for e in g.edges:
        deg[e.u] += e.mult
        deg[e.v] += e.mult
    if min(deg) < k:
        return False
    return edge_connectivity(g) >= k


def is_connected_mask(n, pairs) -> bool:
    adj = [0] * n
    for u, v in pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def induced_connected(adj, mask) -> bool:
    """Whether the vertex subset ``mask`` induces a connected subgraph.

    ``adj[v]`` is the neighbourhood bitmask of v.
    """
    if mask == 0:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        nxt &= mask
        frontier = nxt & ~seen
        seen |= nxt
    return seen == mask


def adjacency_masks(n, pairs):
    adj = [0] * n
    for u, v in pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def is_k_vertex_connected(n, pairs, k) -> bool:
    """Brute force over removal sets of size < k; fine for the small n used here."""
    if n <= k:
        return False
    adj = adjacency_masks(n, pairs)
    full = (1 << n) - 1
    for size in range(k):
        for removed in combinations(range(n), size):
            mask = full
            for v in removed:
                mask &= ~(1 << v)
            if not induced_connected(adj, mask):
                return False
    return True


# --- canonical labelling -------------------------------------------------

CANONICAL_MAX_N = 12


def _refine(n, mat, cells):
    """Equitable refinement of an ordered partition (list of lists)."""
    while True:
        changed = False
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                key = tuple(
                    tuple(sorted(mat[v][u] for u in other)) for other in cells
                )
                sig.setdefault(key, []).append(v)
            if len(sig) > 1:
                changed = True
                for key in sorted(sig):
                    new_cells.append(sig[key])
            else:
                new_cells.append(cell)
        cells = new_cells
        if not changed:
            return cells


def _twins(mat, cell, n):
    """True when all vertices of ``cell`` are interchangeable (same rows up to the cell)."""
    first = cell[0]
    inside = None
    for v in cell:
        for u in range(n):
            if u in cell:
                continue
            if mat[v][u] != mat[first][u]:
                return False
    for a, b in combinations(cell, 2):
        if inside is None:
            inside = mat[a][b]
        elif mat[a][b] != inside:
            return False
    return True


def _encode(mat, order):
    n = len(order)
    return tuple(mat[order[i]][order[j]] for i in range(n) for j in range(i + 1, n))


def canonical_form(n, mat, max_n=CANONICAL_MAX_N):
    """Lexicographically least upper-triangle encoding over admissible orderings.

    ``mat`` is a symmetric matrix of comparable edge labels (0/None = no edge
    is just another label). Search is individualization-refinement, with
    interchangeable (twin) cells collapsed to a single branch.
    """
    if n > max_n:
        raise GraphError(f"canonicalization bound exceeded (n={n} > {max_n})")
    mat = [[_label_key(x) for x in row] for row in mat]
    initial = _refine(n, mat, [list(range(n))])
    best = [None]

    def search(cells):
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            code = _encode(mat, [c[0] for c in cells])
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        cell = cells[target]
        choices = cell[:1] if _twins(mat, cell, n) else cell
        for v in choices:
            rest = [u for u in cell if u != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(n, mat, split))

    search(initial)
    return best[0]


def _label_key(x):
    return (0, 0) if x is None else (1, x)


def canonical_label(g: MultiGraph, edge_labels=None, max_n=CANONICAL_MAX_N) -> str:
    """Isomorphism-invariant string for ``g``.

    Multiplicities are respected and costs ignored. ``edge_labels`` may map
    each edge index to an orderable value (for instance an LP value), in which
    case the label also respects those values; parallel labelled edges are
    combined as a sorted tuple.
    """
    if g.n > max_n:
        raise GraphError(f"canonicalization bound exceeded (n={g.n} > {max_n})")
    if edge_labels is None:
        mat = [[0] * g.n for _ in range(g.n)]
        for e in g.edges:
            mat[e.u][e.v] += e.mult
            mat[e.v][e.u] += e.mult
    else:
        bags = {}
        for i, e in enumerate(g.edges):
            bags.setdefault(e.pair, []).extend([edge_labels[i]] * e.mult)
        mat = [[None] * g.n for _ in range(g.n)]
        for (u, v), labels in bags.items():
            mat[u][v] = mat[v][u] = tuple(sorted(labels))
    code = canonical_form(g.n, mat, max_n)
    parts = []
    for key in code:
        if key == (0, 0) or key == (1, 0):
            parts.append("0")
        else:
            val = key[1]
            parts.append(",".join(map(str, val)) if isinstance(val, tuple) else str(val))
    return f"{g.n}:" + ";".join(parts)


def degree_sequence(g: MultiGraph):
    return sorted(g.degree(v) for v in range(g.n))


def find_violated_cut(g: MultiGraph, k: int) -> Optional[CutSet]:
    """A cut with fewer than k crossing edges, or None."""
    if g.n < 2 or k <= 0:
        return None
    cut, value = global_min_cut(g)
    return cut if value < k else None
