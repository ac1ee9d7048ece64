"""Path covers of trees, their k-ECSS encodings, and the set-cover gadget.

A path-cover instance is a tree T plus a list X of vertex pairs; a subset Y
of X is feasible when the tree paths of its pairs cover every tree edge,
equivalently when T plus Y (as extra edges) is 2-edge-connected.
"""
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations, product

from .graphcore import Edge, GraphError, MultiGraph, is_k_edge_connected

PCOT_MAX_PAIRS = 24
SETCOVER_MAX_TRIPLES = 20


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class PathCoverInstance:
    tree: MultiGraph
    pairs: tuple  # of (u, v) with u < v

    def __post_init__(self):
        t = self.tree
        if t.m != t.n - 1 or any(e.mult != 1 for e in t.edges) or not t.is_connected():
            raise GraphError("path-cover instance needs a tree (connected, n - 1 simple edges)")
        if len(set(e.pair for e in t.edges)) != t.m:
            raise GraphError("tree has parallel edges")
        norm = []
        for u, v in self.pairs:
            if not (0 <= u < t.n and 0 <= v < t.n):
                raise GraphError(f"pair ({u},{v}) has an endpoint outside the tree")
            norm.append((min(u, v), max(u, v)))
        object.__setattr__(self, "pairs", tuple(norm))

    @classmethod
    def build(cls, n, tree_pairs, pairs):
        return cls(MultiGraph.from_pairs(n, tree_pairs, cost=0), tuple(pairs))


def _parents(tree: MultiGraph, root):
    """BFS parent pointers as (parent vertex, edge index)."""
    adj = [[] for _ in range(tree.n)]
    for i, e in enumerate(tree.edges):
        adj[e.u].append((e.v, i))
        adj[e.v].append((e.u, i))
    parent = {root: (None, None)}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w, i in adj[u]:
            if w not in parent:
                parent[w] = (u, i)
                queue.append(w)
    return parent


def path_edges(inst: PathCoverInstance, pair):
    """Indices of the tree edges on the path between the endpoints of ``pair``."""
    u, v = pair
    if u == v:
        raise ReductionError("pair endpoints must differ")
    parent = _parents(inst.tree, u)
    out = set()
    w = v
    while w != u:
        w, i = parent[w]
        out.add(i)
    return frozenset(out)


def _path_masks(inst):
    masks = []
    for p in inst.pairs:
        mask = 0
        if p[0] != p[1]:
            for i in path_edges(inst, p):
                mask |= 1 << i
        masks.append(mask)
    return masks


def covered_by_paths(inst: PathCoverInstance, y):
    covered = set()
    for p in y:
        covered |= path_edges(inst, p)
    return len(covered) == inst.tree.m


def augmented_graph(inst: PathCoverInstance, y) -> MultiGraph:
    """T plus one extra edge per pair of y."""
    return MultiGraph(inst.tree.n, list(inst.tree.edges) + [Edge(min(p), max(p), 1) for p in y])


def pcot_is_feasible(inst: PathCoverInstance, y) -> bool:
    """Coverage by tree paths; cross-checked against 2-edge-connectivity of T + Y."""
    y = [tuple(p) for p in y]
    by_paths = covered_by_paths(inst, y)
    by_cuts = inst.tree.n == 1 or is_k_edge_connected(augmented_graph(inst, y), 2)
    if by_paths != by_cuts:
        raise AssertionError(f"path coverage ({by_paths}) disagrees with 2-edge-connectivity ({by_cuts})")
    return by_paths


@dataclass(frozen=True)
class PcotResult:
    feasible: bool
    size: int = 0
    witness: tuple = ()  # chosen pairs
    indices: tuple = ()  # their positions in inst.pairs


def pcot_opt(inst: PathCoverInstance) -> PcotResult:
    """Minimum feasible Y by branch and bound on the least-covered tree edge."""
    if len(inst.pairs) > PCOT_MAX_PAIRS:
        raise ReductionError(f"pcot_opt is limited to |X| <= {PCOT_MAX_PAIRS}")
    m = inst.tree.m
    full = (1 << m) - 1
    masks = _path_masks(inst)
    union = 0
    for mk in masks:
        union |= mk
    if union != full:
        return PcotResult(False)
    covering = [[j for j, mk in enumerate(masks) if mk >> e & 1] for e in range(m)]
    best = [len(masks) + 1, None]

    def rec(covered, chosen):
        if covered == full:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), tuple(sorted(chosen))
            return
        if len(chosen) + 1 >= best[0]:
            return
        e = min((e for e in range(m) if not covered >> e & 1), key=lambda e: (len(covering[e]), e))
        for j in covering[e]:
            chosen.append(j)
            rec(covered | masks[j], chosen)
            chosen.pop()

    rec(0, [])
    idx = best[1]
    return PcotResult(True, len(idx), tuple(inst.pairs[j] for j in idx), idx)


def fundamental_cut_sizes(inst: PathCoverInstance):
    """|delta_T(U)| for the component U of T - e, for every tree edge e."""
    out = []
    for i, e in enumerate(inst.tree.edges):
        rest = MultiGraph(inst.tree.n, [f for j, f in enumerate(inst.tree.edges) if j != i])
        side = _component(rest, e.u)
        out.append(sum(1 for f in inst.tree.edges if (f.u in side) != (f.v in side)))
    return out


def _component(g, start):
    adj = [[] for _ in range(g.n)]
    for e in g.edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def kecss_from_pcot(inst: PathCoverInstance, k: int, simple: bool = False) -> MultiGraph:
    """k-ECSS instance whose optimum cost equals the path-cover optimum.

    Multigraph form: k - 1 zero-cost copies of every tree edge plus a unit-cost
    edge per pair. Simple form: every tree vertex becomes a (k+1)-clique of
    zero-cost edges, a tree edge becomes k - 1 zero-cost edges between the
    cliques (member j to member j), and a pair becomes one unit-cost edge
    between the lowest unused members of its two cliques.
    """
    if k < 2:
        raise ReductionError("k must be at least 2")
    tree = inst.tree
    if not simple:
        edges = [Edge(e.u, e.v, 0) for e in tree.edges for _ in range(k - 1)]
        edges += [Edge(u, v, 1) for u, v in inst.pairs]
        return MultiGraph(tree.n, edges)
    size = k + 1

    def member(v, j):
        return v * size + j

    edges = []
    used = set()

    def add(a, b, cost):
        key = (min(a, b), max(a, b))
        used.add(key)
        edges.append(Edge(key[0], key[1], cost))

    for v in range(tree.n):
        for i, j in combinations(range(size), 2):
            add(member(v, i), member(v, j), 0)
    for e in tree.edges:
        for j in range(k - 1):
            add(member(e.u, j), member(e.v, j), 0)
    for u, v in inst.pairs:
        for a in range(size):
            for b in range(size):
                key = (min(member(u, a), member(v, b)), max(member(u, a), member(v, b)))
                if key not in used:
                    break
            else:
                continue
            break
        else:
            raise ReductionError(f"no free clique pair left for ({u},{v})")
        add(key[0], key[1], 1)
    return MultiGraph(tree.n * size, edges)


@dataclass(frozen=True)
class SetCoverInstance:
    """Ground set plus ordered triples (a[i], b[i], c[i])."""

    ground: tuple
    triples: tuple

    @classmethod
    def build(cls, ground, triples):
        if isinstance(ground, int):
            ground = tuple(range(1, ground + 1))
        return cls(tuple(ground), tuple(tuple(t) for t in triples))

    @property
    def k(self):
        return len(self.triples)

    def violations(self):
        problems = []
        gs = set(self.ground)
        if len(gs) != len(self.ground):
            problems.append("ground set has repeated elements")
        for i, t in enumerate(self.triples):
            if len(t) != 3 or len(set(t)) != 3:
                problems.append(f"triple {i} is not a 3-element set (3-uniformity)")
            bad = [j for j in t if j not in gs]
            if bad:
                problems.append(f"triple {i} uses elements outside the ground set: {bad}")
        counts = Counter(j for t in self.triples for j in t)
        for j in self.ground:
            if counts[j] != 2:
                problems.append(f"element {j} lies in {counts[j]} triples, expected 2 (2-regularity)")
        if 2 * len(self.ground) != 3 * self.k:
            problems.append(f"|J| = {len(self.ground)} but 3k/2 = {3 * self.k / 2}")
        return problems

    def validate(self):
        problems = self.violations()
        if problems:
            raise ReductionError("malformed set-cover instance: " + "; ".join(problems))
        return self


def setcover_opt(sc: SetCoverInstance):
    """Minimum number of triples covering the ground set, by exhaustive search."""
    if sc.k > SETCOVER_MAX_TRIPLES:
        raise ReductionError(f"setcover_opt is limited to k <= {SETCOVER_MAX_TRIPLES}")
    pos = {j: i for i, j in enumerate(sc.ground)}
    full = (1 << len(sc.ground)) - 1
    masks = []
    for t in sc.triples:
        mk = 0
        for j in t:
            mk |= 1 << pos[j]
        masks.append(mk)
    for size in range(sc.k + 1):
        for combo in combinations(range(sc.k), size):
            cov = 0
            for i in combo:
                cov |= masks[i]
            if cov == full:
                return size, combo
    return None, None


@dataclass(frozen=True)
class Gadget:
    """Vertex ids of the set-cover tree: root 0, v_j = 1 + index(j), p_i and q_i after them."""

    sc: SetCoverInstance

    def v(self, j):
        return 1 + self.sc.ground.index(j)

    def p(self, i):
        return 1 + len(self.sc.ground) + 2 * i

    def q(self, i):
        return 2 + len(self.sc.ground) + 2 * i

    def gadget_pairs(self, i):
        """(p_i q_i, p_i v_b, q_i v_c) as sorted pairs."""
        _, b, c = self.sc.triples[i]
        raw = [(self.p(i), self.q(i)), (self.p(i), self.v(b)), (self.q(i), self.v(c))]
        return [(min(x), max(x)) for x in raw]


def setcover_to_pcot(sc: SetCoverInstance) -> PathCoverInstance:
    sc.validate()
    gd = Gadget(sc)
    n = 1 + len(sc.ground) + 2 * sc.k
    tree = [(0, gd.v(j)) for j in sc.ground]
    pairs = []
    for i, (a, _, _) in enumerate(sc.triples):
        tree += [(gd.v(a), gd.p(i)), (gd.v(a), gd.q(i))]
        pairs += gd.gadget_pairs(i)
    return PathCoverInstance(MultiGraph(n, [Edge(u, v, 0) for u, v in tree]), tuple(pairs))


def normalize_witness(sc: SetCoverInstance, y):
    """Rewrite a feasible Y so each gadget uses either {p q} or {p v_b, q v_c}, never more."""
    gd = Gadget(sc)
    chosen = set(tuple(p) for p in y)
    out = []
    for i in range(sc.k):
        pq, pb, qc = gd.gadget_pairs(i)
        hits = sum(1 for p in (pq, pb, qc) if p in chosen)
        out += [pb, qc] if hits >= 2 else [pq]
    return out


def cover_from_witness(sc: SetCoverInstance, y):
    """Triples i whose gadget uses both cross pairs after normalization."""
    gd = Gadget(sc)
    chosen = set(normalize_witness(sc, y))
    return [i for i in range(sc.k) if gd.gadget_pairs(i)[1] in chosen]


def witness_from_cover(sc: SetCoverInstance, cover):
    gd = Gadget(sc)
    cover = set(cover)
    out = []
    for i in range(sc.k):
        pq, pb, qc = gd.gadget_pairs(i)
        out += [pb, qc] if i in cover else [pq]
    return out


def covers(sc: SetCoverInstance, chosen):
    return set(j for i in chosen for j in sc.triples[i]) == set(sc.ground)


def _relabel(triples, perm):
    return tuple(sorted(tuple(sorted(perm[j] for j in t)) for t in triples))


def all_setcover_instances(k):
    """Every valid instance with k triples on ground {1..3k/2}, one per relabelling class.

    Triples are returned sorted; duplicates are allowed.
    """
    if k % 2:
        return []
    size = 3 * k // 2
    ground = tuple(range(1, size + 1))
    if k == 0:
        return [SetCoverInstance(ground, ())]
    all_triples = list(combinations(ground, 3))
    perms = list(permutations(ground))
    seen = set()
    out = []
    for family in combinations_with_replacement(all_triples, k):
        counts = Counter(j for t in family for j in t)
        if any(counts[j] != 2 for j in ground):
            continue
        canon = min(_relabel(family, dict(zip(ground, p))) for p in perms)
        if canon not in seen:
            seen.add(canon)
            out.append(SetCoverInstance(ground, canon))
    return out


def orderings(sc: SetCoverInstance):
    """All 3^k choices of which element of each triple plays a[i] (b and c kept sorted)."""
    options = []
    for t in sc.triples:
        s = sorted(t)
        options.append([(a,) + tuple(x for x in s if x != a) for a in s])
    for choice in product(*options):
        yield SetCoverInstance(sc.ground, tuple(choice))
