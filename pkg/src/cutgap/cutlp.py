"""Cut relaxations of k-edge-connected spanning multi-subgraph.

Two LPs share this module:

* the unbounded relaxation: ``min c.x`` s.t. ``x(delta(S)) >= k`` for every
  proper nonempty S and ``x >= 0``;
* the bounded relaxation, which additionally fixes ``x(delta(v)) = k`` at
  every vertex (for k = 2 this is the Held-Karp subtour LP).

Both are solved exactly by a cutting-plane loop driven by a global min-cut
separation oracle.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactmath import EQ, GE, as_fraction, lp_solve
from .graphcore import CutSet, Edge, GraphError, MultiGraph, stoer_wagner

UNBOUNDED = "nk"
BOUNDED = "nkb"


class FractionalSolution:
    """Positive rational values on a subset of a graph's edges.

    Only strictly positive entries are stored; ``value(i)`` returns 0 for
    edges outside the support.
    """

    __slots__ = ("graph", "values")

    def __init__(self, graph: MultiGraph, values):
        vals = {}
        items = values.items() if isinstance(values, dict) else enumerate(values)
        for i, v in items:
            i = int(i)
            if not 0 <= i < graph.m:
                raise GraphError(f"edge index {i} not in graph")
            v = as_fraction(v)
            if v < 0:
                raise ValueError(f"negative value on edge {i}")
            if v > 0:
                vals[i] = vals.get(i, Fraction(0)) + v
        self.graph = graph
        self.values = dict(sorted(vals.items()))

    @classmethod
    def from_pairs(cls, n, pair_values, cost=1):
        """Solution on the simple graph whose edges are the keys of ``pair_values``."""
        pairs = sorted((min(u, v), max(u, v)) for u, v in pair_values)
        lookup = {(min(u, v), max(u, v)): as_fraction(x) for (u, v), x in pair_values.items()}
        g = MultiGraph(n, [Edge(u, v, as_fraction(cost)) for u, v in pairs])
        return cls(g, {i: lookup[p] for i, p in enumerate(pairs)})

    @property
    def n(self):
        return self.graph.n

    def __repr__(self):
        return f"FractionalSolution(n={self.n}, support={len(self.values)})"

    def __eq__(self, other):
        return isinstance(other, FractionalSolution) and self.pair_values() == other.pair_values() \
            and self.n == other.n

    def value(self, i):
        return self.values.get(i, Fraction(0))

    def vector(self):
        return [self.value(i) for i in range(self.graph.m)]

    def support(self):
        return list(self.values)

    def pair_values(self):
        out = {}
        for i, v in self.values.items():
            p = self.graph.edges[i].pair
            out[p] = out.get(p, Fraction(0)) + v
        return out

    def support_graph(self):
        return MultiGraph(self.n, [self.graph.edges[i] for i in self.values])

    def degree_value(self, v):
        return sum((x for i, x in self.values.items() if v in (self.graph.edges[i].u, self.graph.edges[i].v)),
                   Fraction(0))

    def cut_value(self, mask):
        total = Fraction(0)
        for i, x in self.values.items():
            e = self.graph.edges[i]
            if (mask >> e.u & 1) != (mask >> e.v & 1):
                total += x
        return total

    def cost(self):
        return sum((self.graph.edges[i].cost * x for i, x in self.values.items()), Fraction(0))

    def scaled(self, factor):
        return scale(self, factor)


@dataclass(frozen=True)
class CutLP:
    graph: MultiGraph
    k: int
    variant: str = UNBOUNDED

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if self.variant not in (UNBOUNDED, BOUNDED):
            raise ValueError(f"variant must be {UNBOUNDED!r} or {BOUNDED!r}")

    @property
    def bounded(self):
        return self.variant == BOUNDED


@dataclass
class CutLPResult:
    status: str
    value: Optional[Fraction] = None
    x: Optional[FractionalSolution] = None
    cuts: list = field(default_factory=list)
    rounds: int = 0
    reason: str = ""

    @property
    def optimal(self):
        return self.status == "optimal"


def min_cut_of(x: FractionalSolution):
    """Global minimum cut under the x-weights, normalized to avoid the root."""
    value, mask = stoer_wagner(x.n, x.graph.weight_matrix(x.vector()))
    return CutSet(x.n, mask).normalized(), value


def separate(lp: CutLP, x: FractionalSolution) -> Optional[CutSet]:
    """Return a minimum-weight cut with ``x(delta(S)) < k``, or None."""
    if x.graph is not lp.graph and x.graph != lp.graph:
        raise GraphError("solution is not defined on the LP's graph")
    if x.n < 2:
        return None
    cut, value = min_cut_of(x)
    return cut if value < lp.k else None


def _cut_row(g, mask):
    return [1 if (mask >> e.u & 1) != (mask >> e.v & 1) else 0 for e in g.edges]


def solve(lp: CutLP) -> CutLPResult:
    """Exact optimum of the full exponential-size LP by cutting planes.

    Starts from the singleton cuts (or degree equalities), adds one minimum
    violated cut per round, and stops when separation finds nothing.
    """
    g = lp.graph
    objective = [e.cost for e in g.edges]
    sense = EQ if lp.bounded else GE
    rows = []
    for v in range(g.n):
        if g.n == 1:
            break
        rows.append((_cut_row(g, 1 << v), sense, lp.k))
    if g.n == 1:
        x = FractionalSolution(g, {})
        return CutLPResult("optimal", Fraction(0), x)
    cuts = [CutSet(g.n, 1 << v).normalized() for v in range(g.n)]
    rounds = 0
    while True:
        rounds += 1
        if any(not any(r) for r, _, _ in rows):
            return CutLPResult("infeasible", cuts=cuts, rounds=rounds,
                               reason="a cut has no crossing edges")
        out = lp_solve(objective, rows)
        if out.status == "infeasible":
            return CutLPResult("infeasible", cuts=cuts, rounds=rounds, reason="restricted LP infeasible")
        if out.status != "optimal":  # pragma: no cover - costs are nonnegative
            raise RuntimeError(f"unexpected LP status {out.status}")
        x = FractionalSolution(g, out.x)
        cut = separate(lp, x)
        if cut is None:
            return CutLPResult("optimal", out.value, x, cuts, rounds)
        row = _cut_row(g, cut.mask)
        if not any(row):
            return CutLPResult("infeasible", cuts=cuts + [cut], rounds=rounds,
                               reason=f"no edge crosses {cut}")
        rows.append((row, GE, lp.k))
        cuts.append(cut)


def violation(x: FractionalSolution, k, bounded=False):
    """Human-readable description of the first violated constraint, or None."""
    if bounded:
        for v in range(x.n):
            d = x.degree_value(v)
            if d != k:
                return f"degree of vertex {v} is {d}, expected {k}"
    if x.n < 2:
        return None
    cut, value = min_cut_of(x)
    if value < k:
        return f"cut {sorted(cut.members)} has value {value} < {k}"
    return None


def check_feasible(x: FractionalSolution, k, bounded=False) -> bool:
    return violation(x, k, bounded) is None


def scale(x: FractionalSolution, factor) -> FractionalSolution:
    factor = as_fraction(factor)
    if factor <= 0:
        raise ValueError("scale factor must be positive")
    return FractionalSolution(x.graph, {i: v * factor for i, v in x.values.items()})


def metric_violation(g: MultiGraph):
    """None when g is a complete simple graph whose costs obey the triangle inequality."""
    index = g.pair_index()
    n = g.n
    if any(len(ids) > 1 for ids in index.values()):
        return "graph has parallel edges"
    c = {}
    for (u, v), ids in index.items():
        c[u, v] = c[v, u] = g.edges[ids[0]].cost
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in c:
                return f"pair ({u},{v}) is missing"
    for u in range(n):
        for v in range(n):
            for w in range(n):
                if len({u, v, w}) == 3 and c[u, w] > c[u, v] + c[v, w]:
                    return f"triangle inequality fails on {u},{v},{w}"
    return None


def is_metric(g: MultiGraph) -> bool:
    return metric_violation(g) is None


def parsimonious_compare(g: MultiGraph, k: int):
    """Optimal values of the unbounded and bounded relaxations on a metric instance."""
    why = metric_violation(g)
    if why is not None:
        raise ValueError(f"parsimony requires metric costs ({why})")
    plain = solve(CutLP(g, k, UNBOUNDED))
    degree = solve(CutLP(g, k, BOUNDED))
    if not (plain.optimal and degree.optimal):
        raise RuntimeError("metric instance produced an infeasible relaxation")
    return plain.value, degree.value
