"""Splitting a multigraph into an a-edge-connected and a b-edge-connected spanning part."""
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Optional

from .graphcore import CutSet, Edge, MultiGraph, edge_connectivity, global_min_cut, is_k_edge_connected

SPLIT_MAX_EDGES = 30


class SplitBoundError(ValueError):
    pass


@dataclass
class SplitResult:
    feasible: bool
    partition: Optional[tuple] = None  # two MultiGraphs on V(g)
    nodes: int = 0

    def summary(self):
        out = {"feasible": self.feasible, "nodes": self.nodes}
        if self.feasible:
            out["parts"] = [[[e.u, e.v, e.mult] for e in part.edges] for part in self.partition]
        return out


def _grouped(g: MultiGraph):
    """Merge parallel records into (u, v, total multiplicity)."""
    groups = {}
    for e in g.edges:
        groups[e.pair] = groups.get(e.pair, 0) + e.mult
    return sorted(groups.items())


def _graph(n, groups, counts):
    return MultiGraph(n, [Edge(u, v, 0, c) for ((u, v), _), c in zip(groups, counts) if c > 0])


def split_search(g: MultiGraph, a: int, b: int) -> SplitResult:
    """Exact decision by branch and bound over how many copies of each pair go to part 1.

    A branch is cut when part 1 plus everything unassigned is not
    a-edge-connected (likewise for part 2), or when either part can no
    longer reach its minimum edge count ceil(a n / 2).
    """
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    if g.total_multiplicity() > SPLIT_MAX_EDGES:
        raise SplitBoundError(f"split_search is limited to {SPLIT_MAX_EDGES} edges (with multiplicity)")
    n = g.n
    groups = _grouped(g)
    total = sum(m for _, m in groups)
    # an a-edge-connected spanning part has min degree a and is connected
    need1 = max(ceil(a * n / 2), n - 1)
    need2 = max(ceil(b * n / 2), n - 1)
    if n > 1 and total < need1 + need2:
        return SplitResult(False, nodes=0)
    one = [0] * len(groups)
    two = [0] * len(groups)
    nodes = [0]

    def optimistic_ok(i):
        rest = [m for _, m in groups]
        left1 = [one[j] if j < i else rest[j] for j in range(len(groups))]
        left2 = [two[j] if j < i else rest[j] for j in range(len(groups))]
        return (is_k_edge_connected(_graph(n, groups, left1), a)
                and is_k_edge_connected(_graph(n, groups, left2), b))

    def rec(i, used1, used2):
        nodes[0] += 1
        unassigned = total - used1 - used2
        if used1 + unassigned < need1 or used2 + unassigned < need2:
            return False
        if not optimistic_ok(i):
            return False
        if i == len(groups):
            return True
        mult = groups[i][1]
        low = (mult + 1) // 2 if (a == b and i == 0) else 0
        for c in range(mult, low - 1, -1):
            one[i], two[i] = c, mult - c
            if rec(i + 1, used1 + c, used2 + mult - c):
                return True
        one[i] = two[i] = 0
        return False

    if n == 1:
        return SplitResult(True, (MultiGraph(1), MultiGraph(1)), 1)
    if rec(0, 0, 0):
        parts = (_graph(n, groups, one), _graph(n, groups, two))
        return SplitResult(True, parts, nodes[0])
    return SplitResult(False, nodes=nodes[0])


def verify_split(g: MultiGraph, result: SplitResult, a: int, b: int) -> bool:
    """Independent check: the parts partition E with multiplicities and meet both thresholds."""
    if not result.feasible:
        return False
    p1, p2 = result.partition
    if p1.n != g.n or p2.n != g.n:
        return False
    merged = {}
    for part in (p1, p2):
        for e in part.edges:
            merged[e.pair] = merged.get(e.pair, 0) + e.mult
    if merged != dict(_grouped(g)):
        return False
    if g.n == 1:
        return True
    return edge_connectivity(p1) >= a and edge_connectivity(p2) >= b


@dataclass
class WitnessResult:
    verified: bool
    bound: Optional[int] = None  # f(a, b) >= bound when verified
    reason: str = ""
    cut: Optional[CutSet] = None
    search: Optional[SplitResult] = field(default=None, repr=False)


def f_lower_witness(a: int, b: int, g: MultiGraph) -> WitnessResult:
    """Check that g certifies f(a, b) >= lambda(g) + 1 >= a + b.

    g must be (a + b - 1)-edge-connected and admit no split; then every
    threshold up to lambda(g) fails to guarantee a partition.
    """
    if g.n < 2:
        return WitnessResult(False, reason="witness needs at least two vertices")
    cut, lam = global_min_cut(g)
    if lam < a + b - 1:
        return WitnessResult(False, reason=f"cut {sorted(cut.members)} has {lam} edges < {a + b - 1}", cut=cut)
    res = split_search(g, a, b)
    if res.feasible:
        return WitnessResult(False, reason="graph splits", search=res)
    return WitnessResult(True, int(lam) + 1, f"{int(lam)}-edge-connected and unsplittable", search=res)


def complete_witness_for_a1(a: int) -> WitnessResult:
    """K_{a+2} is (a+1)-regular and too sparse for an a-connected part plus a spanning tree."""
    return f_lower_witness(a, 1, MultiGraph.complete(a + 2))


def splitting_gap_bound(c: int, k: int, t: int, n: int) -> Fraction:
    """ceil((2^n (k + c) - c) / (t k)) * t / 2^n, checked against 1 + c/k + t/2^n."""
    if c < 0 or k < 1 or t < 1 or n < 0:
        raise ValueError("need c >= 0, k >= 1, t >= 1, n >= 0")
    p = 2 ** n
    num = p * (k + c) - c
    copies = -(-num // (t * k))
    value = Fraction(copies * t, p)
    limit = 1 + Fraction(c, k) + Fraction(t, p)
    if value > limit:  # pragma: no cover - ceiling adds less than one step of t/2^n
        raise AssertionError(f"bound {value} exceeds {limit}")
    return value


def splitting_limit(c: int, k: int, t: int, n: int) -> Fraction:
    return 1 + Fraction(c, k) + Fraction(t, 2 ** n)

