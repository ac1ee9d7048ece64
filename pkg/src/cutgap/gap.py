"""Domination gap of a fractional point against Hamiltonian cycles.

The gap of x is the optimum of the covering LP

    min sum_H mu_H   s.t.   sum_H mu_H chi_H >= x,   mu >= 0

over all Hamiltonian cycles H of the complete graph. It is solved exactly
by column generation; the pricing step is a Held-Karp bitmask DP.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Optional

from .cutlp import FractionalSolution
from .exactmath import GE, lp_solve

TSP_MIN_N = 3
TSP_MAX_N = 16


class TSPBoundError(ValueError):
    pass


@dataclass(frozen=True)
class CycleColumn:
    cycle: tuple  # vertex order starting at 0

    @classmethod
    def from_order(cls, order):
        """Normalize rotation and direction: start at 0, second vertex smaller than last."""
        order = list(order)
        i = order.index(0)
        order = order[i:] + order[:i]
        if len(order) > 2 and order[1] > order[-1]:
            order = [order[0]] + order[1:][::-1]
        return cls(tuple(order))

    @property
    def n(self):
        return len(self.cycle)

    def edges(self):
        c = self.cycle
        return frozenset((min(a, b), max(a, b)) for a, b in zip(c, c[1:] + c[:1]))

    def indicator(self):
        """0/1 vector over the pairs of the complete graph, in lexicographic order."""
        es = self.edges()
        return [1 if p in es else 0 for p in combinations(range(self.n), 2)]


def _cost_matrix(costs, n):
    if isinstance(costs, dict):
        c = [[Fraction(0)] * n for _ in range(n)]
        for (u, v), w in costs.items():
            c[u][v] = c[v][u] = Fraction(w)
        return c
    costs = list(costs)
    if costs and isinstance(costs[0], (list, tuple)):
        return [[Fraction(w) for w in row] for row in costs]
    pairs = list(combinations(range(n), 2))
    if len(costs) != len(pairs):
        raise ValueError(f"expected {len(pairs)} pair costs for n={n}, got {len(costs)}")
    c = [[Fraction(0)] * n for _ in range(n)]
    for (u, v), w in zip(pairs, costs):
        c[u][v] = c[v][u] = Fraction(w)
    return c


def tsp_min_cycle(costs, n):
    """Exact minimum-cost Hamiltonian cycle on K_n under arbitrary rational costs.

    ``costs`` may be a vector over the pairs in lexicographic order, a dict
    keyed by pairs, or an n x n matrix. Costs are brought to a common
    denominator so the DP runs on integers. Returns ``(cost, CycleColumn)``.
    """
    if not TSP_MIN_N <= n <= TSP_MAX_N:
        raise TSPBoundError(f"tsp_min_cycle needs {TSP_MIN_N} <= n <= {TSP_MAX_N}, got n={n}")
    c = _cost_matrix(costs, n)
    den = lcm(*(w.denominator for row in c for w in row))
    ci = [[int(w * den) for w in row] for row in c]
    k = n - 1  # vertex j + 1 is bit j; vertex 0 is the fixed start
    full = (1 << k) - 1
    inf = None
    dp = [[inf] * k for _ in range(full + 1)]
    parent = [[-1] * k for _ in range(full + 1)]
    for j in range(k):
        dp[1 << j][j] = ci[0][j + 1]
    for mask in range(1, full + 1):
        row = dp[mask]
        for j in range(k):
            val = row[j]
            if val is None:
                continue
            cj = ci[j + 1]
            rest = full & ~mask
            while rest:
                low = rest & -rest
                rest ^= low
                nxt = low.bit_length() - 1
                cand = val + cj[nxt + 1]
                target = dp[mask | low]
                if target[nxt] is None or cand < target[nxt]:
                    target[nxt] = cand
                    parent[mask | low][nxt] = j
    best, last = None, -1
    for j in range(k):
        total = dp[full][j] + ci[j + 1][0]
        if best is None or total < best:
            best, last = total, j
    order = []
    mask = full
    while last >= 0:
        order.append(last + 1)
        prev = parent[mask][last]
        mask ^= 1 << last
        last = prev
    order.append(0)
    return Fraction(best, den), CycleColumn.from_order(order[::-1])


@dataclass
class GapResult:
    """``combination`` pairs cycles with multipliers mu_H > 0 summing to t."""

    t: Fraction
    combination: list
    duals: dict = field(default_factory=dict)  # support pair -> dual weight
    min_reduced_cost: Optional[Fraction] = None
    iterations: int = 0

    def convex_weights(self):
        return [(col, mu / self.t) for col, mu in self.combination] if self.t else []

    def coverage(self):
        cover = {}
        for col, mu in self.combination:
            for p in col.edges():
                cover[p] = cover.get(p, Fraction(0)) + mu
        return cover

    def dominates(self, x: FractionalSolution):
        cover = self.coverage()
        return all(cover.get(p, 0) >= v for p, v in x.pair_values().items())


def _nearest_neighbor(n, weight, start):
    order = [start]
    seen = {start}
    while len(order) < n:
        here = order[-1]
        nxt = max((v for v in range(n) if v not in seen),
                  key=lambda v: (weight.get((min(here, v), max(here, v)), 0), -v))
        order.append(nxt)
        seen.add(nxt)
    return CycleColumn.from_order(order)


def _through(n, pair):
    u, v = pair
    return CycleColumn.from_order([u, v] + [w for w in range(n) if w not in pair])


def initial_columns(n, xv):
    cols = [CycleColumn.from_order(range(n))]
    cols += [_nearest_neighbor(n, xv, s) for s in range(n)]
    covered = set().union(*(c.edges() for c in cols))
    cols += [_through(n, p) for p in xv if p not in covered]
    out = []
    for c in cols:
        if c not in out:
            out.append(c)
    return out


def domination_gap(x: FractionalSolution, max_iterations=10000) -> GapResult:
    """Exact domination gap by column generation.

    Stops when the pricing DP proves that no Hamiltonian cycle has negative
    reduced cost; the master's duals are then an optimality certificate.
    """
    xv = x.pair_values()
    n = x.n
    if not xv:
        return GapResult(Fraction(0), [], {}, Fraction(1), 0)
    pairs = sorted(xv)
    cols = initial_columns(n, xv)
    for it in range(1, max_iterations + 1):
        rows = [([1 if p in c.edges() else 0 for c in cols], GE, xv[p]) for p in pairs]
        out = lp_solve([1] * len(cols), rows)
        if not out.optimal:  # pragma: no cover - initial columns cover every support pair
            raise AssertionError(f"master LP {out.status}")
        duals = dict(zip(pairs, out.duals))
        price, col = tsp_min_cycle({p: -w for p, w in duals.items()}, n)
        reduced = 1 + price
        if reduced >= 0:
            combo = [(c, mu) for c, mu in zip(cols, out.x) if mu > 0]
            result = GapResult(out.value, combo, duals, reduced, it)
            if not result.dominates(x):  # pragma: no cover - guaranteed by the master LP
                raise AssertionError("combination does not dominate x")
            return result
        if col in cols:  # pragma: no cover - a basic column has zero reduced cost
            raise AssertionError("pricing returned an existing column")
        cols.append(col)
    raise RuntimeError("column generation did not terminate")


def check_dual_certificate(x: FractionalSolution, result: GapResult):
    """Independent check of the bound: duals are nonnegative, price every tour at most 1, and sum to t on x."""
    if any(w < 0 for w in result.duals.values()):
        return False
    xv = x.pair_values()
    if sum((w * xv.get(p, 0) for p, w in result.duals.items()), Fraction(0)) != result.t:
        return False
    if not xv:
        return True
    price, _ = tsp_min_cycle({p: -w for p, w in result.duals.items()}, x.n)
    return price >= -1
