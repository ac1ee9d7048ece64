"""Extremeness certificates for solutions of the degree-bounded cut LP."""
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional

from ..cutlp import FractionalSolution, check_feasible, min_cut_of
from ..exactmath import IncrementalBasis, InconsistentSystem, NonUniqueSolution, nullspace, solve_unique
from ..graphcore import CutSet, GraphError
from .construction import sets_cross

TIGHT_ENUMERATION_MAX_N = 24


def _integer_weights(values):
    den = 1
    for v in values:
        den = lcm(den, Fraction(v).denominator)
    return den, [int(Fraction(v) * den) for v in values]


def gray_cut_values(n, edges):
    """Yield ``(mask, value)`` for every root-avoiding cut.

    ``edges`` is a list of ``(u, v, w)`` with integer weights. Cuts are
    visited in Gray-code order so each step costs one vertex's degree.
    """
    nbrs = [[] for _ in range(n)]
    for u, v, w in edges:
        nbrs[u].append((v, w))
        nbrs[v].append((u, w))
    mask = 0
    value = 0
    for i in range(1, 1 << (n - 1)):
        bit = (i & -i).bit_length()  # vertex index, skipping the root
        inside = 0
        deg = 0
        for u, w in nbrs[bit]:
            deg += w
            if mask >> u & 1:
                inside += w
        if mask >> bit & 1:
            mask ^= 1 << bit
            value -= deg - 2 * inside
        else:
            mask ^= 1 << bit
            value += deg - 2 * inside
        yield mask, value


def tight_sets(x: FractionalSolution, k):
    """All root-avoiding masks S with x(delta(S)) = k exactly."""
    if x.n > TIGHT_ENUMERATION_MAX_N:
        raise GraphError(f"tight-set enumeration limited to n <= {TIGHT_ENUMERATION_MAX_N}")
    support = x.support()
    den, w = _integer_weights([x.values[i] for i in support])
    edges = [(x.graph.edges[i].u, x.graph.edges[i].v, wi) for i, wi in zip(support, w)]
    target = Fraction(k) * den
    return [mask for mask, val in gray_cut_values(x.n, edges) if val == target]


def crossing_row(x: FractionalSolution, mask, support=None):
    support = x.support() if support is None else support
    g = x.graph
    return [1 if (mask >> g.edges[i].u & 1) != (mask >> g.edges[i].v & 1) else 0 for i in support]


def _ordered(n, masks):
    """Singleton constraints first (including the root's complement), then by size."""
    full = (1 << n) - 1
    root_comp = full ^ 1

    def key(m):
        size = bin(m).count("1")
        singleton = size == 1 or m == root_comp
        return (not singleton, size, m)

    return sorted(masks, key=key)


def maximal_laminar(n, masks):
    chosen = []
    for m in _ordered(n, masks):
        if all(not sets_cross(m, c) for c in chosen):
            chosen.append(m)
    return chosen


@dataclass
class ExtremenessCertificate:
    """Feasibility transcript plus a full-rank laminar family of tight sets."""

    k: int
    support_size: int
    min_cut: CutSet
    min_cut_value: Fraction
    tight_family: list  # laminar, root-normalized CutSets
    basis: list  # the independent members used for uniqueness
    tight_count: int
    rank: int

    ok = True

    def summary(self):
        return {
            "extreme": True,
            "k": self.k,
            "support_size": self.support_size,
            "min_cut": sorted(self.min_cut.members),
            "min_cut_value": self.min_cut_value,
            "tight_sets": self.tight_count,
            "laminar_family": [sorted(s.members) for s in self.tight_family],
            "basis": [sorted(s.members) for s in self.basis],
            "rank": self.rank,
        }


@dataclass
class Refutation:
    stage: str  # "feasibility" or "uniqueness"
    message: str
    points: tuple = field(default=())
    direction: Optional[list] = None

    ok = False

    def summary(self):
        out = {"extreme": False, "stage": self.stage, "message": self.message}
        if self.points:
            out["points"] = [{f"{x.graph.edges[i].u}-{x.graph.edges[i].v}": v for i, v in x.values.items()}
                             for x in self.points]
        return out


def verify_extreme(x: FractionalSolution, k: int = 2):
    """Certify that x is a vertex of the degree-bounded cut LP at ``k``.

    The check is construction-agnostic: every root-avoiding cut is enumerated
    to collect the tight constraints, and uniqueness is decided by exact rank
    over the support variables. When the tight system is underdetermined, two
    distinct feasible points whose average is x are returned instead.
    """
    support = x.support()
    m = len(support)
    n = x.n
    for v in range(n):
        d = x.degree_value(v)
        if d != k:
            return Refutation("feasibility", f"cut [{v}] has value {d} != {k} (degree of vertex {v})")
    cut, value = min_cut_of(x)
    if value < k:
        return Refutation("feasibility", f"cut {sorted(cut.members)} has value {value} < {k}")

    tight = tight_sets(x, k)
    rows = {mask: crossing_row(x, mask, support) for mask in tight}

    everything = IncrementalBasis(m)
    for mask in _ordered(n, tight):
        everything.add(rows[mask])
        if everything.rank == m:
            break

    if everything.rank < m:
        return _refute_by_direction(x, k, support, [rows[mask] for mask in tight])

    family = maximal_laminar(n, tight)
    lam = IncrementalBasis(m)
    basis = []
    for mask in family:
        if lam.add(rows[mask]):
            basis.append(mask)
    if lam.rank != m:
        raise AssertionError("maximal laminar family of tight sets does not span the tight system")
    solution = solve_unique([rows[mask] for mask in basis], [k] * len(basis))
    if solution != [x.values[i] for i in support]:
        raise AssertionError("tight system solution differs from x")
    return ExtremenessCertificate(
        k=k, support_size=m, min_cut=cut, min_cut_value=value,
        tight_family=[CutSet(n, s) for s in family], basis=[CutSet(n, s) for s in basis],
        tight_count=len(tight), rank=lam.rank,
    )


def _refute_by_direction(x, k, support, tight_rows):
    if tight_rows:
        direction = nullspace(tight_rows, len(support))[0]
    else:
        direction = [Fraction(1)] + [Fraction(0)] * (len(support) - 1)
    # Largest step keeping every non-tight cut and every support value feasible.
    limit = None
    for i, d in zip(support, direction):
        if d:
            r = x.values[i] / abs(d)
            limit = r if limit is None else min(limit, r)
    xden, xw = _integer_weights([x.values[i] for i in support])
    dden, dw = _integer_weights(direction)
    edges_x = [(x.graph.edges[i].u, x.graph.edges[i].v, w) for i, w in zip(support, xw)]
    edges_d = [(x.graph.edges[i].u, x.graph.edges[i].v, w) for i, w in zip(support, dw)]
    for (mask, xv), (_, dv) in zip(gray_cut_values(x.n, edges_x), gray_cut_values(x.n, edges_d)):
        slack = Fraction(xv, xden) - k
        rate = Fraction(abs(dv), dden)
        if slack > 0 and rate:
            r = slack / rate
            limit = r if limit is None else min(limit, r)
    eps = limit / 2
    plus = FractionalSolution(x.graph, {i: x.values[i] + eps * d for i, d in zip(support, direction)})
    minus = FractionalSolution(x.graph, {i: x.values[i] - eps * d for i, d in zip(support, direction)})
    for p in (plus, minus):
        if not check_feasible(p, k, bounded=True):
            raise AssertionError("perturbed point left the polytope")
    return Refutation(
        "uniqueness",
        f"tight system has rank < {len(support)}; x is the midpoint of two feasible points",
        points=(plus, minus), direction=direction,
    )


def tight_cross_value(x: FractionalSolution, s: CutSet, t: CutSet) -> Fraction:
    """x(delta(S:T)) for disjoint vertex sets S and T."""
    if s.mask & t.mask:
        raise ValueError("sets must be disjoint")
    total = Fraction(0)
    for i, val in x.values.items():
        e = x.graph.edges[i]
        if (e.u in s and e.v in t) or (e.u in t and e.v in s):
            total += val
    return total


def all_tight_sets(x: FractionalSolution, k=2):
    """Every proper subset S (root side included) with x(delta(S)) = k."""
    full = (1 << x.n) - 1
    out = []
    for mask in tight_sets(x, k):
        out.append(mask)
        out.append(full ^ mask)
    return sorted(out)


def tight_lemma_triples(x: FractionalSolution, k=2):
    """Yield (S, T, cross value) for disjoint tight S, T whose union is tight."""
    tight = all_tight_sets(x, k)
    tight_set = set(tight)
    for a_idx, a in enumerate(tight):
        for b in tight[a_idx + 1:]:
            if a & b == 0 and (a | b) in tight_set:
                s, t = CutSet(x.n, a), CutSet(x.n, b)
                yield s, t, tight_cross_value(x, s, t)


@dataclass(frozen=True)
class SolutionStats:
    fractionality: Fraction
    denominator: int
    max_support_degree: int
    n: int
    support_edges: int

    def as_tuple(self):
        return (self.fractionality, self.denominator, self.max_support_degree, self.n, self.support_edges)


def stats(x: FractionalSolution) -> SolutionStats:
    vals = list(x.values.values())
    deg = [0] * x.n
    for i in x.values:
        e = x.graph.edges[i]
        deg[e.u] += 1
        deg[e.v] += 1
    den = 1
    for v in vals:
        den = lcm(den, v.denominator)
    return SolutionStats(
        fractionality=min(vals) if vals else Fraction(0),
        denominator=den,
        max_support_degree=max(deg) if deg else 0,
        n=x.n,
        support_edges=len(vals),
    )


def uniqueness_chain(x: FractionalSolution, t: int):
    """Replays the recurrences forced on the Fibonacci construction.

    With y_i the value of edge (2i+1, 2i+3) (1-based labels), returns three
    booleans: y_i = y_{i+1} + y_{i+2} for i = 1..t-4, y_{t-2} = y_{t-3}, and
    2 y_1 + y_2 = 1.
    """
    pv = x.pair_values()

    def val(a, b):
        a, b = a - 1, b - 1
        return pv.get((min(a, b), max(a, b)), Fraction(0))

    y = {i: val(2 * i + 1, 2 * i + 3) for i in range(1, t - 1)}
    recurrence = all(y[i] == y[i + 1] + y[i + 2] for i in range(1, t - 3))
    tail = y[t - 2] == y[t - 3] if t >= 4 else True
    head = 2 * y[1] + y[2] == 1 if t >= 4 else 2 * y[1] == 1
    return recurrence, tail, head


def solve_tight_system(x: FractionalSolution, family, k=2):
    """Unique solution of {x(delta(T)) = k : T in family} over x's support, or None."""
    support = x.support()
    rows = [crossing_row(x, s.mask if isinstance(s, CutSet) else s, support) for s in family]
    try:
        sol = solve_unique(rows, [k] * len(rows))
    except (NonUniqueSolution, InconsistentSystem):
        return None
    return dict(zip(support, sol))
