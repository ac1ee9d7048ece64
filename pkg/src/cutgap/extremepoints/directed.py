"""Directed cut relaxation: symmetric lift, dropping directions, and extreme points of the lifted face."""
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..cutlp import FractionalSolution, check_feasible
from ..exactmath import EQ, GE, IncrementalBasis, as_fraction, lp_solve
from ..graphcore import GraphError

DIRECTED_MAX_N = 16


@dataclass(frozen=True)
class DirectedSolution:
    """Positive rational values on arcs ``(u, v)`` of a digraph on n vertices."""

    n: int
    arcs: dict  # (u, v) -> Fraction, positive entries only, sorted

    @classmethod
    def build(cls, n, values):
        arcs = {}
        for (u, v), y in values.items():
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"bad arc ({u},{v})")
            y = as_fraction(y)
            if y < 0:
                raise ValueError(f"negative value on arc ({u},{v})")
            if y:
                arcs[u, v] = arcs.get((u, v), Fraction(0)) + y
        return cls(n, dict(sorted(arcs.items())))

    def out_value(self, mask):
        return sum((y for (u, v), y in self.arcs.items() if mask >> u & 1 and not mask >> v & 1), Fraction(0))

    def min_positive(self):
        return min(self.arcs.values()) if self.arcs else None


def violated_dicut(y: DirectedSolution):
    """Smallest-mask U with y(delta_out(U)) < 1, or None. Enumerates all 2^n - 2 sets."""
    n = y.n
    if n > DIRECTED_MAX_N:
        raise GraphError(f"directed cut enumeration limited to n <= {DIRECTED_MAX_N}")
    den = lcm(*(val.denominator for val in y.arcs.values())) if y.arcs else 1
    arcs = [(u, v, int(val * den)) for (u, v), val in y.arcs.items()]
    for mask in range(1, (1 << n) - 1):
        total = 0
        for u, v, w in arcs:
            if mask >> u & 1 and not mask >> v & 1:
                total += w
        if total < den:
            return mask
    return None


def is_atsp_feasible(y: DirectedSolution):
    return violated_dicut(y) is None


def lift_to_directed(x: FractionalSolution) -> DirectedSolution:
    """Put half of each edge value on both of its arcs."""
    if not check_feasible(x, 2):
        raise ValueError("x is not feasible for the unbounded 2-cut LP")
    values = {}
    for i, val in x.values.items():
        e = x.graph.edges[i]
        for a in ((e.u, e.v), (e.v, e.u)):
            values[a] = values.get(a, Fraction(0)) + val / 2
    return DirectedSolution.build(x.n, values)


def drop_directions(y: DirectedSolution) -> FractionalSolution:
    pairs = {}
    for (u, v), val in y.arcs.items():
        key = (min(u, v), max(u, v))
        pairs[key] = pairs.get(key, Fraction(0)) + val
    return FractionalSolution.from_pairs(y.n, pairs)


def _seed():
    return int(os.environ.get("CUTGAP_SEED", "0"))


def directed_face_extreme(x_star: FractionalSolution, seed=None, max_tries=20) -> DirectedSolution:
    """An extreme point of {y in the directed relaxation : y drops to x_star}.

    The face is optimized over exactly with a fixed generic objective
    (arc i weighs 1/(i+2)); if the optimum is not a vertex the objective is
    redrawn from a seeded generator. The returned point is checked to be
    feasible and to have a full-rank tight system.
    """
    pv = x_star.pair_values()
    pairs = list(pv)
    n = x_star.n
    arcs = []
    for u, v in pairs:
        arcs += [(u, v), (v, u)]
    width = len(arcs)
    base_rows = []
    for i, (u, v) in enumerate(pairs):
        row = [0] * width
        row[2 * i] = row[2 * i + 1] = 1
        base_rows.append((row, EQ, pv[u, v]))

    def dicut_row(mask):
        return [1 if mask >> u & 1 and not mask >> v & 1 else 0 for u, v in arcs]

    rng = random.Random(_seed() if seed is None else seed)
    objective = [Fraction(1, i + 2) for i in range(width)]
    cuts = []
    for _ in range(max_tries):
        while True:
            rows = base_rows + [(dicut_row(m), GE, 1) for m in cuts]
            out = lp_solve(objective, rows)
            if not out.optimal:
                raise AssertionError("the lifted face is nonempty; LP must be feasible")
            y = DirectedSolution.build(n, dict(zip(arcs, out.x)))
            mask = violated_dicut(y)
            if mask is None:
                break
            cuts.append(mask)
        if _is_vertex(y, arcs, pv, pairs):
            return y
        objective = [Fraction(rng.randint(1, 10 ** 6), 10 ** 6) for _ in range(width)]
    raise RuntimeError("no vertex found on the lifted face")


def _is_vertex(y: DirectedSolution, arcs, pv, pairs):
    """Rank of equalities, tight directed cuts and zero arcs equals the number of arcs."""
    width = len(arcs)
    basis = IncrementalBasis(width)
    for i in range(len(pairs)):
        row = [0] * width
        row[2 * i] = row[2 * i + 1] = 1
        basis.add(row)
    for j, a in enumerate(arcs):
        if a not in y.arcs:
            row = [0] * width
            row[j] = 1
            basis.add(row)
    if basis.rank == width:
        return True
    for mask in range(1, (1 << y.n) - 1):
        if y.out_value(mask) == 1:
            basis.add([1 if mask >> u & 1 and not mask >> v & 1 else 0 for u, v in arcs])
            if basis.rank == width:
                return True
    return False

