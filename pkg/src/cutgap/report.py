"""Regression table of the headline values, regenerated from scratch."""
from fractions import Fraction

from .extremepoints import (construct_fibonacci, directed_face_extreme, enumerate_extreme_points, fibonacci, stats,
                            verify_extreme)
from .gap import domination_gap

# Published gap values as printed (one of them unreduced).
PUBLISHED_GAPS = {3: "9/8", 4: "23/21", 5: "22/20", 6: "35/32"}


def gap_rows(max_t=6):
    rows = []
    for t in range(3, max_t + 1):
        res = domination_gap(construct_fibonacci(t))
        row = {"t": t, "n": 2 * t, "gap": res.t, "columns": len(res.combination)}
        if t in PUBLISHED_GAPS:
            num, den = PUBLISHED_GAPS[t].split("/")
            row["published"] = PUBLISHED_GAPS[t]
            row["matches"] = res.t == Fraction(int(num), int(den))
        rows.append(row)
    return rows


def fibonacci_rows(max_t=8):
    rows = []
    for t in range(3, max_t + 1):
        x = construct_fibonacci(t)
        s = stats(x)
        rows.append({
            "t": t, "certified": verify_extreme(x, 2).ok, "fractionality": s.fractionality,
            "denominator": s.denominator, "max_support_degree": s.max_support_degree, "n": s.n,
            "support_edges": s.support_edges,
            "expected": [Fraction(1, fibonacci(t)), fibonacci(t), t, 2 * t, 4 * t - 3],
        })
    return rows


def enumeration_rows(max_n=7):
    rows = []
    for n in range(3, max_n + 1):
        points = enumerate_extreme_points(n)
        dens = [p.stats.denominator for p in points]
        degs = [p.stats.max_support_degree for p in points]
        rows.append({
            "n": n, "classes": len(points),
            "denominator_at_least_2": sum(d >= 2 for d in dens),
            "max_degree_at_least_4": sum(d >= 4 for d in degs),
            "max_denominator": max(dens, default=None), "max_degree": max(degs, default=None),
            "ceil_half_n": -(-n // 2),
            "max_support_edges": max((p.stats.support_edges for p in points), default=None),
        })
    return rows


def directed_rows(ts=(3, 4)):
    return [{"t": t, "n": 2 * t, "min_arc": directed_face_extreme(construct_fibonacci(t)).min_positive()} for t in ts]


def build_report(max_t=6, enum_n=7):
    return {
        "fibonacci": fibonacci_rows(max(8, max_t)),
        "gap": gap_rows(max_t),
        "enumeration": enumeration_rows(enum_n),
        "directed": directed_rows(),
    }
