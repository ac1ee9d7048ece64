"""List every extreme point with support min degree 3 on up to seven vertices."""
from cutgap.extremepoints import enumerate_extreme_points, value_multiset

for n in range(3, 8):
    points = enumerate_extreme_points(n)
    print(f"n={n}: {len(points)} class(es)")
    for p in points:
        values = ", ".join(f"{v} x{c}" for v, c in value_multiset(p.solution).items())
        print(f"    denominator={p.stats.denominator} max degree={p.stats.max_support_degree} values: {values}")
