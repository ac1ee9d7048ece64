"""Column generation for the domination gap of the first Fibonacci points."""
import sys

from cutgap.extremepoints import construct_fibonacci
from cutgap.gap import check_dual_certificate, domination_gap

max_t = int(sys.argv[1]) if len(sys.argv) > 1 else 5
for t in range(3, max_t + 1):
    x = construct_fibonacci(t)
    res = domination_gap(x)
    print(f"t={t} gap={res.t} cycles used={len(res.combination)} pricing rounds={res.iterations} "
          f"dual check={check_dual_certificate(x, res)}")
    for col, weight in res.convex_weights():
        print(f"    {weight}  x  {'-'.join(map(str, col.cycle))}")
