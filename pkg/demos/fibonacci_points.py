"""Build the Fibonacci extreme points, certify them and show how fast the smallest value shrinks."""
from cutgap.extremepoints import construct_fibonacci, stats, verify_extreme

for t in range(3, 11):
    x = construct_fibonacci(t)
    cert = verify_extreme(x, 2)
    s = stats(x)
    print(f"t={t:2d} n={s.n:2d} edges={s.support_edges:2d} smallest={s.fractionality} "
          f"max degree={s.max_support_degree} certified={cert.ok} tight sets={cert.tight_count}")
