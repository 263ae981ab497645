"""
Linear scaling
==============

The counter does a constant number of exact operations per vertex.  The
fitted log-log slope of the op count against n is close to 1; wall time also
grows with the bit length of the answer.
"""

from nestedtrees.harness import run_bench

report = run_bench([1_000, 10_000, 100_000])
print(f"{'family':10s} {'n':>7s} {'ops':>8s} {'bits':>9s} {'ms':>8s}")
for row in report.rows:
    print(f"{row.family:10s} {row.n:7d} {row.ops:8d} {row.bits:9d} {row.wall_ns / 1e6:8.1f}")
for family, exponent in report.exponents.items():
    print(f"{family}: op-count exponent {exponent:.3f}")

# Small sizes also run the O(n^3) oracle for a cross-check.
small = run_bench([20, 40, 80], families=["balanced"])
print("oracle cross-checks:", small.cross_checked)
