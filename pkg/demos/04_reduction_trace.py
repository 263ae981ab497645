"""
Watching the cofactor reduction
===============================

The counter multiplies closed-form factors.  ``paper_reduction_trace`` gets
the same numbers the slow way: it applies paired row/column operations to the
dense cofactor matrix until only a diagonal is left.
"""

from nestedtrees import ChainSpec, paper_reduction_trace, run_counter
from nestedtrees.kirchhoff_oracle import rational_det

spec = ChainSpec((1, 2), (2, 2))
dets = []
trace = paper_reduction_trace(spec, hook=lambda stage, A: dets.append((stage, rational_det(A))))

print("cell factors:   ", [str(x) for x in trace.cell_factors])
print("representatives:", [str(x) for x in trace.representatives])
print("pivots:         ", [str(x) for x in trace.pivots])
print("product:", trace.product, " counter:", run_counter(spec).tau)
print("determinant after each operation pair:", [(s, str(d)) for s, d in dets])
