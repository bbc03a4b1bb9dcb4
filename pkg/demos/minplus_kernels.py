"""Min-plus convolution of sequences: cyclic and integer-indexed monoids, plus the fast kernels.

Run: python demos/minplus_kernels.py [n]
"""
import sys
from fractions import Fraction as F

from infconv import CofiniteSeq, CyclicSeq, bench_minplus, convex_minplus_merge, cyclic_minplus, smawk_minplus, z_minplus

# Z/7Z: delta_j (+) delta_k = delta_{j+k}.
print("cyclic:", cyclic_minplus(CyclicSeq.delta(7, 3), CyclicSeq.delta(7, 6)).to_json())

# On Z only finitely many entries differ from a default, so the convolution stays exact.
u = CofiniteSeq.delta(3)
v = CofiniteSeq(1, ((-1, 0), (4, F(1, 2))))
w = z_minplus(u, v)
print("on Z:", w.to_json())

# Convex sequences convolve by merging their slopes; one convex operand is enough for SMAWK.
a, b = [4, 1, 0, 1, 4], [0, F(1, 2), 2]
print("merge:", [str(x) for x in convex_minplus_merge(a, b)])
print("smawk:", [str(x) for x in smawk_minplus([5, -2, 7, 0, 3], b)])

n = int(sys.argv[1]) if len(sys.argv) > 1 else 2**12
print(f"\nbenchmark at n={n} against the O(n^2) double loop")
for mode in ("convex-merge", "smawk"):
    r = bench_minplus(n, mode, seed=0)
    print(f"  {mode:13s} {r.seconds:8.4f}s  naive {r.naive_seconds:8.4f}s  speedup {r.speedup:6.1f}x  exact={r.ok}")
