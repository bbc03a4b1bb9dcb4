"""Convex Katetov functions on the real line and the fixed point of f -> (lam * f) (+) g.

Run: python demos/convex_line.py
"""
from fractions import Fraction as F

from infconv import PLKatetovFn, epi_scale, fixed_point_solve, gamma, pl_dinf, pl_infconv

f = PLKatetovFn(((-1, 2), (1, 1), (3, 2)))
g = PLKatetovFn(((0, 1), (2, 1)))
print("f =", f, " intercepts", f.c_minus, f.c_plus)
print("g =", g)

# Inf-convolution lays the pieces of both graphs end to end by slope.
h = pl_infconv(f, g)
print("f (+) g =", h, " min", h.minimum(), "=", f.minimum(), "+", g.minimum())

# |t - a| (+) |t - b| = |t - a - b|, and epi-scaling acts like multiplication by a scalar.
print("gamma(3) (+) gamma(-5) =", pl_infconv(gamma(3), gamma(-5)))
print("(1/2) * f =", epi_scale(F(1, 2), f))
print("(1/2) * f (+) (1/2) * f == f:", pl_infconv(epi_scale(F(1, 2), f), epi_scale(F(1, 2), f)) == f)

# The contraction converges to the unique fixed point; for g = |t| + 1 and lam = 1/2 that is |t| + 2.
res = fixed_point_solve(F(1, 2), PLKatetovFn.abs_plus(1), F(1, 10**9))
print(f"\nfixed point after {res.iterations} steps: {res.solution}")
print("distance to |t| + 2:", pl_dinf(res.solution, PLKatetovFn.abs_plus(2)))
print("first step sizes:", [str(s) for s in res.trace[:5]])
