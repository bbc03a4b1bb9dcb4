"""Inf-convolution on small finite groups and quasigroups.

Run: python demos/finite_carriers.py
"""
from fractions import Fraction as F

from infconv import (
    FnOnX,
    cancellation_search,
    classify_magma,
    cyclic_group,
    dihedral_group,
    inf_conv,
    is_unit,
    kuratowski,
    n_fold_conv,
    subtraction_quasigroup,
    verify_fond0,
)

# Z/3Z with the discrete metric. Kuratowski functions d(a, .) multiply like the group.
Z3 = cyclic_group(3)
d1, d2 = kuratowski(Z3, 1), kuratowski(Z3, 2)
print("d1 (+) d2 =", inf_conv(Z3, d1, d2), " which is d0 =", kuratowski(Z3, 0))

# A pair with unique minimizers at 1 and 2: the convolution has its unique minimizer at 1 + 2 = 0.
f, g = FnOnX.of(2, 1, 2), FnOnX.of(1, 1, 0)
rep = verify_fond0(Z3, f, g)
print("f (+) g =", rep.convolution, " minimizer", rep.direction_I, " from pair", rep.direction_II)

# The same statement on a noncommutative group: D4 has order 8.
D4 = dihedral_group(4)
print("D4 is a", classify_magma(D4).label)
a, b = 1, 4
print("argmin(d_a (+) d_b) =", inf_conv(D4, kuratowski(D4, a), kuratowski(D4, b)).argmin()[0], " a*b =", D4.op(a, b))

# Units: every shifted Kuratowski function inverts, with the inverse built and rechecked.
Z5 = cyclic_group(5)
cert = is_unit(Z5, kuratowski(Z5, 2).shift(F(3, 4)))
print("d2 + 3/4 has inverse", cert.inverse)
print("the zero function is a unit:", is_unit(Z5, FnOnX.constant(5, 0)) is not None, " (d(y, .) + c are the only ones)")

# Without associativity of the law, convolution stops associating too.
Q = subtraction_quasigroup(5)
dq = [kuratowski(Q, k) for k in range(3)]
print("subtraction mod 5 is a", classify_magma(Q).label)
print("(d0 (+) d1) (+) d2 =", n_fold_conv(Q, dq, "left"))
print("d0 (+) (d1 (+) d2) =", n_fold_conv(Q, dq, "right"))

# And there is no cancellation, even on a group.
f, h, g = cancellation_search(Z3, (0, 1))
print(f"{f} (+) {g} = {h} (+) {g} =", inf_conv(Z3, f, g))
