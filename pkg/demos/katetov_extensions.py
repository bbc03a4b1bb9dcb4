"""Katetov functions: one-point metric extensions and how they convolve.

Run: python demos/katetov_extensions.py
"""
import random
from fractions import Fraction as F

from infconv import (
    SubspaceFn,
    contraction_isometry_check,
    cyclic_group,
    d_inf,
    eval_as_distance,
    inf_conv,
    is_katetov,
    katetov_extension,
    katetov_units,
    kuratowski,
)
from infconv.fnspace import random_katetov
from infconv.magma import cyclic_distance

# Z/8Z as the 8-cycle: distance is the shorter way round.
C8 = cyclic_group(8, cyclic_distance(8))

# A new point at distance 1/2 from 0 and 3/2 from 1, extended to the whole cycle as far out as possible.
sf = SubspaceFn(C8.metric, (0, 1), (F(1, 2), F(3, 2)))
ext = katetov_extension(sf)
print("extension:", ext, " Katetov:", is_katetov(C8, ext))

# A Katetov function is the distance profile of a new point, so its sup-distance to d(x, .) is f(x).
f = random_katetov(C8, random.Random(1))
print("f =", f)
print("d_inf(f, d(x, .)) for each x:", [str(eval_as_distance(C8, f, x)) for x in range(8)])

# Convolving with g never increases distances; convolving with d(x, .) preserves them.
g, h = random_katetov(C8, random.Random(2)), random_katetov(C8, random.Random(3))
print("d_inf(f, h) =", d_inf(f, h), " after (+) g:", d_inf(inf_conv(C8, f, g), inf_conv(C8, h, g)))
print("contraction and isometry checks hold:", contraction_isometry_check(C8, f, g, h).holds)

# The invertible Katetov functions are exactly the d(x, .).
rep = katetov_units(C8)
print("unit group order", rep.details["unit_group_order"], " check holds:", rep.holds)
print("d0 + 1 would need inverse", kuratowski(C8, 0).shift(-1), "which is not Katetov")
