import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from infconv import HypothesisUnmet, InvariantViolation
from infconv.core import inf_conv
from infconv.fnspace import FnOnX, is_katetov, kuratowski, random_katetov, random_lip1, strong_min
from infconv.magma import (
    cyclic_distance,
    cyclic_group,
    dihedral_group,
    left_projection,
    nonassociative_loop5,
    subtraction_quasigroup,
)
from infconv.monoid import (
    argmin_morphism,
    argmin_sweep,
    cancellation_search,
    canonical_iso,
    factorization_witness,
    is_unit,
    kuratowski_closure,
    verify_int2,
)
from infconv.report import HYPOTHESIS_UNMET
from oracles import table_conv

F = Fraction


def test_unit_examples():
    Z5 = cyclic_group(5)
    cert = is_unit(Z5, kuratowski(Z5, 2).shift(F(3, 4)))
    assert (cert.base, cert.shift) == (2, F(3, 4))
    assert cert.inverse == kuratowski(Z5, 3).shift(F(-3, 4))
    assert inf_conv(Z5, kuratowski(Z5, 2).shift(F(3, 4)), cert.inverse) == kuratowski(Z5, 0)
    Z2 = cyclic_group(2)
    assert is_unit(Z2, FnOnX.constant(2, 0)) is None
    cert = is_unit(Z2, kuratowski(Z2, 0))
    assert (cert.base, cert.shift) == (0, 0) and cert.inverse == kuratowski(Z2, 0)


def test_positive_units_are_unshifted():
    Z5 = cyclic_group(5)
    assert is_unit(Z5, kuratowski(Z5, 1), positive=True) is not None
    assert is_unit(Z5, kuratowski(Z5, 1).shift(1), positive=True) is None
    assert is_unit(Z5, kuratowski(Z5, 1).shift(1)) is not None


def test_unit_requires_invariant_group():
    with pytest.raises(HypothesisUnmet):
        is_unit(subtraction_quasigroup(5), FnOnX.constant(5, 0))


def test_units_compose():
    rng = random.Random(5)
    for M in (cyclic_group(5, cyclic_distance(5)), dihedral_group(4)):
        for _ in range(30):
            y1, y2 = rng.randrange(M.n), rng.randrange(M.n)
            c1, c2 = F(rng.randint(-8, 8), 4), F(rng.randint(-8, 8), 4)
            f1, f2 = kuratowski(M, y1).shift(c1), kuratowski(M, y2).shift(c2)
            cert = is_unit(M, inf_conv(M, f1, f2))
            assert (cert.base, cert.shift) == (M.op(y1, y2), c1 + c2)


def test_closure_examples():
    for M in (cyclic_group(6), subtraction_quasigroup(5), dihedral_group(4), nonassociative_loop5()):
        rep = kuratowski_closure(M)
        assert rep.holds and rep.checked == M.n**2 + 1 and rep.details["closed"]
    assert "noncommuting_pair" not in kuratowski_closure(cyclic_group(6)).details
    a, b = kuratowski_closure(dihedral_group(4)).details["noncommuting_pair"]
    D = dihedral_group(4)
    assert inf_conv(D, kuratowski(D, a), kuratowski(D, b)) != inf_conv(D, kuratowski(D, b), kuratowski(D, a))
    assert kuratowski_closure(left_projection(3)).status == HYPOTHESIS_UNMET


def test_monoid_probe_examples():
    rep = verify_int2(cyclic_group(7))
    assert rep.holds and rep.details["consistent_with_theorem"]
    rep = verify_int2(subtraction_quasigroup(5))
    assert not rep.holds and rep.details["consistent_with_theorem"]
    Q = subtraction_quasigroup(5)
    hit = [c for c in rep.counterexamples if c["triple"] == [0, 1, 2]]
    assert hit and hit[0]["left"] == kuratowski(Q, 2) and hit[0]["right"] == kuratowski(Q, 1)
    rep = verify_int2(nonassociative_loop5())
    assert not rep.holds and rep.counterexamples
    assert verify_int2(left_projection(3)).status == HYPOTHESIS_UNMET


def test_associativity_counterexamples_recheck_through_oracle():
    for M in (subtraction_quasigroup(5), nonassociative_loop5()):
        for c in verify_int2(M).counterexamples:
            a, b, t = (kuratowski(M, i).values for i in c["triple"])
            left = table_conv(M.law, table_conv(M.law, a, b), t)
            right = table_conv(M.law, a, table_conv(M.law, b, t))
            assert left != right
            assert left == list(c["left"].values) and right == list(c["right"].values)


def test_argmin_examples():
    Z3 = cyclic_group(3)
    rep = argmin_morphism(Z3, kuratowski(Z3, 1).shift(1), kuratowski(Z3, 2))
    assert rep.holds and rep.pairs_checked == 1
    D = dihedral_group(4)
    gam = [kuratowski(D, x) for x in range(8)]
    assert argmin_sweep(D, gam).holds
    for a, b in itertools.product(range(8), repeat=2):
        assert strong_min(inf_conv(D, gam[a], gam[b])) == D.op(a, b)
    Z6 = cyclic_group(6)
    rep = argmin_morphism(Z6, kuratowski(Z6, 4).shift(F(1, 2)), kuratowski(Z6, 5), (cyclic_group(3), [k % 3 for k in range(6)]))
    assert rep.holds
    with pytest.raises(InvariantViolation):
        argmin_morphism(Z3, FnOnX.constant(3, 0), kuratowski(Z3, 0))
    with pytest.raises(InvariantViolation):
        argmin_morphism(Z6, kuratowski(Z6, 0), kuratowski(Z6, 1), (cyclic_group(3), [0, 1, 1, 0, 1, 2]))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), st.fractions(0, 3, max_denominator=4))
def test_argmin_shift_invariance(seed, c):
    M = cyclic_group(5, cyclic_distance(5))
    rng = random.Random(seed)
    fs = [random_lip1(M, rng) for _ in range(2)]
    fs = [f for f in fs if strong_min(f) is not None]
    if len(fs) < 2:
        return
    f, g = fs
    assert argmin_morphism(M, f, g).holds and argmin_morphism(M, f.shift(c), g).holds


def test_canonical_iso_examples():
    Z5 = cyclic_group(5)
    T = [2 * k % 5 for k in range(5)]
    phi, rep = canonical_iso(Z5, Z5, T)
    assert rep.holds
    assert all(phi(kuratowski(Z5, x)) == kuratowski(Z5, T[x]) for x in range(5))
    phi, rep = canonical_iso(Z5, Z5, range(5))
    f = random_katetov(Z5, random.Random(0))
    assert rep.holds and phi(f) == f
    Z8 = cyclic_group(8)
    rng = random.Random(8)
    pair = [random_katetov(Z8, rng) for _ in range(2)]
    phi, rep = canonical_iso(Z8, Z8, [3 * k % 8 for k in range(8)], suite=pair)
    assert rep.holds
    assert phi(inf_conv(Z8, *pair)) == inf_conv(Z8, phi(pair[0]), phi(pair[1]))
    assert all(is_katetov(Z8, phi(f)) for f in pair)


def test_canonical_iso_rejections():
    C5 = cyclic_group(5, cyclic_distance(5))
    with pytest.raises(InvariantViolation, match="isometry"):
        canonical_iso(C5, C5, [2 * k % 5 for k in range(5)])
    Z5 = cyclic_group(5)
    with pytest.raises(InvariantViolation, match="homomorphism"):
        canonical_iso(Z5, Z5, [0, 2, 1, 3, 4])
    with pytest.raises(InvariantViolation, match="bijection"):
        canonical_iso(Z5, Z5, [0, 0, 1, 2, 3])


def test_cancellation_examples():
    Z3 = cyclic_group(3)
    f, h, g = cancellation_search(Z3, (0, 1))
    assert f != h and inf_conv(Z3, f, g) == inf_conv(Z3, h, g)
    assert table_conv(Z3.law, f.values, g.values) == table_conv(Z3.law, h.values, g.values)
    assert cancellation_search(Z3, (0,)) is None
    # the pair named as an example: delta_0 against (0, 1, 0) with g = 0
    zero = FnOnX.constant(3, 0)
    assert inf_conv(Z3, kuratowski(Z3, 0), zero) == inf_conv(Z3, FnOnX.of(0, 1, 0), zero)


def test_factorization_examples():
    Z5 = cyclic_group(5)
    phi, psi, rep = factorization_witness(Z5, kuratowski(Z5, 0), 1, 2)
    assert rep.holds
    assert phi == kuratowski(Z5, 3) and psi == kuratowski(Z5, 2)
    assert phi[1] + psi[2] == 1 == kuratowski(Z5, 0)[3]
    f = random_katetov(Z5, random.Random(2))
    phi, psi, rep = factorization_witness(Z5, f, 3, 0)
    assert rep.holds and phi == f and psi == kuratowski(Z5, 0)
    with pytest.raises(InvariantViolation):
        factorization_witness(Z5, FnOnX.constant(5, 0), 1, 1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([cyclic_group(6, cyclic_distance(6)), dihedral_group(3)]), st.integers(0, 10**6))
def test_factorization_random(M, seed):
    rng = random.Random(seed)
    f = random_katetov(M, rng)
    _, _, rep = factorization_witness(M, f, rng.randrange(M.n), rng.randrange(M.n))
    assert rep.holds
