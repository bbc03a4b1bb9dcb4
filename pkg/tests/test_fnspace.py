import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from infconv import INF, InvariantViolation
from infconv.fnspace import (
    FnOnX,
    d_inf,
    grid_functions,
    is_katetov,
    is_lip1,
    is_positive,
    kuratowski,
    perturb_to_strong_min,
    random_katetov,
    random_lip1,
    rho,
    rho_tilde,
    strong_min,
)
from infconv.magma import cyclic_distance, cyclic_group, dihedral_group
from oracles import katetov, lip1, unique_argmin

F = Fraction


def test_kuratowski_examples():
    Z3 = cyclic_group(3)
    assert kuratowski(Z3, 1) == FnOnX.of(1, 0, 1)
    for M in (Z3, dihedral_group(4), cyclic_group(6, cyclic_distance(6))):
        for a in range(M.n):
            assert kuratowski(M, a)[a] == 0
            for b in range(M.n):
                assert d_inf(kuratowski(M, a), kuratowski(M, b)) == M.d(a, b)


def test_membership_examples():
    Z3 = cyclic_group(3)
    d1 = kuratowski(Z3, 1)
    assert is_lip1(Z3, d1) and is_positive(d1) and is_katetov(Z3, d1)
    zero = FnOnX.constant(3, 0)
    assert is_lip1(Z3, zero) and not is_katetov(Z3, zero)
    assert not is_lip1(cyclic_group(2), FnOnX.of(0, 2))
    assert not is_lip1(Z3, FnOnX.of(0, INF, 0))


def test_metric_examples():
    f, g = FnOnX.constant(3, 0), FnOnX.constant(3, 1)
    assert d_inf(f, g) == 1 and rho(f, g) == F(1, 2)
    assert rho(f, f) == 0
    assert rho_tilde(FnOnX.of(0, 1), FnOnX.of(2, 2)) == F(5, 2)


def test_d_inf_with_infinite_entries():
    assert d_inf(FnOnX.of(0, INF), FnOnX.of(1, INF)) == 1
    assert d_inf(FnOnX.of(0, INF), FnOnX.of(1, 2)) == INF
    with pytest.raises(InvariantViolation):
        rho(FnOnX.of(0, INF), FnOnX.of(1, 2))


def test_strong_min_examples():
    assert strong_min(kuratowski(cyclic_group(4), 3)) == 3
    assert strong_min(FnOnX.constant(3, 1)) is None
    assert strong_min(FnOnX.of(1, F(1, 2), 2)) == 1


def test_perturbation_examples():
    Z3 = cyclic_group(3)
    out = perturb_to_strong_min(Z3, FnOnX.constant(3, 0), 0, F(1, 4))
    assert out == FnOnX.of(0, F(1, 4), F(1, 4))
    d2 = kuratowski(Z3, 2)
    for eps in (F(1, 2), F(1, 3)):
        assert perturb_to_strong_min(Z3, d2, 2, eps) == d2
    with pytest.raises(InvariantViolation):
        perturb_to_strong_min(Z3, FnOnX.of(0, 1, 1), 1, F(1, 2))
    with pytest.raises(InvariantViolation):
        perturb_to_strong_min(Z3, FnOnX.of(0, 1, 1), 0, F(1))


def test_fnonx_rejects_empty_domain():
    with pytest.raises(InvariantViolation):
        FnOnX.of(INF, INF)
    with pytest.raises(Exception):
        FnOnX.of(0.5, 1)


carriers = st.sampled_from([cyclic_group(4), cyclic_group(5, cyclic_distance(5)), dihedral_group(3)])


@settings(max_examples=200, deadline=None)
@given(carriers, st.integers(0, 10**6))
def test_predicates_match_oracle(M, seed):
    rng = random.Random(seed)
    f = FnOnX(tuple(F(rng.randint(0, 8), 4) for _ in range(M.n)))
    assert is_lip1(M, f) == lip1(M.metric, f.values)
    assert is_katetov(M, f) == katetov(M.metric, f.values)
    assert strong_min(f) == unique_argmin(f.values)
    if is_katetov(M, f):
        assert is_lip1(M, f) and is_positive(f)


@settings(max_examples=200, deadline=None)
@given(carriers, st.integers(0, 10**6))
def test_rho_properties(M, seed):
    rng = random.Random(seed)
    f, g, h = (random_lip1(M, rng) for _ in range(3))
    assert 0 <= rho(f, g) < 1
    assert rho(f, g) == rho(g, f)
    assert rho(f, h) <= rho(f, g) + rho(g, h)
    assert rho(f, g) <= d_inf(f, g)
    assert (rho(f, g) == 0) == (f == g)
    assert rho_tilde(f, g) >= abs(f.minimum() - g.minimum())


@settings(max_examples=200, deadline=None)
@given(carriers, st.integers(0, 10**6), st.sampled_from([F(1, 2), F(1, 4), F(1, 8), F(2, 3)]))
def test_perturbation_properties(M, seed, eps):
    rng = random.Random(seed)
    f = random_lip1(M, rng)
    xstar = rng.choice(f.argmin())
    out = perturb_to_strong_min(M, f, xstar, eps)
    assert is_lip1(M, out)
    assert strong_min(out) == xstar
    assert d_inf(out, f) == eps * d_inf(kuratowski(M, xstar), f)
    if is_positive(f):
        assert is_positive(out)


@settings(max_examples=100, deadline=None)
@given(carriers, st.integers(0, 10**6))
def test_random_katetov_generator(M, seed):
    f = random_katetov(M, random.Random(seed))
    assert katetov(M.metric, f.values)


def test_grid_functions_count():
    assert len(list(grid_functions(3, (0, 1)))) == 8


def test_json_roundtrip():
    f = FnOnX.of(F(-1, 3), INF, 2)
    assert f.to_json() == {"n": 3, "values": ["-1/3", "+inf", "2"]}
    assert FnOnX(tuple(f.to_json()["values"])) == f
