import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from infconv import INF
from infconv.core import attainment, inf_conv, n_fold_conv, verify_fond0
from infconv.fnspace import FnOnX, is_lip1, kuratowski, random_lip1
from infconv.magma import (
    FiniteMetricMagma,
    cyclic_distance,
    cyclic_group,
    dihedral_group,
    discrete_metric,
    left_projection,
    nonassociative_loop5,
    subtraction_quasigroup,
)
from infconv.report import HOLDS, HYPOTHESIS_UNMET
from oracles import table_conv, unique_argmin

F = Fraction


def test_kuratowski_product_example():
    Z3 = cyclic_group(3)
    assert inf_conv(Z3, kuratowski(Z3, 1), kuratowski(Z3, 2)) == FnOnX.of(0, 1, 1)


def test_identity_and_zero():
    rng = random.Random(1)
    for M in (cyclic_group(5), dihedral_group(3)):
        e = kuratowski(M, M.identity)
        for _ in range(20):
            f = random_lip1(M, rng)
            f = f.shift(-f.minimum())
            assert inf_conv(M, e, f) == f == inf_conv(M, f, e)
            assert inf_conv(M, f, FnOnX.constant(M.n, 0)) == FnOnX.constant(M.n, f.minimum())


def test_empty_fiber_gives_inf():
    M = FiniteMetricMagma(((0, 0), (0, 0)), discrete_metric(2))
    h = inf_conv(M, FnOnX.of(0, 1), FnOnX.of(1, 0))
    assert h == FnOnX.of(0, INF)
    rep = attainment(M, FnOnX.of(0, 1), FnOnX.of(1, 0), 1)
    assert rep.value == INF and rep.minimizing_pairs == () and not rep.strongly_attained


def test_attainment_examples():
    Z3 = cyclic_group(3)
    rep = attainment(Z3, kuratowski(Z3, 1), kuratowski(Z3, 2), 0)
    assert rep.minimizing_pairs == ((1, 2),) and rep.strongly_attained and rep.value == 0
    Z2 = cyclic_group(2)
    rep = attainment(Z2, FnOnX.constant(2, 0), FnOnX.constant(2, 0), 0)
    assert set(rep.minimizing_pairs) == {(0, 0), (1, 1)} and not rep.strongly_attained


def test_strong_min_equivalence_worked_example():
    Z3 = cyclic_group(3)
    f, g = FnOnX.of(2, 1, 2), FnOnX.of(1, 1, 0)
    # frozen from the brute-force table oracle
    assert table_conv(Z3.law, f.values, g.values) == [1, 2, 2]
    rep = verify_fond0(Z3, f, g)
    assert rep.convolution == FnOnX.of(1, 2, 2)
    assert rep.direction_I == 0 and rep.direction_II == (1, 2)
    assert rep.equivalence_holds and rep.consequence1_holds and rep.consequence2_holds
    assert rep.status == HOLDS


def test_strong_min_equivalence_tied_minima():
    Z3 = cyclic_group(3)
    f = FnOnX.of(0, 0, 1)
    rep = verify_fond0(Z3, f, kuratowski(Z3, 0))
    assert rep.direction_I is None and rep.direction_II is None
    assert rep.equivalence_holds and rep.status == HOLDS
    assert rep.consequence1_holds is None and rep.consequence2_holds is None


def test_strong_min_equivalence_on_noninvariant_law():
    M = left_projection(3)
    rep = verify_fond0(M, FnOnX.of(0, 1, 1), FnOnX.of(1, 0, 1))
    assert rep.status == HYPOTHESIS_UNMET


def test_n_fold_examples():
    Z5 = cyclic_group(5)
    d = [kuratowski(Z5, k) for k in range(5)]
    assert n_fold_conv(Z5, [d[3]]) == d[3]
    assert n_fold_conv(Z5, d[:3], "left") == n_fold_conv(Z5, d[:3], "right") == d[3]
    Q = subtraction_quasigroup(5)
    dq = [kuratowski(Q, k) for k in range(3)]
    assert n_fold_conv(Q, dq, "left") == kuratowski(Q, 2)
    assert n_fold_conv(Q, dq, "right") == kuratowski(Q, 1)
    assert n_fold_conv(Q, dq, ((0, 1), 2)) == kuratowski(Q, 2)
    assert n_fold_conv(Q, dq, (0, (1, 2))) == kuratowski(Q, 1)


carriers = st.sampled_from(
    [
        cyclic_group(4),
        cyclic_group(5, cyclic_distance(5)),
        dihedral_group(3),
        subtraction_quasigroup(5),
        nonassociative_loop5(),
        left_projection(3),
        FiniteMetricMagma(((0, 0, 1), (0, 0, 1), (2, 2, 2)), discrete_metric(3)),
    ]
)
values = st.one_of(st.fractions(min_value=-3, max_value=3, max_denominator=6), st.just(INF))


@st.composite
def fn_pairs(draw):
    M = draw(carriers)
    f = draw(st.lists(values, min_size=M.n, max_size=M.n).filter(lambda v: any(x != INF for x in v)))
    g = draw(st.lists(values, min_size=M.n, max_size=M.n).filter(lambda v: any(x != INF for x in v)))
    return M, FnOnX(tuple(f)), FnOnX(tuple(g))


@settings(max_examples=400, deadline=None)
@given(fn_pairs())
def test_inf_conv_matches_table_oracle(data):
    M, f, g = data
    assert list(inf_conv(M, f, g).values) == table_conv(M.law, f.values, g.values)


@settings(max_examples=200, deadline=None)
@given(fn_pairs(), st.fractions(-2, 2, max_denominator=4), st.fractions(-2, 2, max_denominator=4), st.fractions(0, 1, max_denominator=4))
def test_monotone_and_constant_shifts(data, c1, c2, bump):
    M, f, g = data
    h = inf_conv(M, f, g)
    shifted = inf_conv(M, f.shift(c1), g.shift(c2))
    assert shifted == h.shift(c1 + c2)
    bigger = inf_conv(M, f.shift(bump), g)
    assert h.pointwise_le(bigger)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([cyclic_group(4), cyclic_group(5, cyclic_distance(5)), dihedral_group(3)]), st.integers(0, 10**6))
def test_lipschitz_closure_and_strong_min_equivalence_on_groups(M, seed):
    rng = random.Random(seed)
    f, g = random_lip1(M, rng), random_lip1(M, rng)
    h = inf_conv(M, f, g)
    assert is_lip1(M, h)
    rep = verify_fond0(M, f, g)
    assert rep.status == HOLDS and rep.equivalence_holds
    sf, sg, sh = unique_argmin(f.values), unique_argmin(g.values), unique_argmin(h.values)
    if sf is not None and sg is not None:
        assert sh == M.op(sf, sg)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([subtraction_quasigroup(5), nonassociative_loop5(), cyclic_group(5)]), st.integers(0, 4), st.integers(0, 4))
def test_kuratowski_products_on_quasigroups(M, a, b):
    assert inf_conv(M, kuratowski(M, a), kuratowski(M, b)) == kuratowski(M, M.op(a, b))
