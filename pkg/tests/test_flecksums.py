from fractions import Fraction

import pytest

from qfleck.bigpoly import ONE, ZERO, Poly
from qfleck.cyclotomic import cyclotomic
from qfleck.cycring import CycPoly, ctx_new, parse_cpoly, zeta_pow
from qfleck.flecksums import (
    SumSpec,
    alpha,
    beta,
    epsilon,
    factor_report,
    fleck_sum,
    g_sum,
    gaussian_closed_form,
    make_Rj,
    nonalternating_class_sum,
    predicted_exponents,
    predicted_product,
    q_sum,
    residual_R,
    round_nearest,
    xpoly,
    xpoly_shift,
)
from qfleck.qbinomial import qbinom

from conftest import P


def brute_class_sum(c, j, n, alternating=True):
    out = ZERO
    for m in range(n + 1):
        if m % c == j:
            sign = (-1) ** ((m - j) // c) if alternating else (-1) ** m
            out = out + qbinom(n, m) * sign
    return out


def test_xpoly_shift_examples():
    ctx = ctx_new(1)
    assert xpoly_shift(xpoly(ctx, "x"), 1) == xpoly(ctx, "x+1")
    assert xpoly_shift(xpoly(ctx, "x^2"), 1) == xpoly(ctx, "x^2+2x+1")
    p = xpoly(ctx_new(3), "(1+z)x^2-x")
    assert xpoly_shift(p, 0) == p


def test_xpoly_evaluates_in_ring():
    ctx = ctx_new(2)
    p = xpoly(ctx, "(1+z)*x+3")
    assert p(2) == ctx.elem((5, 2))


def test_q_sum_examples():
    assert q_sum(SumSpec(1, 2)) == CycPoly.embed(ctx_new(1), P("1-q"))
    assert q_sum(SumSpec(1, 1)).is_zero()
    assert q_sum(SumSpec(2, 2)) == parse_cpoly(ctx_new(2), "z(1+q)")


def test_fleck_sum_c4_j1_n7_direct_value():
    # computed independently by summing the two surviving terms [7,1] - [7,5]
    s = fleck_sum(SumSpec(4, 7, j=1))
    assert s == qbinom(7, 1) - qbinom(7, 5)
    assert s == brute_class_sum(4, 1, 7)
    assert s == -P("q^2") * cyclotomic(4) * cyclotomic(7)


def test_fleck_sum_table_row_one():
    s = fleck_sum(SumSpec(3, 8, j=1))
    rep = factor_report(s)
    assert rep.cyclo_exponents == {3: 1, 8: 1}
    assert s == -cyclotomic(3) * cyclotomic(8) * P("(q^3+q+1)(q^7+q^4+q^3+q-1)")


@pytest.mark.parametrize("n", range(0, 12))
def test_single_class_matches_full_sum(n):
    full = q_sum(SumSpec(1, n, P="x^2+1", l=1, z=2))
    cls = fleck_sum(SumSpec(1, n, P="x^2+1", l=1, z=2, j=0))
    assert CycPoly.embed(ctx_new(1), cls) == full


@pytest.mark.parametrize("c,n", [(c, n) for c in (2, 3, 4, 5) for n in range(0, 14)])
def test_class_sums_against_brute_force(c, n):
    for j in range(c):
        assert fleck_sum(SumSpec(c, n, j=j)) == brute_class_sum(c, j, n)
        assert nonalternating_class_sum(c, j, n) == brute_class_sum(c, j, n, alternating=False)


def test_nonalternating_examples():
    assert nonalternating_class_sum(4, 1, 7) == -cyclotomic(7) * P("q^4+q^2+2")
    assert nonalternating_class_sum(1, 0, 4) == P("(1-q)(1-q^3)")
    # m = 0 and m = 2 both contribute +1
    assert nonalternating_class_sum(2, 0, 2) == Poly.const(2)


def test_fleck_sum_with_ring_weight_stays_cyclotomic():
    s = fleck_sum(SumSpec(2, 5, P="z*x", j=1))
    assert isinstance(s, CycPoly)


def test_round_nearest_examples():
    assert round_nearest(Fraction(-3, 2)) == 0
    assert round_nearest(Fraction(3, 2)) == 2
    assert round_nearest(Fraction(4, 3)) == 1
    assert round_nearest(Fraction(1, 2)) == 1
    assert round_nearest(Fraction(49, 100)) == 0


def test_epsilon_examples():
    assert epsilon(3, 0, 0, 8) == 1
    assert epsilon(9, 0, 0, 8) == 0
    assert epsilon(1, 0, 0, 4) == 2


def test_predicted_product_examples():
    assert predicted_product(1, 0, 0, 4) == P("(q-1)^2(q^2+q+1)")
    assert predicted_product(1, 0, 0, 2) == P("q-1")
    for c in (1, 2, 3):
        assert predicted_product(c, 1, 2, 0) == ONE
    assert predicted_exponents(4, 0, 0, 7) == {4: 1}


def test_residual_examples():
    one = CycPoly.embed(ctx_new(1), ONE)
    assert residual_R(SumSpec(1, 4)) == one
    assert residual_R(SumSpec(1, 2)) == -one
    for n in (1, 3, 9):
        assert residual_R(SumSpec(1, n)).is_zero()


def test_alpha_beta_examples():
    assert alpha(3, 9) == 1
    assert alpha(3, 6) == 0
    assert beta(3, 10) == 1
    assert alpha(3, 10) == 1
    assert beta(3, 9) == 0


def test_make_Rj_examples():
    assert make_Rj(1, 1) == Poly((0, 1))
    assert make_Rj(2, 1) == Poly((0, 2))
    assert make_Rj(2, 2) == Poly((0, -1, 1))
    with pytest.raises(ValueError):
        make_Rj(2, 3)


def test_gaussian_closed_form_examples():
    assert gaussian_closed_form(2) == P("1-q")
    assert gaussian_closed_form(4) == P("(1-q)(1-q^3)")
    assert gaussian_closed_form(7) == ZERO


def test_g_sum_examples():
    for c in (1, 2, 3):
        assert g_sum(c, 0, P="x+1", z=1, l=1, n=6) == q_sum(SumSpec(c, 6, P="x+1", l=1, z=1))
    assert g_sum(1, 0, n=2) == CycPoly.embed(ctx_new(1), P("1-q"))
    assert g_sum(2, 1, n=2) == parse_cpoly(ctx_new(2), "-z(1+q)")


def test_factor_report_examples():
    rep = factor_report(P("q^2") * cyclotomic(4) * cyclotomic(7))
    assert (rep.unit, rep.qpower, rep.cyclo_exponents, rep.residual) == (1, 2, {4: 1, 7: 1}, ONE)
    rep = factor_report(P("(1-q)(1-q^3)"))
    assert (rep.unit, rep.qpower, rep.cyclo_exponents, rep.residual) == (1, 0, {1: 2, 3: 1}, ONE)
    rep = factor_report(P("q^3+q+1"))
    assert (rep.unit, rep.qpower, rep.cyclo_exponents, rep.residual) == (1, 0, {}, P("q^3+q+1"))


def test_factor_report_reconstructs():
    for c, n, j in [(3, 8, 1), (5, 12, 2), (4, 9, 0)]:
        s = fleck_sum(SumSpec(c, n, j=j))
        rep = factor_report(s, predicted_exponents(c, 0, 0, n))
        assert rep.reconstruct() == s
        assert rep.meets_prediction()


def test_factor_report_ring_input():
    s = q_sum(SumSpec(2, 6, P="(1+z)x"))
    rep = factor_report(s)
    assert rep.reconstruct() == s


def test_factor_report_finds_large_index():
    # phi(m) small relative to m: 2*3*5*7 has totient 48
    p = cyclotomic(210) * P("q+3")
    assert factor_report(p).cyclo_exponents == {210: 1}


def test_spec_validation():
    with pytest.raises(ValueError):
        SumSpec(0, 3)
    with pytest.raises(ValueError):
        SumSpec(3, 3, j=3)
    with pytest.raises(ValueError):
        SumSpec(3, -1)
