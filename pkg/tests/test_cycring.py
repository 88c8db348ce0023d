import pickle

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qfleck.bigpoly import Poly
from qfleck.cyclotomic import cyclotomic
from qfleck.cycring import (
    CycElem,
    CycPoly,
    cpoly_derivative,
    cpoly_divexact_int,
    cpoly_phi_valuation,
    cpoly_to_bigpoly,
    ctx_new,
    elem_mul,
    format_cpoly,
    parse_cpoly,
    zeta_pow,
)
from qfleck.errors import CtxMismatch, NotDivisible, NotRational

from conftest import P


def cp(c, text):
    return parse_cpoly(ctx_new(c), text)


def test_ctx_examples():
    assert ctx_new(1).reduction == P("q+1") and ctx_new(1).dim == 1
    assert ctx_new(2).reduction == P("q^2+1") and ctx_new(2).dim == 2
    assert ctx_new(3).reduction == P("q^2-q+1") and ctx_new(3).dim == 2
    assert ctx_new(4).dim == 4


def test_zeta_pow_examples():
    assert zeta_pow(ctx_new(2), 2) == ctx_new(2).elem(-1)
    for c in (1, 2, 3, 4):
        assert zeta_pow(ctx_new(c), c) == ctx_new(c).elem(-1)
        assert zeta_pow(ctx_new(c), 2 * c) == ctx_new(c).one()
        assert zeta_pow(ctx_new(c), -1) * zeta_pow(ctx_new(c), 1) == ctx_new(c).one()
    assert zeta_pow(ctx_new(3), 1).coords == (0, 1)


def test_elem_mul_examples():
    z4 = zeta_pow(ctx_new(2), 1)
    assert elem_mul(z4, z4) == ctx_new(2).elem(-1)
    a = ctx_new(3).elem((2, -5))
    assert elem_mul(a, ctx_new(3).one()) == a
    z6 = zeta_pow(ctx_new(3), 1)
    assert elem_mul(z6, z6).coords == (-1, 1)


def test_ctx_mismatch():
    with pytest.raises(CtxMismatch):
        zeta_pow(ctx_new(2), 1) * zeta_pow(ctx_new(3), 1)


def test_cpoly_examples():
    assert cp(2, "1+z*q") + cp(2, "1-z*q") == cp(2, "2")
    assert cpoly_derivative(cp(3, "z+4")) == CycPoly(ctx_new(3), [])
    assert cp(2, "z(1+q)") * zeta_pow(ctx_new(2), 1) == cp(2, "-(1+q)")


def test_cpoly_divexact_examples():
    assert cpoly_divexact_int(cp(2, "z(1+q)"), P("q+1")) == cp(2, "z")
    assert cpoly_divexact_int(cp(3, "0"), cyclotomic(3)) == cp(3, "0")
    with pytest.raises(NotDivisible):
        cpoly_divexact_int(cp(2, "z*q+1"), P("q+1"))


def test_cpoly_valuation_examples():
    assert cpoly_phi_valuation(cp(2, "z(1+q)"), 2) == 1
    assert cpoly_phi_valuation(cp(4, "z^3+2"), 5) == 0
    for c in (1, 2, 3):
        assert cpoly_phi_valuation(CycPoly.embed(ctx_new(c), cyclotomic(3) ** 2), 3) == 2


def test_to_bigpoly_examples():
    p = P("q^5-3q+2")
    for c in (1, 2, 3, 4):
        assert cpoly_to_bigpoly(CycPoly.embed(ctx_new(c), p)) == p
    with pytest.raises(NotRational):
        cpoly_to_bigpoly(cp(2, "z"))
    assert cpoly_to_bigpoly(cp(1, "z*q+3")) == P("-q+3")


def test_format_round_trip_and_pickle():
    a = cp(3, "(z+1)*q^2+z*q+2")
    assert format_cpoly(a) == "(z+1)*q^2+z*q+2"
    assert parse_cpoly(ctx_new(3), format_cpoly(a)) == a
    assert pickle.loads(pickle.dumps(a)) == a


elems = st.lists(st.integers(-5, 5), min_size=4, max_size=4)


@given(elems, elems, elems)
def test_ring_axioms_c4(x, y, w):
    ctx = ctx_new(4)
    a, b, c = CycElem(ctx, x), CycElem(ctx, y), CycElem(ctx, w)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(st.lists(elems, max_size=6), st.lists(st.integers(-3, 3), max_size=5))
def test_divexact_round_trip(coeffs, low):
    ctx = ctx_new(4)
    a = CycPoly.from_coeffs(ctx, [CycElem(ctx, w) for w in coeffs])
    b = Poly(low + [1])
    assert cpoly_divexact_int(a * b, b) == a
