import pytest

from qfleck.bigpoly import ONE, ZERO
from qfleck.qbinomial import int_binom, qbinom, qbinom_deriv, qbinom_product

from conftest import P


def test_qbinom_examples():
    assert qbinom(9, 0) == ONE
    assert qbinom(2, 1) == P("1+q")
    assert qbinom(4, 2) == P("1+q+2q^2+q^3+q^4")
    assert qbinom(4, 5) == ZERO
    assert qbinom(4, -1) == ZERO
    with pytest.raises(ValueError):
        qbinom(-1, 0)


def test_qbinom_deriv_examples():
    assert qbinom_deriv(6, 3, 0) == qbinom(6, 3)
    assert qbinom_deriv(2, 1, 1) == ONE
    assert qbinom_deriv(4, 2, 1) == P("1+4q+3q^2+4q^3")


def test_int_binom_examples():
    assert int_binom(5, 3) == 10
    assert int_binom(4, -1) == 0
    for n in range(21):
        for m in range(n + 1):
            assert int_binom(n, m) == qbinom(n, m)(1)


@pytest.mark.parametrize("n", range(0, 31))
def test_recursion_matches_product_oracle(n):
    for m in range(n + 1):
        assert qbinom(n, m) == qbinom_product(n, m)


def test_symmetry_and_degree():
    for n in range(25):
        for m in range(n + 1):
            assert qbinom(n, m) == qbinom(n, n - m)
            assert qbinom(n, m).degree == m * (n - m)
