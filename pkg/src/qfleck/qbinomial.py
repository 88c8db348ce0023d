"""Gaussian binomial coefficients, their q-derivatives, and ordinary binomials."""
from __future__ import annotations

import threading
from functools import lru_cache
from math import comb

from .bigpoly import ONE, ZERO, Poly, divexact, shift

# _rows[n][m] holds qbinom(n, m) for 0 <= m <= n // 2; the rest follows by symmetry.
_rows: list[list[Poly]] = [[ONE]]
_lock = threading.Lock()


def _get(n: int, m: int) -> Poly:
    if m < 0 or m > n:
        return ZERO
    return _rows[n][min(m, n - m)]


def _extend(n: int) -> None:
    with _lock:
        while len(_rows) <= n:
            k = len(_rows)
            # Pascal recursion: [k, m] = q^m [k-1, m] + [k-1, m-1]
            _rows.append([shift(_get(k - 1, m), m) + _get(k - 1, m - 1) for m in range(k // 2 + 1)])


def qbinom(n: int, m: int) -> Poly:
    """The Gaussian binomial [n choose m]_q; zero when m is out of range."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m < 0 or m > n:
        return ZERO
    if len(_rows) <= n:
        _extend(n)
    return _get(n, m)


@lru_cache(maxsize=None)
def qbinom_deriv(n: int, m: int, l: int) -> Poly:
    """l-th q-derivative of qbinom(n, m)."""
    return qbinom(n, m).derivative(l)


def int_binom(n: int, m: int) -> int:
    if m < 0 or m > n:
        return 0
    return comb(n, m)


def qbinom_product(n: int, m: int) -> Poly:
    """Oracle: the defining quotient prod(1 - q^(n-i)) / prod(1 - q^(m-i)), by exact division."""
    if m < 0 or m > n:
        return ZERO
    num, den = ONE, ONE
    for i in range(m):
        num = num * (ONE - Poly.monomial(1, n - i))
        den = den * (ONE - Poly.monomial(1, m - i))
    return divexact(num, den)
