"""Cyclotomic polynomials Phi_n(q) and Phi-adic valuations."""
from __future__ import annotations

from functools import lru_cache

from .bigpoly import ONE, Poly, divexact, divmod_monic
from .errors import ZeroPolynomial


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    """Euler's totient by trial factorization."""
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def totients_upto(limit: int) -> list[int]:
    """phi(0..limit) by sieve; phi(0) is reported as 0."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:
            for k in range(p, limit + 1, p):
                phi[k] -= phi[k] // p
    return phi


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# lru_cache serializes nothing but values are deterministic, so a duplicate
# computation under concurrent first access is harmless.
@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """The monic n-th cyclotomic polynomial, as (q^n - 1) divided by Phi_d for proper divisors d."""
    if n < 1:
        raise ValueError("cyclotomic needs n >= 1")
    num = Poly((-1,) + (0,) * (n - 1) + (1,))
    den = ONE
    for d in divisors(n)[:-1]:
        den = den * cyclotomic(d)
    return divexact(num, den)


def phi_valuation(p: Poly, m: int) -> int:
    """Largest e with Phi_m(q)^e dividing p."""
    if not p:
        raise ZeroPolynomial("valuation of the zero polynomial is undefined")
    phi = cyclotomic(m)
    e = 0
    while p.degree >= phi.degree:
        quot, rem = divmod_monic(p, phi)
        if rem:
            break
        p = quot
        e += 1
    return e
