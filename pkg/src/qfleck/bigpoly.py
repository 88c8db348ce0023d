"""
Dense integer polynomials.

A polynomial is stored as a tuple of Python ints in ascending degree order, so
``1 - 2q + q^3`` is ``Poly((1, -2, 0, 1))``.  Trailing zeros are stripped and the
zero polynomial is the empty tuple; its degree is ``NEG_INF``.

>>> Poly((1, 1)) * Poly((-1, 1))
Poly('q^2-1')
"""
from __future__ import annotations

from math import comb
from typing import Iterable

from ._parse import parse_bivariate
from .errors import NonMonicDivisor, NotDivisible, PolyParseError

NEG_INF = float("-inf")

# Below this length (of the shorter factor) schoolbook beats Kronecker packing.
KRONECKER_THRESHOLD = 12


def _strip(coeffs) -> tuple:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, e: int) -> "Poly":
        return cls((0,) * e + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def low_degree(self) -> int:
        """Exponent of the largest power of q dividing self (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(c * other for c in self.coeffs) if other else ZERO
        if not isinstance(other, Poly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        return eval_int(self, x)

    def derivative(self, l: int = 1) -> "Poly":
        return derivative(self, l)

    def shift(self, s: int) -> "Poly":
        return shift(self, s)

    def taylor_shift(self, t: int) -> "Poly":
        """The polynomial x -> self(x + t)."""
        a = self.coeffs
        return Poly(
            sum(a[i] * comb(i, k) * t ** (i - k) for i in range(k, len(a)))
            for k in range(len(a))
        )


ZERO = Poly()
ONE = Poly((1,))
Q = Poly((0, 1))


def add(a: Poly, b: Poly) -> Poly:
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    out = list(x)
    for i, c in enumerate(y):
        out[i] += c
    return Poly(out)


def _mul_schoolbook(x, y) -> list:
    out = [0] * (len(x) + len(y) - 1)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                out[i + j] += a * b
    return out


def _mul_kronecker(x, y) -> list:
    # Pack both operands into big integers at base 2**bits, multiply once, unpack
    # with signed digits.  bits must exceed the largest product coefficient.
    bound = min(len(x), len(y)) * max(abs(c) for c in x) * max(abs(c) for c in y)
    bits = bound.bit_length() + 2
    X = sum(c << (bits * i) for i, c in enumerate(x))
    Y = sum(c << (bits * i) for i, c in enumerate(y))
    Z = X * Y
    n = len(x) + len(y) - 1
    out = [0] * n
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    for i in range(n):
        d = Z & mask
        if d >= half:
            d -= 1 << bits
        out[i] = d
        Z = (Z - d) >> bits
    return out


def mul(a: Poly, b: Poly) -> Poly:
    if not a.coeffs or not b.coeffs:
        return ZERO
    x, y = a.coeffs, b.coeffs
    if min(len(x), len(y)) < KRONECKER_THRESHOLD:
        return Poly(_mul_schoolbook(x, y))
    return Poly(_mul_kronecker(x, y))


def derivative(a: Poly, l: int = 1) -> Poly:
    """l-fold formal derivative; ``derivative(a, 0) == a``."""
    if l < 0:
        raise ValueError("derivative order must be nonnegative")
    if l == 0:
        return a
    c = a.coeffs
    out = []
    for i in range(l, len(c)):
        f = 1
        for t in range(i - l + 1, i + 1):
            f *= t
        out.append(c[i] * f)
    return Poly(out)


def shift(a: Poly, s: int) -> Poly:
    """Multiply by q**s."""
    if s < 0:
        raise ValueError("shift must be nonnegative")
    if not a.coeffs or s == 0:
        return a
    return Poly((0,) * s + a.coeffs)


def eval_int(a: Poly, x: int) -> int:
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def divmod_monic(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Long division by a monic divisor: returns (quotient, remainder) with a = b*quotient + remainder."""
    if not b.coeffs or b.coeffs[-1] != 1:
        raise NonMonicDivisor(f"divisor {b} is not monic")
    r = list(a.coeffs)
    db = len(b.coeffs) - 1
    if len(r) <= db:
        return ZERO, a
    quot = [0] * (len(r) - db)
    bc = b.coeffs[:-1]
    for i in range(len(r) - 1, db - 1, -1):
        t = r[i]
        if t:
            off = i - db
            quot[off] = t
            for j, bj in enumerate(bc):
                if bj:
                    r[off + j] -= t * bj
    return Poly(quot), Poly(r[:db])


def divexact(a: Poly, b: Poly) -> Poly:
    """Exact quotient a/b over Z; raises NotDivisible if b does not divide a in Z[q]."""
    if not b.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if b.coeffs[-1] == 1:
        quot, rem = divmod_monic(a, b)
        if rem:
            raise NotDivisible(f"{b} does not divide {a}")
        return quot
    # Integer long division: if an exact integral quotient exists, every step's
    # leading coefficient is divisible by lead(b).
    r = list(a.coeffs)
    lb = b.coeffs[-1]
    db = len(b.coeffs) - 1
    if len(r) <= db:
        if r:
            raise NotDivisible(f"{b} does not divide {a}")
        return ZERO
    quot = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        t = r[i]
        if t:
            t, m = divmod(t, lb)
            if m:
                raise NotDivisible(f"{b} does not divide {a}")
            off = i - db
            quot[off] = t
            for j, bj in enumerate(b.coeffs):
                if bj:
                    r[off + j] -= t * bj
    if any(r[:db]):
        raise NotDivisible(f"{b} does not divide {a}")
    return Poly(quot)


def neg(a: Poly) -> Poly:
    return -a


def _term(c: int, e: int, var: str, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    c = abs(c)
    if e == 0:
        return f"{sign}{c}"
    mono = var if e == 1 else f"{var}^{e}"
    return f"{sign}{mono}" if c == 1 else f"{sign}{c}*{mono}"


def format_poly(a: Poly, var: str = "q") -> str:
    """Descending-degree text, e.g. ``q^4+q^3+2*q^2+q+1``; the zero polynomial prints as ``0``."""
    parts = []
    for e in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[e]
        if c:
            parts.append(_term(c, e, var, not parts))
    return "".join(parts) or "0"


def parse_poly(text: str, var: str = "q") -> Poly:
    """Inverse of :func:`format_poly`; also accepts ``2q^3``, ``-3*q^2+1`` and products."""
    terms = parse_bivariate(text, var=var, allow_z=False)
    if not terms:
        return ZERO
    deg = max(i for i, _ in terms)
    out = [0] * (deg + 1)
    for (i, j), c in terms.items():
        if j:
            raise PolyParseError(f"unexpected zeta in integer polynomial {text!r}")
        out[i] += c
    return Poly(out)
