"""
Arithmetic in Z[zeta_2c] = Z[x]/Phi_2c(x) and in the polynomial ring Z[zeta_2c][q].

An element of Z[zeta_2c] is a coordinate vector over the basis 1, zeta, ...,
zeta^(dim-1) with dim = phi(2c).  A polynomial over that ring is stored
transposed: one integer polynomial per basis element, so ``a(q) = sum_i zeta^i a_i(q)``.
The basis is free over Z[q], which makes division by an integer polynomial and
Phi-adic valuations componentwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from ._parse import parse_bivariate
from .bigpoly import NEG_INF, ZERO, Poly, divmod_monic, format_poly
from .cyclotomic import cyclotomic, euler_phi, phi_valuation
from .errors import CtxMismatch, NotDivisible, NotRational, ZeroPolynomial


@dataclass(frozen=True)
class RingCtx:
    c: int
    reduction: Poly = field(compare=False, repr=False)
    dim: int = field(compare=False)
    powers: tuple = field(compare=False, repr=False)

    def __reduce__(self):
        return (ctx_new, (self.c,))

    def zero(self) -> "CycElem":
        return CycElem(self, (0,) * self.dim)

    def one(self) -> "CycElem":
        return self.elem(1)

    def elem(self, value) -> "CycElem":
        """Coerce an int, a coordinate sequence or a CycElem into this ring."""
        if isinstance(value, CycElem):
            _check(self, value.ctx)
            return value
        if isinstance(value, int):
            return CycElem(self, (value,) + (0,) * (self.dim - 1))
        coords = tuple(value)
        if len(coords) > self.dim:
            return CycElem(self, _reduce_coords(self, coords))
        return CycElem(self, coords + (0,) * (self.dim - len(coords)))


@lru_cache(maxsize=None)
def ctx_new(c: int) -> RingCtx:
    """Context for Z[zeta_2c]; reduction polynomial Phi_2c(x)."""
    if c < 1:
        raise ValueError("c must be a positive integer")
    red = cyclotomic(2 * c)
    dim = euler_phi(2 * c)
    assert red.degree == dim
    powers = []
    for e in range(2 * c):
        _, r = divmod_monic(Poly((0,) * e + (1,)), red)
        powers.append(tuple(r.coeffs) + (0,) * (dim - len(r.coeffs)))
    return RingCtx(c, red, dim, tuple(powers))


def _check(a: RingCtx, b: RingCtx) -> None:
    if a.c != b.c:
        raise CtxMismatch(f"cannot combine Z[zeta_{2 * a.c}] with Z[zeta_{2 * b.c}]")


def _reduce_coords(ctx: RingCtx, coords: Sequence[int]) -> tuple:
    _, r = divmod_monic(Poly(coords), ctx.reduction)
    return tuple(r.coeffs) + (0,) * (ctx.dim - len(r.coeffs))


class CycElem:
    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: RingCtx, coords: Sequence[int]):
        if len(coords) != ctx.dim:
            raise ValueError(f"expected {ctx.dim} coordinates, got {len(coords)}")
        self.ctx = ctx
        self.coords = tuple(coords)

    def __reduce__(self):
        return (CycElem, (self.ctx, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return any(self.coords)

    def is_integer(self) -> bool:
        return not any(self.coords[1:])

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.elem(other)
        if not isinstance(other, CycElem):
            return NotImplemented
        return self.ctx == other.ctx and self.coords == other.coords

    def __hash__(self):
        return hash((self.ctx.c, self.coords))

    def __repr__(self):
        return f"CycElem(c={self.ctx.c}, {format_elem(self)!r})"

    def __str__(self):
        return format_elem(self)

    def __neg__(self):
        return CycElem(self.ctx, tuple(-v for v in self.coords))

    def __add__(self, other):
        other = _coerce_elem(self.ctx, other)
        if other is NotImplemented:
            return other
        return elem_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_elem(self.ctx, other)
        if other is NotImplemented:
            return other
        return elem_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycElem(self.ctx, tuple(v * other for v in self.coords))
        if isinstance(other, CycElem):
            return elem_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__


def _coerce_elem(ctx, other):
    if isinstance(other, int):
        return ctx.elem(other)
    if isinstance(other, CycElem):
        return other
    return NotImplemented


def zeta_pow(ctx: RingCtx, e: int) -> CycElem:
    """zeta_2c**e for any integer e (negative allowed)."""
    return CycElem(ctx, ctx.powers[e % (2 * ctx.c)])


def elem_add(a: CycElem, b: CycElem) -> CycElem:
    _check(a.ctx, b.ctx)
    return CycElem(a.ctx, tuple(x + y for x, y in zip(a.coords, b.coords)))


def elem_mul(a: CycElem, b: CycElem) -> CycElem:
    _check(a.ctx, b.ctx)
    ctx = a.ctx
    out = [0] * ctx.dim
    for i, x in enumerate(a.coords):
        if not x:
            continue
        for j, y in enumerate(b.coords):
            if y:
                xy = x * y
                for r, v in enumerate(ctx.powers[i + j]):
                    if v:
                        out[r] += xy * v
    return CycElem(ctx, out)


class CycPoly:
    """Polynomial over Z[zeta_2c], stored as ``comps[i]`` = integer coefficient polynomial of zeta^i."""

    __slots__ = ("ctx", "comps", "var")

    def __init__(self, ctx: RingCtx, comps: Iterable[Poly], var: str = "q"):
        comps = tuple(comps)
        if len(comps) < ctx.dim:
            comps = comps + (ZERO,) * (ctx.dim - len(comps))
        elif len(comps) > ctx.dim:
            raise ValueError(f"expected {ctx.dim} components, got {len(comps)}")
        self.ctx = ctx
        self.comps = comps
        self.var = var

    def __reduce__(self):
        return (type(self), (self.ctx, self.comps, self.var))

    def _like(self, comps):
        return type(self)(self.ctx, comps, self.var)

    @classmethod
    def from_coeffs(cls, ctx: RingCtx, coeffs: Sequence, var: str = "q") -> "CycPoly":
        """Build from an ascending sequence of ring elements (ints, coordinate tuples or CycElem)."""
        elems = [ctx.elem(c) for c in coeffs]
        comps = [Poly(e.coords[i] for e in elems) for i in range(ctx.dim)]
        return cls(ctx, comps, var)

    @classmethod
    def embed(cls, ctx: RingCtx, p: Poly, var: str = "q") -> "CycPoly":
        return cls(ctx, (p,), var)

    @property
    def degree(self):
        return max((p.degree for p in self.comps), default=NEG_INF)

    @property
    def coeffs(self) -> list[CycElem]:
        deg = self.degree
        if deg == NEG_INF:
            return []
        return [self.coeff(e) for e in range(deg + 1)]

    def coeff(self, e: int) -> CycElem:
        return CycElem(
            self.ctx,
            tuple(p.coeffs[e] if e < len(p.coeffs) else 0 for p in self.comps),
        )

    def lead(self) -> CycElem:
        return self.coeff(self.degree) if self else self.ctx.zero()

    def low_degree(self) -> int:
        lows = [p.low_degree() for p in self.comps if p]
        return min(lows) if lows else 0

    def is_zero(self) -> bool:
        return not any(self.comps)

    def __bool__(self):
        return any(self.comps)

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = CycPoly.embed(self.ctx, other, self.var)
        elif isinstance(other, int):
            other = CycPoly.embed(self.ctx, Poly.const(other), self.var)
        if not isinstance(other, CycPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.comps == other.comps

    def __hash__(self):
        return hash((self.ctx.c, self.comps))

    def __repr__(self):
        return f"{type(self).__name__}(c={self.ctx.c}, {format_cpoly(self)!r})"

    def __str__(self):
        return format_cpoly(self)

    def __neg__(self):
        return self._like(-p for p in self.comps)

    def _coerce(self, other):
        if isinstance(other, CycPoly):
            _check(self.ctx, other.ctx)
            return other
        if isinstance(other, Poly):
            return CycPoly.embed(self.ctx, other)
        if isinstance(other, int):
            return CycPoly.embed(self.ctx, Poly.const(other))
        if isinstance(other, CycElem):
            _check(self.ctx, other.ctx)
            return CycPoly.from_coeffs(self.ctx, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cpoly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cpoly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._like(p * other for p in self.comps)
        if isinstance(other, Poly):
            return self._like(p * other for p in self.comps)
        if isinstance(other, CycElem):
            return scale(self, other)
        if isinstance(other, CycPoly):
            return cpoly_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def derivative(self, l: int = 1) -> "CycPoly":
        return cpoly_derivative(self, l)

    def shift(self, s: int) -> "CycPoly":
        return self._like(p.shift(s) for p in self.comps)


def cpoly_add(a: CycPoly, b: CycPoly) -> CycPoly:
    _check(a.ctx, b.ctx)
    return a._like(x + y for x, y in zip(a.comps, b.comps))


def scale(a: CycPoly, w: CycElem) -> CycPoly:
    """Multiply by a constant of Z[zeta_2c]."""
    _check(a.ctx, w.ctx)
    ctx = a.ctx
    out = [ZERO] * ctx.dim
    for i, p in enumerate(a.comps):
        if not p:
            continue
        for j, y in enumerate(w.coords):
            if y:
                for r, v in enumerate(ctx.powers[i + j]):
                    if v:
                        out[r] = out[r] + p * (y * v)
    return a._like(out)


def cpoly_mul(a: CycPoly, b: CycPoly) -> CycPoly:
    _check(a.ctx, b.ctx)
    ctx = a.ctx
    out = [ZERO] * ctx.dim
    for i, p in enumerate(a.comps):
        if not p:
            continue
        for j, s in enumerate(b.comps):
            if not s:
                continue
            prod = p * s
            for r, v in enumerate(ctx.powers[i + j]):
                if v:
                    out[r] = out[r] + prod * v
    return a._like(out)


def cpoly_derivative(a: CycPoly, l: int = 1) -> CycPoly:
    return a._like(p.derivative(l) for p in a.comps)


def cpoly_divexact_int(a: CycPoly, b: Poly) -> CycPoly:
    """Exact quotient of a by the monic integer polynomial b."""
    out = []
    for p in a.comps:
        quot, rem = divmod_monic(p, b)
        if rem:
            raise NotDivisible(f"{b} does not divide {a}")
        out.append(quot)
    return a._like(out)


def cpoly_phi_valuation(a: CycPoly, m: int) -> int:
    """Largest e with Phi_m(q)^e dividing a in Z[zeta_2c][q]."""
    if not a:
        raise ZeroPolynomial("valuation of the zero polynomial is undefined")
    return min(phi_valuation(p, m) for p in a.comps if p)


def cpoly_to_bigpoly(a: CycPoly) -> Poly:
    if any(a.comps[1:]):
        raise NotRational(f"{a} has a nonzero zeta component")
    return a.comps[0]


def format_elem(w: CycElem) -> str:
    return format_poly(Poly(w.coords), var="z")


def format_cpoly(a: CycPoly) -> str:
    """Text such as ``(z+1)*q^2-z*q+2``; integer coefficients print bare."""
    parts = []
    deg = a.degree
    if deg == NEG_INF:
        return "0"
    for e in range(deg, -1, -1):
        w = a.coeff(e)
        if not w:
            continue
        mono = "" if e == 0 else (a.var if e == 1 else f"{a.var}^{e}")
        nz = [(i, v) for i, v in enumerate(w.coords) if v]
        if len(nz) == 1 and (nz[0][0] == 0 or abs(nz[0][1]) == 1):
            i, v = nz[0]
            body = format_poly(Poly.monomial(abs(v), i), var="z")
            if mono and body == "1":
                body = ""
            sign = "-" if v < 0 else "+"
        else:
            body, sign = f"({format_elem(w)})", "+"
        if body and mono:
            term = f"{body}*{mono}"
        else:
            term = body or mono
        if sign == "-" or parts:
            term = sign + term
        parts.append(term)
    return "".join(parts)


def parse_cpoly(ctx: RingCtx, text: str, var: str = "q", cls=CycPoly) -> CycPoly:
    """Read the text format back; ``z`` is zeta_2c and is reduced modulo Phi_2c."""
    terms = parse_bivariate(text, var=var, allow_z=True)
    coeffs: dict[int, list] = {}
    for (i, j), v in terms.items():
        row = coeffs.setdefault(i, [0] * (2 * ctx.c))
        row[j % (2 * ctx.c)] += v
    if not coeffs:
        return cls(ctx, (), var)
    deg = max(coeffs)
    elems = []
    for e in range(deg + 1):
        acc = ctx.zero()
        for j, v in enumerate(coeffs.get(e, ())):
            if v:
                acc = acc + zeta_pow(ctx, j) * v
        elems.append(acc)
    return cls.from_coeffs(ctx, elems, var)
