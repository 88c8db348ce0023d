"""
Alternating q-binomial sums over Z[zeta_2c][q] and their cyclotomic structure.

The central object is

    Q(c, P, z, l, n) = sum_{m=0}^{n} zeta_2c^m P(m) q^(z m) d^l/dq^l [n choose m]_q

together with its residue-class pieces

    F(c, j, ...) = sum_{m = j mod c} (-1)^((m-j)/c) P(m) q^(z m) d^l/dq^l [n choose m]_q,

the predicted multiplicity ``epsilon`` of Phi_kc in them, and the quotient
(``residual_R``) left after the predicted cyclotomic product is divided out.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Optional, Union

from .bigpoly import NEG_INF, ONE, ZERO, Poly, divexact
from .cyclotomic import cyclotomic, totients_upto
from .cycring import (
    CycElem,
    CycPoly,
    RingCtx,
    cpoly_divexact_int,
    cpoly_to_bigpoly,
    ctx_new,
    parse_cpoly,
    zeta_pow,
)
from .errors import ZeroPolynomial
from .qbinomial import qbinom, qbinom_deriv


class XPoly(CycPoly):
    """Polynomial in x over Z[zeta_2c] (the weight polynomial P)."""

    __slots__ = ()

    def __init__(self, ctx: RingCtx, comps: Iterable[Poly], var: str = "x"):
        super().__init__(ctx, comps, "x")

    def __call__(self, m: int) -> CycElem:
        return CycElem(self.ctx, tuple(p(m) for p in self.comps))

    def translate(self, t: int) -> "XPoly":
        return xpoly_shift(self, t)

    def is_integral(self) -> bool:
        return not any(self.comps[1:])


def xpoly(ctx: RingCtx, value=1) -> XPoly:
    """Coerce text, an int, an integer Poly (in x) or an XPoly into an XPoly over ``ctx``."""
    if isinstance(value, XPoly):
        if value.ctx != ctx:
            # integral polynomials move freely between rings
            return XPoly(ctx, (cpoly_to_bigpoly(value),))
        return value
    if isinstance(value, str):
        return parse_cpoly(ctx, value, var="x", cls=XPoly)
    if isinstance(value, int):
        return XPoly(ctx, (Poly.const(value),))
    if isinstance(value, Poly):
        return XPoly(ctx, (value,))
    raise TypeError(f"cannot make a polynomial in x from {value!r}")


def xpoly_shift(P: XPoly, t: int) -> XPoly:
    """x -> P(x + t)."""
    return XPoly(P.ctx, (p.taylor_shift(t) for p in P.comps))


@dataclass(frozen=True)
class SumSpec:
    """One sum: the full sum Q when ``j`` is None, otherwise the class-j Fleck sum."""

    c: int
    n: int
    P: XPoly = None
    l: int = 0
    z: int = 0
    j: Optional[int] = None

    def __post_init__(self):
        if self.c < 1 or self.n < 0 or self.l < 0 or self.z < 0:
            raise ValueError(f"invalid sum parameters {self!r}")
        if self.j is not None and not 0 <= self.j < self.c:
            raise ValueError(f"class j={self.j} must lie in [0, {self.c})")
        object.__setattr__(self, "P", xpoly(self.ctx, 1 if self.P is None else self.P))

    @property
    def ctx(self) -> RingCtx:
        return ctx_new(self.c)

    @property
    def degP(self) -> int:
        d = self.P.degree
        return 0 if d == NEG_INF else d

    def to_dict(self) -> dict:
        return {"c": self.c, "j": self.j, "l": self.l, "z": self.z, "n": self.n, "P": str(self.P)}


def _weighted_sum(ctx: RingCtx, n: int, l: int, z: int, weights) -> CycPoly:
    # weights yields (m, CycElem); accumulate w * q^(z m) * D^l [n, m] per zeta component
    acc = [[] for _ in range(ctx.dim)]
    for m, w in weights:
        if not w:
            continue
        D = qbinom_deriv(n, m, l).coeffs
        if not D:
            continue
        off = z * m
        for i, v in enumerate(w.coords):
            if not v:
                continue
            row = acc[i]
            need = off + len(D)
            if len(row) < need:
                row.extend([0] * (need - len(row)))
            for t, d in enumerate(D):
                if d:
                    row[off + t] += v * d
    return CycPoly(ctx, [Poly(r) for r in acc])


def q_sum(spec: SumSpec) -> CycPoly:
    """The full sum Q over Z[zeta_2c][q] (``spec.j`` is ignored)."""
    ctx, P = spec.ctx, spec.P
    weights = ((m, zeta_pow(ctx, m) * P(m)) for m in range(spec.n + 1))
    return _weighted_sum(ctx, spec.n, spec.l, spec.z, weights)


def fleck_sum_cpoly(spec: SumSpec) -> CycPoly:
    ctx, P, c, j = spec.ctx, spec.P, spec.c, spec.j or 0
    weights = (
        (m, P(m) * (1 if ((m - j) // c) % 2 == 0 else -1))
        for m in range(j, spec.n + 1, c)
    )
    return _weighted_sum(ctx, spec.n, spec.l, spec.z, weights)


def fleck_sum(spec: SumSpec) -> Union[Poly, CycPoly]:
    """Class-j alternating sum; an integer polynomial whenever P has integer coefficients."""
    out = fleck_sum_cpoly(spec)
    return cpoly_to_bigpoly(out) if spec.P.is_integral() else out


def nonalternating_class_sum(c: int, j: int, n: int) -> Poly:
    """sum over m = j (mod c) of (-1)^m [n, m]_q."""
    if not 0 <= j < c:
        raise ValueError("need 0 <= j < c")
    out = ZERO
    for m in range(j, n + 1, c):
        out = out + qbinom(n, m) * (-1) ** m
    return out


def g_sum(c: int, h: int, P=1, z: int = 0, l: int = 0, n: int = 0) -> CycPoly:
    """The full sum with zeta_2c replaced by zeta_2c^(1+2h)."""
    if not 0 <= h < c:
        raise ValueError("need 0 <= h < c")
    ctx = ctx_new(c)
    P = xpoly(ctx, P)
    weights = ((m, zeta_pow(ctx, (1 + 2 * h) * m) * P(m)) for m in range(n + 1))
    return _weighted_sum(ctx, n, l, z, weights)


def round_nearest(x) -> int:
    """Nearest nonnegative integer, halves rounding up; 0 for everything below 1/2."""
    x = Fraction(x)
    if x < Fraction(1, 2):
        return 0
    return int((x + Fraction(1, 2)) // 1)


def epsilon(kc: int, l: int, degP: int, n: int) -> int:
    return round_nearest(Fraction(n, 2 * kc) - Fraction(degP, 2) - l)


def predicted_exponents(c: int, l: int, degP: int, n: int) -> dict[int, int]:
    """{k*c: epsilon} over odd k with a positive predicted multiplicity."""
    out = {}
    k = 1
    while k * c <= n:
        e = epsilon(k * c, l, degP, n)
        if e:
            out[k * c] = e
        k += 2
    return out


def predicted_product(c: int, l: int, degP: int, n: int) -> Poly:
    out = ONE
    for m, e in predicted_exponents(c, l, degP, n).items():
        out = out * cyclotomic(m) ** e
    return out


def residual_R(spec: SumSpec):
    """The sum divided by its predicted cyclotomic product; NotDivisible here would contradict the theory."""
    div = predicted_product(spec.c, spec.l, spec.degP, spec.n)
    if spec.j is None:
        return cpoly_divexact_int(q_sum(spec), div)
    s = fleck_sum(spec)
    if isinstance(s, Poly):
        return divexact(s, div)
    return cpoly_divexact_int(s, div)


def alpha(kc: int, n: int) -> int:
    """1 if n = i*kc or n = i*kc + 1 for some odd i, else 0."""
    return int(_odd_multiple(n, kc) or _odd_multiple(n - 1, kc))


def beta(kc: int, n: int) -> int:
    """1 if n = i*kc + 1 for some odd i, else 0."""
    return int(_odd_multiple(n - 1, kc))


def _odd_multiple(a: int, kc: int) -> bool:
    return a > 0 and a % kc == 0 and (a // kc) % 2 == 1


def make_Rj(l: int, j: int) -> Poly:
    """binom(l, j) * x(x-1)...(x-j+1), as an integer polynomial in x."""
    if not 1 <= j <= l:
        raise ValueError("need 1 <= j <= l")
    out = Poly.const(comb(l, j))
    for k in range(j):
        out = out * Poly((-k, 1))
    return out


def gaussian_closed_form(n: int) -> Poly:
    """prod over odd k <= n of (1 - q^k) for even n; zero for odd n."""
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2:
        return ZERO
    out = ONE
    for k in range(1, n + 1, 2):
        out = out * (ONE - Poly.monomial(1, k))
    return out


@dataclass
class FactorReport:
    unit: int
    qpower: int
    cyclo_exponents: dict[int, int]
    residual: Union[Poly, CycPoly]
    predicted_exponents: dict[int, int] = field(default_factory=dict)

    def exponent(self, m: int) -> int:
        return self.cyclo_exponents.get(m, 0)

    def reconstruct(self):
        out = self.residual * self.unit
        for m, e in sorted(self.cyclo_exponents.items()):
            out = out * cyclotomic(m) ** e
        return out.shift(self.qpower)

    def meets_prediction(self) -> bool:
        return all(self.exponent(m) >= e for m, e in self.predicted_exponents.items())

    def cyclotomic_part(self) -> Poly:
        out = ONE
        for m, e in sorted(self.cyclo_exponents.items()):
            out = out * cyclotomic(m) ** e
        return out

    def describe(self) -> str:
        parts = ["-1" if self.unit < 0 else "+1"]
        if self.qpower:
            parts.append("q" if self.qpower == 1 else f"q^{self.qpower}")
        parts += [f"Phi_{m}^{e}" for m, e in sorted(self.cyclo_exponents.items())]
        parts.append(f"({self.residual})")
        return " * ".join(parts)

    def to_dict(self) -> dict:
        return {
            "unit": self.unit,
            "qpower": self.qpower,
            "cyclo_exponents": {str(m): e for m, e in sorted(self.cyclo_exponents.items())},
            "predicted_exponents": {str(m): e for m, e in sorted(self.predicted_exponents.items())},
            "residual": str(self.residual),
        }


def factor_report(p, predicted: Optional[dict] = None) -> FactorReport:
    """
    Split p as unit * q^s * prod Phi_m^e * residual with every Phi_m removed at full multiplicity.

    All m with phi(m) <= deg are tried; phi(m) >= sqrt(m/2) bounds that search.
    """
    if not p:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    predicted = dict(predicted or {})
    if isinstance(p, CycPoly):
        unit = 1
        s = p.low_degree()
        r = CycPoly(p.ctx, (Poly(c.coeffs[s:]) for c in p.comps))
        divide = cpoly_divexact_int
    else:
        unit = 1 if p.lead > 0 else -1
        s = p.low_degree()
        r = Poly(p.coeffs[s:]) * unit
        divide = divexact
    exps: dict[int, int] = {}
    deg = r.degree
    if deg >= 1:
        limit = 2 * deg * deg + 2
        phi = totients_upto(limit)
        for m in range(1, limit + 1):
            if phi[m] > r.degree:
                continue
            cyc = cyclotomic(m)
            e = 0
            while r.degree >= cyc.degree:
                try:
                    r = divide(r, cyc)
                except ArithmeticError:
                    break
                e += 1
            if e:
                exps[m] = e
    return FactorReport(unit, s, exps, r, predicted)


def format_factor_report(rep: FactorReport) -> str:
    lines = [
        f"unit       {'+1' if rep.unit > 0 else '-1'}",
        f"q-power    {rep.qpower}",
        "cyclotomic " + (" ".join(f"Phi_{m}^{e}" for m, e in sorted(rep.cyclo_exponents.items())) or "1"),
    ]
    if rep.predicted_exponents:
        lines.append(
            "predicted  " + " ".join(f"Phi_{m}^{e}" for m, e in sorted(rep.predicted_exponents.items()))
        )
    lines.append(f"residual   {rep.residual}")
    return "\n".join(lines)
