"""
Parameter sweeps that check the divisibility theorems, identities and congruences.

Each ``check_*`` function returns a :class:`VerifyReport`.  Failures are data,
never exceptions; a report passes exactly when its failure list is empty.
Cases are enumerated in a fixed lexicographic order so reports diff cleanly,
and may be farmed out to worker processes without changing that order.
"""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Callable, Optional, Sequence

from .bigpoly import ONE, Poly, divmod_monic, format_poly, parse_poly
from .cyclotomic import cyclotomic, euler_phi, is_prime, phi_valuation
from .cycring import CycPoly, cpoly_phi_valuation, ctx_new, scale, zeta_pow
from .errors import NotDivisible
from .flecksums import (
    SumSpec,
    XPoly,
    alpha,
    beta,
    epsilon,
    factor_report,
    fleck_sum,
    fleck_sum_cpoly,
    g_sum,
    gaussian_closed_form,
    make_Rj,
    predicted_exponents,
    q_sum,
    residual_R,
    round_nearest,
    xpoly,
)
from .qbinomial import int_binom, qbinom, qbinom_product

SCHEMA_VERSION = 1


@dataclass
class VerifyReport:
    check_id: str
    grid: dict = field(default_factory=dict)
    cases_run: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        out = {"schema_version": SCHEMA_VERSION}
        out.update(asdict(self))
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{verdict} {self.check_id}: {self.cases_run} cases, "
            f"{len(self.failures)} failures, {self.elapsed_ms:.0f} ms"
        )


def _failure(spec, required, observed) -> dict:
    return {"spec": spec, "required": required, "observed": observed}


def _run(fn: Callable, cases: Sequence, workers: int = 1) -> list:
    if workers > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, cases, chunksize=max(1, len(cases) // (4 * workers))))
    return [fn(case) for case in cases]


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self.t0) * 1000.0


# --------------------------------------------------------------------- sweeps


@dataclass
class SweepGrid:
    c: Sequence[int] = (1, 2, 3, 4)
    k: Sequence[int] = (1, 3)
    l: Sequence[int] = (0, 1)
    d: Sequence[int] = (0, 1)
    z: Sequence[int] = (0, 1)
    degP: Sequence[int] = (0, 1)
    n: Optional[Sequence[int]] = None
    j: Optional[Sequence[int]] = None
    n_span: int = 4
    n_max: int = 60
    seed: int = 0
    cap: Optional[int] = None
    P: dict = field(default_factory=dict)

    def __post_init__(self):
        if any(k % 2 == 0 or k < 1 for k in self.k):
            raise ValueError("k must be odd and positive")
        if any(c < 1 for c in self.c):
            raise ValueError("c must be positive")

    def to_dict(self) -> dict:
        out = asdict(self)
        return {key: list(v) if isinstance(v, (tuple, range)) else v for key, v in out.items()}

    def poly(self, c: int, degP: int, integral: bool = False) -> str:
        """Weight polynomial text for (c, degP); seeded small Z[zeta] coefficients unless overridden."""
        if degP in self.P:
            return self.P[degP]
        return sample_P(c, degP, self.seed, integral)

    def n_values(self, threshold: int) -> list[int]:
        if self.n is not None:
            return [n for n in self.n if n >= threshold]
        return [n for n in range(threshold, threshold + self.n_span + 1) if n <= self.n_max]

    def classes(self, c: int) -> list[int]:
        if self.j is None:
            return list(range(c))
        return [j for j in self.j if 0 <= j < c]


def sample_P(c: int, degP: int, seed: int = 0, integral: bool = False) -> str:
    """Deterministic P of exact degree degP with coordinates in [-2, 2]."""
    ctx = ctx_new(c)
    rng = random.Random(f"{seed}:{c}:{degP}:{int(integral)}")
    dim = 1 if integral else ctx.dim
    coeffs = []
    for e in range(degP + 1):
        while True:
            coords = [rng.randint(-2, 2) for _ in range(dim)]
            if any(coords) or e < degP:
                break
        coeffs.append(tuple(coords))
    return str(XPoly.from_coeffs(ctx, coeffs, "x"))


@lru_cache(maxsize=2048)
def _qsum(c, P, l, z, n) -> CycPoly:
    return q_sum(SumSpec(c, n, P, l, z))


@lru_cache(maxsize=4096)
def _fsum(c, j, P, l, z, n) -> CycPoly:
    return fleck_sum_cpoly(SumSpec(c, n, P, l, z, j))


def _valuation(s: CycPoly, m: int):
    return "inf" if not s else cpoly_phi_valuation(s, m)


def _meets(v, need: int) -> bool:
    return v == "inf" or v >= need


def _theorem_cases(grid: SweepGrid, with_classes: bool) -> list[tuple]:
    cases = []
    for c in grid.c:
        for k in grid.k:
            for l in grid.l:
                for d in grid.d:
                    for z in grid.z:
                        for degP in grid.degP:
                            threshold = (degP + 2 * (l + d) + 1) * k * c
                            P = grid.poly(c, degP)
                            for n in grid.n_values(threshold):
                                for j in grid.classes(c) if with_classes else [None]:
                                    cases.append((c, k, l, d, z, degP, n, j, P, False))
                            below = threshold - 1
                            if grid.n is None and 0 <= below <= grid.n_max:
                                for j in grid.classes(c) if with_classes else [None]:
                                    cases.append((c, k, l, d, z, degP, below, j, P, True))
    if grid.cap is not None:
        cases = cases[: grid.cap]
    return cases


def _theorem_case(case) -> dict:
    c, k, l, d, z, degP, n, j, P, below = case
    s = _qsum(c, P, l, z, n) if j is None else _fsum(c, j, P, l, z, n)
    v = _valuation(s, k * c)
    spec = {"c": c, "k": k, "l": l, "d": d, "z": z, "degP": degP, "n": n, "j": j, "P": P}
    return {"spec": spec, "required": d + 1, "observed": v, "ok": _meets(v, d + 1), "below": below}


def _theorem_report(check_id: str, grid: SweepGrid, with_classes: bool, workers: int) -> VerifyReport:
    rep = VerifyReport(check_id, grid.to_dict())
    with _Timer() as t:
        results = _run(_theorem_case, _theorem_cases(grid, with_classes), workers)
    probe_total = probe_held = 0
    for r in results:
        if r["below"]:
            # the theorems say nothing below the threshold; record only
            probe_total += 1
            probe_held += r["ok"]
            continue
        rep.cases_run += 1
        if not r["ok"]:
            rep.failures.append(_failure(r["spec"], r["required"], r["observed"]))
    rep.info["below_threshold_cases"] = probe_total
    rep.info["below_threshold_still_divisible"] = probe_held
    rep.elapsed_ms = t.ms
    return rep


def check_theorem_main(grid: Optional[SweepGrid] = None, workers: int = 1) -> VerifyReport:
    """Phi_kc^(d+1) divides the full sum once n >= (deg P + 2(l+d) + 1) k c."""
    return _theorem_report("main", grid or SweepGrid(), False, workers)


def check_theorem_fleck(grid: Optional[SweepGrid] = None, workers: int = 1) -> VerifyReport:
    """Same divisibility for every residue-class sum, 0 <= j < c."""
    return _theorem_report("fleck", grid or SweepGrid(), True, workers)


def _restated_case(case) -> dict:
    c, l, z, degP, n, j, P = case
    spec = SumSpec(c, n, P, l, z, j)
    info = {"c": c, "l": l, "z": z, "degP": degP, "n": n, "j": j, "P": P}
    try:
        residual_R(spec)
    except NotDivisible:
        return {"spec": info, "ok": False, "required": predicted_exponents(c, l, degP, n)}
    return {"spec": info, "ok": True}


def check_prop_restated(grid: Optional[SweepGrid] = None, workers: int = 1, n_max: int = 40) -> VerifyReport:
    """The predicted cyclotomic product divides the full sum and (for integer P) every class sum, for all n."""
    grid = grid or SweepGrid()
    cases = []
    for c in grid.c:
        for l in grid.l:
            for z in grid.z:
                for degP in grid.degP:
                    P = grid.poly(c, degP)
                    Pint = grid.poly(c, degP, integral=True)
                    for n in grid.n if grid.n is not None else range(n_max + 1):
                        cases.append((c, l, z, degP, n, None, P))
                        for j in grid.classes(c):
                            cases.append((c, l, z, degP, n, j, Pint))
    if grid.cap is not None:
        cases = cases[: grid.cap]
    rep = VerifyReport("restated", dict(grid.to_dict(), n_max=n_max))
    with _Timer() as t:
        results = _run(_restated_case, cases, workers)
    for r in results:
        rep.cases_run += 1
        if not r["ok"]:
            rep.failures.append(_failure(r["spec"], r["required"], "NotDivisible"))
    rep.elapsed_ms = t.ms
    return rep


# ------------------------------------------------------- classical identities


def check_gaussian(n_max: int = 40) -> VerifyReport:
    rep = VerifyReport("gaussian", {"n_max": n_max})
    with _Timer() as t:
        for n in range(1, n_max + 1):
            rep.cases_run += 1
            got = q_sum(SumSpec(1, n))
            want = gaussian_closed_form(n)
            if got != want:
                rep.failures.append(_failure({"n": n}, str(want), str(got)))
    rep.elapsed_ms = t.ms
    return rep


def check_euler(n_max: int = 15) -> VerifyReport:
    """sum (-1)^m C(n,m) m^l is 0 for l < n and (-1)^n n! for l = n."""
    rep = VerifyReport("euler", {"n_max": n_max})
    with _Timer() as t:
        for n in range(n_max + 1):
            fact = 1
            for i in range(2, n + 1):
                fact *= i
            for l in range(n + 1):
                rep.cases_run += 1
                got = sum((-1) ** m * int_binom(n, m) * m**l for m in range(n + 1))
                want = (-1) ** n * fact if l == n else 0
                if got != want:
                    rep.failures.append(_failure({"n": n, "l": l}, want, got))
    rep.elapsed_ms = t.ms
    return rep


def check_alt_poly(n_max: int = 15, per_n: int = 5, seed: int = 0) -> VerifyReport:
    """sum (-1)^m P(m) C(n,m) = 0 for integer P with deg P < n."""
    rep = VerifyReport("altpoly", {"n_max": n_max, "per_n": per_n, "seed": seed})
    rng = random.Random(seed)
    with _Timer() as t:
        for n in range(1, n_max + 1):
            for _ in range(per_n):
                deg = rng.randrange(n)
                P = Poly([rng.randint(-9, 9) for _ in range(deg)] + [rng.choice([-3, -2, -1, 1, 2, 3])])
                rep.cases_run += 1
                got = sum((-1) ** m * P(m) * int_binom(n, m) for m in range(n + 1))
                if got:
                    rep.failures.append(_failure({"n": n, "P": format_poly(P, "x")}, 0, got))
    rep.elapsed_ms = t.ms
    return rep


def check_qbinom_identities(n_max: int = 30, n_max_phi: int = 60) -> VerifyReport:
    """Pascal rule, the (1-q^m) shift rule, Phi_n | 1-q^m iff n | m, Phi_n | [n, m], and the product-formula oracle."""
    rep = VerifyReport("qbinom", {"n_max": n_max, "n_max_phi": n_max_phi})
    with _Timer() as t:
        for n in range(n_max + 1):
            for m in range(n + 2):
                rep.cases_run += 1
                lhs = qbinom(n + 1, m)
                rhs = qbinom(n, m).shift(m) + qbinom(n, m - 1)
                if lhs != rhs:
                    rep.failures.append(_failure({"identity": "pascal", "n": n, "m": m}, str(rhs), str(lhs)))
            for m in range(1, n + 1):
                rep.cases_run += 1
                lhs = (ONE - Poly.monomial(1, m)) * qbinom(n, m)
                rhs = (ONE - Poly.monomial(1, n)) * qbinom(n - 1, m - 1)
                if lhs != rhs:
                    rep.failures.append(_failure({"identity": "shift", "n": n, "m": m}, str(rhs), str(lhs)))
            for m in range(n + 1):
                rep.cases_run += 1
                oracle = qbinom_product(n, m)
                if qbinom(n, m) != oracle:
                    rep.failures.append(_failure({"identity": "product", "n": n, "m": m}, str(oracle), str(qbinom(n, m))))
                if qbinom(n, m)(1) != int_binom(n, m):
                    rep.failures.append(_failure({"identity": "q=1", "n": n, "m": m}, int_binom(n, m), qbinom(n, m)(1)))
        for n in range(1, n_max_phi + 1):
            for m in range(1, n_max_phi + 1):
                rep.cases_run += 1
                divides = phi_valuation(Poly.monomial(1, m) - ONE, n) >= 1
                if divides != (m % n == 0):
                    rep.failures.append(_failure({"identity": "phi|1-q^m", "n": n, "m": m}, m % n == 0, divides))
            for m in range(1, n):
                rep.cases_run += 1
                v = phi_valuation(qbinom(n, m), n)
                if v < 1:
                    rep.failures.append(_failure({"identity": "phi_n|[n,m]", "n": n, "m": m}, 1, v))
    rep.elapsed_ms = t.ms
    return rep


def check_q_lucas(p_max: int = 7, n_max: int = 40) -> VerifyReport:
    """[n, m]_q = C(j, k) [a, b]_q mod Phi_p for n = pj + a, m = pk + b."""
    primes = [p for p in range(2, p_max + 1) if is_prime(p)]
    rep = VerifyReport("qlucas", {"primes": primes, "n_max": n_max})
    with _Timer() as t:
        for p in primes:
            phi = cyclotomic(p)
            for n in range(n_max + 1):
                j, a = divmod(n, p)
                for m in range(n + 1):
                    k, b = divmod(m, p)
                    rep.cases_run += 1
                    diff = qbinom(n, m) - qbinom(a, b) * int_binom(j, k)
                    _, rem = divmod_monic(diff, phi)
                    if rem:
                        rep.failures.append(_failure({"p": p, "n": n, "m": m}, "0", str(rem)))
    rep.elapsed_ms = t.ms
    return rep


# ----------------------------------------------------------------- recursions


def _ps(c: int, max_deg: int, seed: int) -> list[str]:
    return [sample_P(c, d, seed) for d in range(max_deg + 1)]


def lemma23_rhs(c: int, P, n: int) -> CycPoly:
    """Q(P,0,n-1) + zeta Q(P(x+1),0,n-1) - zeta (1-q^(n-1)) Q(P(x+1),0,n-2)."""
    ctx = ctx_new(c)
    P = xpoly(ctx, P)
    P1 = P.translate(1)
    zeta = zeta_pow(ctx, 1)
    a = q_sum(SumSpec(c, n - 1, P))
    b = q_sum(SumSpec(c, n - 1, P1))
    d = q_sum(SumSpec(c, n - 2, P1))
    return a + scale(b, zeta) - scale(d * (ONE - Poly.monomial(1, n - 1)), zeta)


def eq4_rhs(c: int, P, z: int, n: int) -> CycPoly:
    """Q(P,z,n+1) - zeta q^z Q(P(x+1),z,n); equals Q(P,z+1,n)."""
    ctx = ctx_new(c)
    P = xpoly(ctx, P)
    a = q_sum(SumSpec(c, n + 1, P, 0, z))
    b = q_sum(SumSpec(c, n, P.translate(1), 0, z))
    return a - scale(b.shift(z), zeta_pow(ctx, 1))


def eq5_terms(c: int, P, l: int, z: int, n: int) -> tuple[CycPoly, list[CycPoly]]:
    """
    Right side of the derivative relation for Q^(l)(P, z+1, n), minus the q^-j
    correction terms, plus the list of those correction sums (before dividing by q^j).
    """
    ctx = ctx_new(c)
    P = xpoly(ctx, P)
    a = q_sum(SumSpec(c, n + 1, P, l, z))
    b = q_sum(SumSpec(c, n, P.translate(1), l, z))
    main = a - scale(b.shift(z), zeta_pow(ctx, 1))
    corrections = [q_sum(SumSpec(c, n, P * make_Rj(l, j), l - j, z + 1)) for j in range(1, l + 1)]
    return main, corrections


def chu_vandermonde_rhs(c: int, P, n: int, t: int) -> CycPoly:
    """Literal double sum over m <= n-t, j <= t of zeta^(m+t-j) P(m+t-j) q^(jm) [t,j] [n-t,m]."""
    ctx = ctx_new(c)
    P = xpoly(ctx, P)
    out = CycPoly(ctx, ())
    for m in range(n - t + 1):
        for j in range(t + 1):
            w = zeta_pow(ctx, m + t - j) * P(m + t - j)
            term = (qbinom(t, j) * qbinom(n - t, m)).shift(j * m)
            out = out + scale(CycPoly.embed(ctx, term), w)
    return out


def filter_sides(c: int, j: int, P, z: int, l: int, n: int) -> tuple[CycPoly, CycPoly]:
    """(sum_h zeta_c^(-jh) G_h, c zeta^j * class-j sum)."""
    ctx = ctx_new(c)
    P = xpoly(ctx, P)
    lhs = CycPoly(ctx, ())
    for h in range(c):
        lhs = lhs + scale(g_sum(c, h, P, z, l, n), zeta_pow(ctx, -2 * j * h))
    rhs = scale(fleck_sum_cpoly(SumSpec(c, n, P, l, z, j)), zeta_pow(ctx, j)) * c
    return lhs, rhs


def check_recursions(c_max: int = 4, seed: int = 0, quick: bool = False) -> VerifyReport:
    """Two-step recursion, z-step relation, derivative relation, Chu-Vandermonde analog, roots-of-unity filter."""
    lim = {
        "lemma23_n": 12 if quick else 20,
        "eq4_n": 10 if quick else 16,
        "eq4_z": 3,
        "eq5_n": 8 if quick else 12,
        "cv_n": 8 if quick else 12,
        "filter_n": 10 if quick else 14,
    }
    rep = VerifyReport("recursions", dict(lim, c_max=c_max, seed=seed))
    fail = rep.failures
    with _Timer() as t:
        for c in range(1, c_max + 1):
            polys = _ps(c, 2, seed)
            for P in polys:
                for n in range(2, lim["lemma23_n"] + 1):
                    rep.cases_run += 1
                    lhs, rhs = q_sum(SumSpec(c, n, P)), lemma23_rhs(c, P, n)
                    if lhs != rhs:
                        fail.append(_failure({"identity": "two-step", "c": c, "P": P, "n": n}, str(lhs), str(rhs)))
                for z in range(lim["eq4_z"]):
                    for n in range(lim["eq4_n"] + 1):
                        rep.cases_run += 1
                        lhs, rhs = q_sum(SumSpec(c, n, P, 0, z + 1)), eq4_rhs(c, P, z, n)
                        if lhs != rhs:
                            fail.append(_failure({"identity": "z-step", "c": c, "P": P, "z": z, "n": n}, str(lhs), str(rhs)))
            for P in polys[:2]:
                for l in (1, 2):
                    for z in range(3):
                        for n in range(lim["eq5_n"] + 1):
                            rep.cases_run += 1
                            spec = {"identity": "derivative", "c": c, "P": P, "l": l, "z": z, "n": n}
                            lhs = q_sum(SumSpec(c, n, P, l, z + 1))
                            main, corrections = eq5_terms(c, P, l, z, n)
                            total = main
                            for jj, corr in enumerate(corrections, start=1):
                                if corr and corr.low_degree() < jj:
                                    fail.append(_failure(dict(spec, j=jj), f"q^{jj} | correction", str(corr)))
                                    break
                                total = total - CycPoly(corr.ctx, (Poly(p.coeffs[jj:]) for p in corr.comps))
                            else:
                                if lhs != total:
                                    fail.append(_failure(spec, str(lhs), str(total)))
                for n in range(lim["cv_n"] + 1):
                    lhs = q_sum(SumSpec(c, n, P))
                    for tt in range(n + 1):
                        rep.cases_run += 1
                        rhs = chu_vandermonde_rhs(c, P, n, tt)
                        if lhs != rhs:
                            fail.append(_failure({"identity": "chu-vandermonde", "c": c, "P": P, "n": n, "t": tt}, str(lhs), str(rhs)))
                for n in range(lim["filter_n"] + 1):
                    for j in range(c):
                        for l, z in ((0, 0), (1, 1)):
                            rep.cases_run += 1
                            lhs, rhs = filter_sides(c, j, P, z, l, n)
                            if lhs != rhs:
                                fail.append(_failure({"identity": "filter", "c": c, "j": j, "P": P, "l": l, "z": z, "n": n}, str(rhs), str(lhs)))
    rep.elapsed_ms = t.ms
    return rep


def check_residuals(n_max_closed: int = 40, c_max: int = 3, n_max_rec: int = 24) -> VerifyReport:
    """c = 1 closed form of R and the alpha/beta-weighted recursion among R values."""
    rep = VerifyReport("residuals", {"n_max_closed": n_max_closed, "c_max": c_max, "n_max_rec": n_max_rec})
    with _Timer() as t:
        for n in range(1, n_max_closed + 1):
            rep.cases_run += 1
            got = residual_R(SumSpec(1, n))
            want = (-1) ** (n // 2) if n % 2 == 0 else 0
            if got != want:
                rep.failures.append(_failure({"identity": "closed-form", "n": n}, want, str(got)))
        for c in range(1, c_max + 1):
            ctx = ctx_new(c)
            zeta = zeta_pow(ctx, 1)
            R = {n: residual_R(SumSpec(c, n)) for n in range(n_max_rec + 1)}
            for n in range(3, n_max_rec + 1):
                rep.cases_run += 1
                A = B = ONE
                k = 1
                while k * c <= n:
                    A = A * cyclotomic(k * c) ** alpha(k * c, n)
                    B = B * cyclotomic(k * c) ** beta(k * c, n)
                    k += 2
                lhs = R[n] * A
                rhs = scale(R[n - 1] * B, zeta + 1) - scale(R[n - 2] * (ONE - Poly.monomial(1, n - 1)), zeta)
                if lhs != rhs:
                    rep.failures.append(_failure({"identity": "R-recursion", "c": c, "n": n}, str(lhs), str(rhs)))
        for kc in range(1, 31):
            for n in range(2, 101):
                rep.cases_run += 1
                a_round = round_nearest(Fraction(n, 2 * kc)) - round_nearest(Fraction(n - 2, 2 * kc))
                b_round = round_nearest(Fraction(n - 1, 2 * kc)) - round_nearest(Fraction(n - 2, 2 * kc))
                if (a_round, b_round) != (alpha(kc, n), beta(kc, n)):
                    rep.failures.append(
                        _failure({"identity": "alpha/beta", "kc": kc, "n": n}, [alpha(kc, n), beta(kc, n)], [a_round, b_round])
                    )
    rep.elapsed_ms = t.ms
    return rep


# --------------------------------------------------------- integer congruences


def alternating_class_sum(c: int, j: int, n: int) -> int:
    """sum over m = j (mod c) of (-1)^((m-j)/c) C(n, m)."""
    return sum((-1) ** ((m - j) // c) * int_binom(n, m) for m in range(j, n + 1, c))


def signed_class_sum(c: int, j: int, n: int) -> int:
    """sum over m = j (mod c) of (-1)^m C(n, m)."""
    return sum((-1) ** m * int_binom(n, m) for m in range(j, n + 1, c))


def fleck_exponent(p: int, n: int) -> int:
    return max(0, (n - 1) // (p - 1))


def weisman_exponent(p: int, alpha_: int, n: int) -> int:
    return max(0, n // euler_phi(p**alpha_) - 1)


def sun_exponent(p: int, alpha_: int, n: int) -> int:
    return max(0, (n - p ** (alpha_ - 1)) // euler_phi(p**alpha_))


def corollary_exponent(p: int, alpha_: int, n: int) -> int:
    """Sum of rounded n / (2 p^i) over i >= alpha for odd p; the single term i = alpha for p = 2."""
    if p == 2:
        return round_nearest(Fraction(n, 2 ** (alpha_ + 1)))
    f, i = 0, alpha_
    while p**i <= n:
        f += round_nearest(Fraction(n, 2 * p**i))
        i += 1
    return f


def check_integer_congruences(
    fleck_primes=(2, 3, 5, 7), sun_primes=(2, 3, 5), alpha_max: int = 2, n_max: int = 60,
    pow2_alpha_max: int = 3, pow2_n_max: int = 64,
) -> VerifyReport:
    rep = VerifyReport(
        "integer",
        {
            "fleck_primes": list(fleck_primes), "sun_primes": list(sun_primes), "alpha_max": alpha_max,
            "n_max": n_max, "pow2_alpha_max": pow2_alpha_max, "pow2_n_max": pow2_n_max,
        },
    )

    def check(name, modulus_exp, p, value, **spec):
        rep.cases_run += 1
        if value % p**modulus_exp:
            rep.failures.append(_failure(dict(spec, congruence=name, p=p), f"{p}^{modulus_exp}", value))

    with _Timer() as t:
        for p in fleck_primes:
            for n in range(1, n_max + 1):
                for j in range(p):
                    check("fleck", fleck_exponent(p, n), p, signed_class_sum(p, j, n), n=n, j=j)
        for p in sun_primes:
            for a in range(1, alpha_max + 1):
                c = p**a
                for n in range(n_max + 1):
                    for j in range(c):
                        s = signed_class_sum(c, j, n)
                        check("weisman", weisman_exponent(p, a, n), p, s, alpha=a, n=n, j=j)
                        check("sun", sun_exponent(p, a, n), p, s, alpha=a, n=n, j=j)
                        check("corollary", corollary_exponent(p, a, n), p, alternating_class_sum(c, j, n), alpha=a, n=n, j=j)
        for a in range(1, pow2_alpha_max + 1):
            c = 2**a
            for n in range(pow2_n_max + 1):
                for j in range(c):
                    check("forced-alternating", n // c, 2, alternating_class_sum(c, j, n), alpha=a, n=n, j=j)
    rep.elapsed_ms = t.ms
    return rep


# ---------------------------------------------------------------- Table 1


TABLE1_ROWS = ((8, 3, 1), (21, 5, 1), (23, 7, 3))


def table1_golden(row: int) -> Poly:
    text = resources.files("qfleck").joinpath("data", f"table1_row{row}.txt").read_text()
    return parse_poly(text)


def normalize_unit_qpower(p: Poly) -> Poly:
    """Strip the largest power of q and make the leading coefficient positive."""
    if not p:
        return p
    s = p.low_degree()
    out = Poly(p.coeffs[s:])
    return -out if out.lead < 0 else out


def table1_report() -> tuple[VerifyReport, list[dict]]:
    rep = VerifyReport("table1", {"rows": [list(r) for r in TABLE1_ROWS]})
    rows = []
    with _Timer() as t:
        for i, (n, p, j) in enumerate(TABLE1_ROWS, start=1):
            rep.cases_run += 1
            s = fleck_sum(SumSpec(p, n, j=j))
            fr = factor_report(s, predicted_exponents(p, 0, 0, n))
            golden = table1_golden(i)
            match = normalize_unit_qpower(fr.residual) == normalize_unit_qpower(golden)
            rows.append(
                {"row": i, "n": n, "p": p, "j": j, "sum": str(s), "factors": fr.to_dict(),
                 "golden": str(golden), "match": match, "report": fr}
            )
            if not match:
                rep.failures.append(_failure({"n": n, "p": p, "j": j}, str(golden), str(fr.residual)))
            if not fr.meets_prediction():
                rep.failures.append(_failure({"n": n, "p": p, "j": j, "check": "prediction"}, fr.predicted_exponents, fr.cyclo_exponents))
    rep.elapsed_ms = t.ms
    rep.info["rows"] = [{k: v for k, v in r.items() if k != "report"} for r in rows]
    return rep, rows


# ------------------------------------------------------------- sharpness


def _log_floor(n: int, p: int) -> int:
    t, v = 0, p
    while v <= n:
        t += 1
        v *= p
    return t


def predicted_prime_power(p: int, t: int, n: int) -> int:
    """Predicted Phi_{p^t} multiplicity in a class sum with c = p, P = 1, l = 0.

    Only odd multiples k*p are predicted, so for p = 2 and t >= 2 the prediction is 0.
    """
    k = p ** (t - 1)
    if k % 2 == 0:
        return 0
    return epsilon(p**t, 0, 0, n)


def _sharpness_case(case) -> dict:
    p, n = case
    T = _log_floor(n, p)
    per_j = []
    for j in range(p):
        s = fleck_sum(SumSpec(p, n, j=j))
        if not s:
            per_j.append({"j": j, "zero": True, "sharp": False})
            continue
        obs = [phi_valuation(s, p**t) for t in range(1, T + 1)]
        pred = [predicted_prime_power(p, t, n) for t in range(1, T + 1)]
        per_j.append({"j": j, "observed": obs, "predicted": pred, "sharp": obs == pred,
                      "margin": max(o - q for o, q in zip(obs, pred))})
    return {"p": p, "n": n, "witnesses": [r["j"] for r in per_j if r["sharp"]], "per_j": per_j}


def sharpness_scan(p_max: int = 7, n_max: int = 50, workers: int = 1) -> VerifyReport:
    primes = [p for p in range(2, p_max + 1) if is_prime(p)]
    rep = VerifyReport("sharpness", {"p_max": p_max, "n_max": n_max})
    cases = [(p, n) for p in primes for n in range(p, n_max + 1)]
    with _Timer() as t:
        results = _run(_sharpness_case, cases, workers)
    witnesses = {}
    worst = 0
    for r in results:
        rep.cases_run += 1
        witnesses[f"{r['p']},{r['n']}"] = r["witnesses"]
        worst = max([worst] + [x.get("margin", 0) for x in r["per_j"]])
        if not r["witnesses"]:
            rep.failures.append(_failure({"p": r["p"], "n": r["n"]}, "some sharp j", r["per_j"]))
    rep.info["witnesses"] = witnesses
    rep.info["largest_margin"] = worst
    rep.elapsed_ms = t.ms
    return rep
