import json

import pytest

from qfleck import verify as V
from qfleck.bigpoly import Poly
from qfleck.cyclotomic import cyclotomic
from qfleck.cycring import CycPoly, cpoly_to_bigpoly, ctx_new
from qfleck.flecksums import SumSpec, q_sum, residual_R

from conftest import P

SMALL = V.SweepGrid(c=(1, 2), k=(1,), l=(0,), d=(0, 1), z=(0,), degP=(0,), n_span=2)


def strip_timing(d):
    d = dict(d)
    d.pop("elapsed_ms")
    return d


def test_theorem_case_examples():
    one = "1"
    assert V._theorem_case((1, 1, 0, 0, 0, 0, 2, None, one, False))["observed"] == 1
    assert V._theorem_case((2, 1, 0, 0, 0, 0, 2, None, one, False))["observed"] == 1
    r = V._theorem_case((1, 1, 0, 1, 0, 0, 4, None, one, False))
    assert r["observed"] == 2 and r["ok"]
    r = V._theorem_case((4, 1, 0, 0, 0, 0, 7, 1, one, False))
    assert r["observed"] == 1 and r["ok"]
    assert V._theorem_case((3, 1, 0, 0, 0, 0, 8, 1, one, False))["observed"] >= 1


def test_theorem_case_flags_shortfall():
    # demand far more than the sum carries; the case must come back not ok
    r = V._theorem_case((1, 1, 0, 5, 0, 0, 4, None, "1", False))
    assert not r["ok"] and r["required"] == 6


def test_single_class_sweep_agrees_with_full_sweep():
    g = V.SweepGrid(c=(1,), k=(1, 3), l=(0, 1), d=(0, 1), z=(0, 1), degP=(0, 1), n_span=2)
    main, fleck = V.check_theorem_main(g), V.check_theorem_fleck(g)
    assert main.passed and fleck.passed
    assert main.cases_run == fleck.cases_run


def test_small_sweeps_pass():
    for fn in (V.check_theorem_main, V.check_theorem_fleck):
        rep = fn(SMALL)
        assert rep.passed, rep.failures
        assert rep.cases_run > 0


def test_explicit_n_list_skips_sub_threshold_values():
    g = V.SweepGrid(c=(2,), k=(1,), l=(0,), d=(1,), z=(0,), degP=(0,), n=(1, 2, 6, 7))
    rep = V.check_theorem_main(g)
    assert rep.cases_run == 2


def test_cap_limits_cases():
    g = V.SweepGrid(c=(1, 2, 3), cap=10)
    assert V.check_theorem_fleck(g).cases_run <= 10


def test_restated_examples():
    assert residual_R(SumSpec(1, 4)) == CycPoly.embed(ctx_new(1), Poly.const(1))
    assert q_sum(SumSpec(1, 7)).is_zero()
    assert residual_R(SumSpec(3, 8, j=1)) * cyclotomic(3) == V.fleck_sum(SumSpec(3, 8, j=1))
    rep = V.check_prop_restated(SMALL, n_max=12)
    assert rep.passed and rep.cases_run > 0


def test_classical_identities():
    for rep in (V.check_gaussian(20), V.check_euler(8), V.check_alt_poly(8, per_n=2), V.check_q_lucas(5, 16)):
        assert rep.passed, (rep.check_id, rep.failures[:3])


def test_euler_examples():
    def at_one(spec):
        return cpoly_to_bigpoly(q_sum(spec))(1)

    assert at_one(SumSpec(1, 3, P="x^3")) == -6
    assert at_one(SumSpec(1, 3, P="x^2")) == 0
    assert V.gaussian_closed_form(4) == P("(1-q)(1-q^3)")


def test_q_lucas_examples():
    from qfleck.bigpoly import divmod_monic
    from qfleck.qbinomial import qbinom

    assert divmod_monic(qbinom(2, 1), cyclotomic(2))[1] == Poly()
    assert divmod_monic(qbinom(4, 2) - qbinom(1, 0) * qbinom(1, 2), cyclotomic(3))[1] == Poly()


def test_recursion_examples():
    c, P1 = 1, "1"
    assert V.chu_vandermonde_rhs(c, P1, 5, 0) == q_sum(SumSpec(c, 5))
    assert q_sum(SumSpec(1, 2, P1, 0, 1)) == V.eq4_rhs(1, P1, 0, 2)
    lhs, rhs = V.filter_sides(2, 0, P1, 0, 0, 4)
    assert lhs == rhs


def test_recursions_quick():
    rep = V.check_recursions(c_max=2, quick=True)
    assert rep.passed, rep.failures[:3]


def test_residuals_check():
    rep = V.check_residuals(n_max_closed=20, c_max=2, n_max_rec=14)
    assert rep.passed, rep.failures[:3]


def test_integer_examples():
    assert V.signed_class_sum(3, 0, 5) == -9 and V.fleck_exponent(3, 5) == 2
    assert V.alternating_class_sum(2, 0, 8) % 2 ** V.corollary_exponent(2, 1, 8) == 0
    assert V.corollary_exponent(2, 1, 8) == 2
    assert V.alternating_class_sum(2, 0, 4) == -4


def test_integer_check_catches_a_bad_exponent(monkeypatch):
    monkeypatch.setattr(V, "fleck_exponent", lambda p, n: n)
    rep = V.check_integer_congruences(n_max=10, alpha_max=1, pow2_n_max=4)
    assert not rep.passed


def test_table1_golden_round_trip():
    for row in (1, 2, 3):
        g = V.table1_golden(row)
        assert V.parse_poly(str(g)) == g
    assert V.table1_golden(2).degree == 94
    assert V.table1_golden(3).degree == 64


def test_table1_rows():
    rep, rows = V.table1_report()
    assert rep.passed
    assert [r["match"] for r in rows] == [True, True, True]
    assert rows[0]["report"].cyclo_exponents == {3: 1, 8: 1}


def test_sharpness_small():
    rep = V.sharpness_scan(p_max=3, n_max=12)
    assert rep.passed
    assert 1 in rep.info["witnesses"]["3,8"]
    assert V.predicted_prime_power(2, 2, 20) == 0


def test_determinism():
    a = V.check_theorem_fleck(SMALL).to_dict()
    b = V.check_theorem_fleck(SMALL, workers=2).to_dict()
    assert strip_timing(a) == strip_timing(b)
    assert V.sample_P(3, 2, seed=4) == V.sample_P(3, 2, seed=4)


def test_json_shape():
    rep = V.check_gaussian(5)
    d = json.loads(rep.to_json())
    assert set(d) == {"schema_version", "check_id", "grid", "cases_run", "failures", "elapsed_ms", "info"}
    assert d["schema_version"] == V.SCHEMA_VERSION
    assert isinstance(d["failures"], list)


def test_grid_rejects_even_k():
    with pytest.raises(ValueError):
        V.SweepGrid(k=(2,))
