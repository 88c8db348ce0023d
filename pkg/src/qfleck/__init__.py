"""Exact alternating q-binomial sums over Z[zeta_2c][q] and their cyclotomic factors."""
from .bigpoly import Poly, divexact, divmod_monic, format_poly, parse_poly
from .cyclotomic import cyclotomic, euler_phi, phi_valuation
from .cycring import CycElem, CycPoly, ctx_new, parse_cpoly, zeta_pow
from .errors import NotDivisible, NotRational, PolyParseError
from .flecksums import (
    FactorReport,
    SumSpec,
    epsilon,
    factor_report,
    fleck_sum,
    nonalternating_class_sum,
    predicted_exponents,
    predicted_product,
    q_sum,
    residual_R,
)
from .qbinomial import int_binom, qbinom, qbinom_deriv

__all__ = [
    "CycElem", "CycPoly", "FactorReport", "NotDivisible", "NotRational", "Poly", "PolyParseError",
    "SumSpec", "ctx_new", "cyclotomic", "divexact", "divmod_monic", "epsilon", "euler_phi",
    "factor_report", "fleck_sum", "format_poly", "int_binom", "nonalternating_class_sum",
    "parse_cpoly", "parse_poly", "phi_valuation", "predicted_exponents", "predicted_product",
    "q_sum", "qbinom", "qbinom_deriv", "residual_R", "zeta_pow",
]
