"""Exact arithmetic for cyclotomic polynomials Phi_n, their Gauss factor
pair (A_n, B_n) and Lucas/Aurifeuillian factor pair (C_n, D_n), a rational
power-series cross-check of both constructions, and the resulting integer
factorizations of m^(2n) * n^n +- 1 — including the shortcut that finds
the smaller Aurifeuillian factor by rounding a truncated series.
"""

from .errors import (
    AurifeuilleError,
    BadConstantTerm,
    BadRadius,
    BadResidueClass,
    InexactDivision,
    InternalInconsistency,
    NonIntegerCoefficient,
    NonIntegerStep,
    NonIntegralOracle,
    NotAurifeuillianPoint,
    NotOddSquareFree,
    NotSquareFree,
    NTooSmall,
    PrecisionTooLow,
    RoundingFailed,
    SearchCapExceeded,
)
from .numthy import (
    ClassNumberData,
    NumTheoryContext,
    PellUnit,
    class_number_neg,
    euler_phi,
    fundamental_unit,
    is_squarefree,
    jacobi,
    kronecker,
    make_context,
    moebius,
)
from .poly import IntPolynomial, symmetry_class
from .cyclotomic import (
    f_poly,
    fn_bound,
    newton_from_power_sums,
    phi_bound,
    phi_moebius,
    phi_newton,
    phi_recursive,
    ramanujan_sum,
)
from .gauss import GaussPair, algorithm_d, gauss_power_parts, verify_gauss
from .lucas import (
    LucasPair,
    algorithm_l,
    aurifeuillian_polys_eval,
    lucas_q,
    verify_lucas,
)
from .series_oracle import (
    RationalSeries,
    check_ratio_identity,
    f_series,
    g_series,
    gauss_via_series,
    lucas_via_series,
    series_exp_like,
    series_sqrt,
)
from .factorizer import (
    AurifeuilleResult,
    FactorList,
    factor_by_polynomials,
    factor_by_rounding,
    full_factorization,
    hat_f,
    ratio_estimate,
)

__version__ = "0.1.0"
