"""Zeta-series generating-function transform coefficients and the
identities built on them.

Layering, lowest first: exact arithmetic (:mod:`exactnum`), Stirling and
Bernoulli numbers (:mod:`stirling`), exact harmonic numbers
(:mod:`harmonicnums`), the transform coefficient table (:mod:`coeffs`),
harmonic-number identities (:mod:`harmonic`), truncated power series and
the transform itself (:mod:`series`), numeric special functions
(:mod:`special`), remainder-term sums (:mod:`msums`), and the identity
verification registry (:mod:`audit`) behind the :mod:`cli`.
"""

from .audit import emit_report, run_suite, suite_names, suite_passes
from .coeffs import (
    remainder_t,
    s2star_general_f,
    s2star_harmonic,
    s2star_heuristic,
    s2star_ogf_coeff,
    s2star_rec,
    s2star_reverse_binomial,
    s2star_scaled,
    s2star_sum,
)
from .exactnum import Rational, parse_rational
from .harmonic import (
    harmonic_binomial_form,
    harmonic_powers_of_n,
    harmonic_rec_corollary,
    harmonic_via_rec,
    npow_forward,
    npow_inverse,
)
from .harmonicnums import harmonic, harmonic_real, harmonic_t
from .msums import MSumSpec, m_alt, m_def, m_recurrence_residual, m_value
from .reports import IdentityReport
from .series import TruncSeries, intro_example, multisection, transform_forward, transform_zeta
from .special import (
    EvalResult,
    bernoulli_closed_logforms,
    bernoulli_fourier,
    hurwitz_phi,
    li_classic_series,
    li_direct_sum,
    li_new_series,
    trilog_functional_eq_check,
    zeta_ref,
    zeta_star,
    zeta_star_euler_form,
    zeta_star_harmonic_form,
)
from .stirling import (
    bernoulli_number,
    bernoulli_poly,
    faulhaber_sum,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
)

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "parse_rational",
    "stirling2",
    "stirling1_unsigned",
    "stirling1_signed",
    "bernoulli_number",
    "bernoulli_poly",
    "faulhaber_sum",
    "harmonic",
    "harmonic_real",
    "harmonic_t",
    "s2star_rec",
    "s2star_sum",
    "s2star_harmonic",
    "s2star_heuristic",
    "s2star_ogf_coeff",
    "s2star_scaled",
    "s2star_general_f",
    "s2star_reverse_binomial",
    "remainder_t",
    "npow_inverse",
    "npow_forward",
    "harmonic_via_rec",
    "harmonic_rec_corollary",
    "harmonic_binomial_form",
    "harmonic_powers_of_n",
    "TruncSeries",
    "transform_forward",
    "transform_zeta",
    "intro_example",
    "multisection",
    "EvalResult",
    "li_new_series",
    "li_classic_series",
    "li_direct_sum",
    "hurwitz_phi",
    "zeta_ref",
    "zeta_star",
    "zeta_star_harmonic_form",
    "zeta_star_euler_form",
    "trilog_functional_eq_check",
    "bernoulli_fourier",
    "bernoulli_closed_logforms",
    "MSumSpec",
    "m_def",
    "m_alt",
    "m_value",
    "m_recurrence_residual",
    "IdentityReport",
    "run_suite",
    "suite_names",
    "suite_passes",
    "emit_report",
    "__version__",
]
