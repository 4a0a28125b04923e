"""Remainder-term sums M_{k+1}^{(d)}(n) and the almost-linear
harmonic-number recurrences built on them.

Everything here is evaluated exactly and *reported*, not asserted: the
defining Stirling-weighted sum (``m_def``) and the displayed alternate
binomial sum (``m_alt``) disagree as written (e.g. m_def(3,1,1) = 1
while m_alt(3,1,1) = -1), and the displayed homogeneous recurrence
fails for both.  The functions compute each side verbatim under a
selectable Stirling-1 sign reading so the discrepancies themselves are
reproducible artifacts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .coeffs import s2star_rec
from .exactnum import binomial, factorial
from .harmonicnums import harmonic
from .reports import IdentityReport, exact_compare
from .stirling import stirling1_signed, stirling1_unsigned

__all__ = [
    "MSumSpec",
    "m_def",
    "m_alt",
    "m_value",
    "m_recurrence_residual",
    "almost_linear_check",
    "general_relations_check",
    "zeta5_diagnostic",
]

_READINGS = ("unsigned", "signed")
_SOURCES = ("def_unsigned", "def_signed", "alt")


@dataclass(frozen=True)
class MSumSpec:
    k: int
    d: int
    n: int
    stirling_reading: str = "unsigned"

    def __post_init__(self):
        if self.k <= 2:
            raise ValueError("M sums require k > 2")
        if self.d < 1:
            raise ValueError("M sums require d >= 1")
        if self.n < 0:
            raise ValueError("M sums require n >= 0")
        if self.stirling_reading not in _READINGS:
            raise ValueError(f"stirling_reading must be one of {_READINGS}")


def m_def(spec: MSumSpec) -> Fraction:
    """M_{k+1}^{(d)}(n) = sum_{m=1}^{d} s1(d, m) H_n^{(k+1-m)} under the
    chosen Stirling-1 sign reading (orders <= 0 are literal power sums)."""
    s1 = stirling1_unsigned if spec.stirling_reading == "unsigned" else stirling1_signed
    total = Fraction(0)
    for m in range(1, spec.d + 1):
        total += s1(spec.d, m) * harmonic(spec.n, spec.k + 1 - m)
    return total


def m_alt(spec: MSumSpec) -> Fraction:
    """The displayed alternate binomial sum, exactly as written:

    sum_{j=1}^{n} C(n, j) c*(k+2, j) (-1)^j / (j+d) * (n+d)!/n!
    """
    shift = Fraction(factorial(spec.n + spec.d), factorial(spec.n))
    total = Fraction(0)
    for j in range(1, spec.n + 1):
        total += (
            binomial(spec.n, j)
            * s2star_rec(spec.k + 2, j)
            * Fraction((-1) ** j, j + spec.d)
            * shift
        )
    return total


def m_value(k: int, d: int, n: int, source: str) -> Fraction:
    """M_{k+1}^{(d)}(n) from the selected source formula."""
    if source == "alt":
        return m_alt(MSumSpec(k, d, n))
    if source == "def_unsigned":
        return m_def(MSumSpec(k, d, n, "unsigned"))
    if source == "def_signed":
        return m_def(MSumSpec(k, d, n, "signed"))
    raise ValueError(f"source must be one of {_SOURCES}")


def m_recurrence_residual(k: int, d: int, n: int, source: str) -> Fraction:
    """Residual of the displayed homogeneous recurrence

    M_{k+1}(n) - M_{k+1}(n+1) + (n+2) M_{k+2}(n+1) - (n+2) M_{k+2}(n)

    computed from the chosen source; zero iff the recurrence holds."""
    return (
        m_value(k, d, n, source)
        - m_value(k, d, n + 1, source)
        + (n + 2) * m_value(k + 1, d, n + 1, source)
        - (n + 2) * m_value(k + 1, d, n, source)
    )


def almost_linear_check(which: int, k: int, n: int, m=Fraction(0), source: str = "alt") -> IdentityReport:
    """Residual report for one of the six displayed almost-linear
    harmonic-number recurrences (the undefined orders written p-3 and
    p-4 are read as k-3 and k-4)."""
    if which not in range(1, 7):
        raise ValueError("which must be in 1..6")
    m = Fraction(m)

    def M(d: int) -> Fraction:
        return m_value(k, d, n, source)

    H = lambda r: harmonic(n, r)
    if which == 1:
        lhs, rhs = H(k), H(k - 2) - 3 * M(2) + M(3)
    elif which == 2:
        lhs, rhs = 2 * H(k), -3 * H(k - 1) - H(k - 2) - M(3)
    elif which == 3:
        lhs, rhs = 7 * H(k), -12 * H(k - 1) + 6 * H(k - 2) - H(k - 3) - M(2) + M(4)
    elif which == 4:
        lhs, rhs = 5 * H(k), -9 * H(k - 1) - 5 * H(k - 2) - H(k - 3) - M(2) + M(3) - M(4)
    elif which == 5:
        lhs, rhs = H(k), 2 * H(k - 2) - H(k - 3) + M(2) - 4 * M(3) + M(4)
    else:
        lhs = H(k)
        rhs = (
            (1 - m) * H(k - 2)
            + m * H(k - 4)
            - (12 * m + 3) * M(2)
            + (24 * m + 1) * M(3)
            - 10 * m * M(4)
            + m * M(5)
        )
    params = {"which": which, "k": k, "n": n, "source": source}
    if which == 6:
        params["m"] = str(m)
    return exact_compare("msum_almost_linear", params, lhs, rhs)


_FAMILY_SIZES = {1: 1, 2: 2, 3: 3}


def general_relations_check(
    family: int, coeffs: Sequence, d, k: int, n: int, source: str = "alt"
) -> IdentityReport:
    """Residual report for the parameterized relations the displayed
    recurrences specialize, with free constants a1 / b1,b2 / c1,c2,c3
    and a common scale d != 0."""
    if family not in _FAMILY_SIZES:
        raise ValueError("family must be in 1..3")
    if len(coeffs) != _FAMILY_SIZES[family]:
        raise ValueError(
            f"family {family} takes {_FAMILY_SIZES[family]} constants, got {len(coeffs)}"
        )
    d = Fraction(d)
    if d == 0:
        raise ValueError("the scale d must be nonzero")
    coeffs = [Fraction(c) for c in coeffs]

    def M(order: int) -> Fraction:
        return m_value(k, order, n, source)

    H = lambda r: harmonic(n, r)
    lhs = d * H(k)
    if family == 1:
        (a1,) = coeffs
        rhs = a1 * H(k - 1) + (a1 + d) * H(k - 2) + (2 * a1 + 3 * d) * M(2) + (a1 + d) * M(3)
    elif family == 2:
        b1, b2 = coeffs
        rhs = (
            b1 * H(k - 1)
            + b2 * H(k - 2)
            - (b1 - b2 + d) * H(k - 3)
            - (6 * b1 - 4 * b2 + 7 * d) * M(2)
            + (6 * b1 - 5 * b2 + 6 * d) * M(3)
            - (b1 - b2 + d) * M(4)
        )
    else:
        c1, c2, c3 = coeffs
        rhs = (
            c1 * H(k - 1)
            + c2 * H(k - 2)
            + c3 * H(k - 3)
            + (c1 - c2 + c3 + d) * H(k - 4)
            - (14 * c1 - 12 * c2 + 8 * c3 + 15 * d) * M(2)
            + (25 * c1 - 24 * c2 + 19 * c3 + 25 * d) * M(3)
            - (10 * c1 - 10 * c2 + 9 * c3 + 10 * d) * M(4)
            + (c1 - c2 + c3 + d) * M(5)
        )
    params = {
        "family": family,
        "coeffs": ",".join(str(c) for c in coeffs),
        "d": str(d),
        "k": k,
        "n": n,
        "source": source,
    }
    return exact_compare("msum_general_relation", params, lhs, rhs)


def zeta5_diagnostic(n_values: Sequence[int], source: str = "def_unsigned") -> list:
    """Partial values of 3 M_6^{(2)}(n) - M_6^{(3)}(n) (the combination
    whose limit is compared against zeta(3) - zeta(5)); diagnostic only,
    no convergence assertion."""
    out = []
    for n in n_values:
        value = 3 * m_value(5, 2, n, source) - m_value(5, 3, n, source)
        out.append((n, value))
    return out
