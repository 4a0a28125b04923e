"""Generalized zeta-series transformation coefficients.

The two-index rationals written ``c*(k, j)`` here turn the j-th
derivatives of a sequence OGF into the OGF of the sequence divided by
n^{k-2}.  They are computed by several independent routes that must agree
exactly on their common domain:

* the non-triangular recurrence (``s2star_rec``),
* the closed binomial sum (``s2star_sum``),
* harmonic-number closed forms for k = 2..6 (``s2star_harmonic``),
* a harmonic-number heuristic recurrence (``s2star_heuristic``),
* coefficient extraction from the column OGFs in k (``s2star_ogf_coeff``),
* a reverse binomial transform of truncated polylog series
  (``s2star_reverse_binomial``).

Derived quantities: the scaled table, the t0/t1 remainder functions
against unsigned Stirling-1 numbers, and the alpha*n+beta generalization.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .exactnum import binomial, factorial
from .harmonicnums import harmonic
from .stirling import stirling1_unsigned

__all__ = [
    "s2star_rec",
    "s2star_sum",
    "s2star_harmonic",
    "s2star_heuristic",
    "s2star_ogf_coeff",
    "s2star_scaled",
    "remainder_t",
    "s2star_general_f",
    "s2star_reverse_binomial",
]


@cache
def s2star_rec(k: int, j: int) -> Fraction:
    """c*(k, j) by the two-index recurrence

    c*(k, j) = -(1/j) c*(k, j-1) + (1/j) c*(k-1, j) + [k = j = 1]

    with base rows c*(0, j) = [j = 0], c*(1, j) = [j = 1] and base column
    c*(k, 0) = [k = 0].
    """
    if k < 0 or j < 0:
        return Fraction(0)
    if k == 0:
        return Fraction(1 if j == 0 else 0)
    if j == 0:
        return Fraction(0)
    if k == 1:
        return Fraction(1 if j == 1 else 0)
    return (-s2star_rec(k, j - 1) + s2star_rec(k - 1, j)) / j


def s2star_sum(k: int, j: int) -> Fraction:
    """Closed binomial sum, valid for k >= 2, j >= 1:

    c*(k, j) = sum_{m=1}^{j} C(j, m) (-1)^{j-m} / (j! m^{k-2}).
    """
    if k < 2:
        raise ValueError("closed sum requires k >= 2")
    if j < 1:
        raise ValueError("closed sum requires j >= 1")
    total = Fraction(0)
    for m in range(1, j + 1):
        total += Fraction(binomial(j, m) * (-1) ** (j - m), m ** (k - 2))
    return total / factorial(j)


def _harmonic_bracket(k: int, j: int) -> Fraction:
    """The harmonic-number polynomial multiplying (-1)^{j-1}/(c k!) j!."""
    h1 = harmonic(j, 1)
    if k == 2:
        return Fraction(1)
    if k == 3:
        return h1
    h2 = harmonic(j, 2)
    if k == 4:
        return h1**2 + h2
    h3 = harmonic(j, 3)
    if k == 5:
        return h1**3 + 3 * h1 * h2 + 2 * h3
    h4 = harmonic(j, 4)
    return h1**4 + 6 * h1**2 * h2 + 3 * h2**2 + 8 * h1 * h3 + 6 * h4


_HARMONIC_DENOM = {2: 1, 3: 1, 4: 2, 5: 6, 6: 24}


def s2star_harmonic(k: int, j: int) -> Fraction:
    """Printed harmonic closed forms, k = 2..6 only."""
    if k not in _HARMONIC_DENOM:
        raise ValueError("harmonic closed forms exist for k in 2..6")
    if j < 1:
        raise ValueError("harmonic closed forms require j >= 1")
    sign = Fraction((-1) ** (j - 1))
    return sign * _harmonic_bracket(k, j) / (_HARMONIC_DENOM[k] * factorial(j))


def s2star_heuristic(k: int, j: int) -> Fraction:
    """Heuristic harmonic recurrence returning c*(k+2, j):

    c*(k+2, j) = sum_{0 <= m < k} (H_j^{(m+1)} / k) c*(k+1-m, j)
                 + ((-1)^{j-1} / j!) [k = 0].
    """
    if j < 1:
        raise ValueError("heuristic recurrence requires j >= 1")
    if k == 0:
        return Fraction((-1) ** (j - 1), factorial(j))
    total = Fraction(0)
    for m in range(k):
        total += harmonic(j, m + 1) * s2star_rec(k + 1 - m, j)
    return total / k


def s2star_ogf_coeff(k: int, j: int) -> Fraction:
    """[z^k] of the column OGF in k for fixed j, via truncated division.

    For j = 1 the OGF is z/(1-z); for j >= 2 it is
    (-1)^{j+1} z^2 / ((1-z)(2-z)...(j-z)).
    """
    if j < 1:
        raise ValueError("column OGFs require j >= 1")
    if k < 0:
        return Fraction(0)
    if j == 1:
        return Fraction(1 if k >= 1 else 0)
    if k < 2:
        return Fraction(0)
    # reciprocal of prod_{i=1}^{j} (i - z), truncated to order k-2
    order = k - 2
    denom = [Fraction(1)]
    for i in range(1, j + 1):
        nxt = [Fraction(0)] * min(len(denom) + 1, order + 1)
        for p, c in enumerate(denom):
            if p <= order:
                nxt[p] += i * c
            if p + 1 <= order:
                nxt[p + 1] -= c
        denom = nxt
    inv = [Fraction(0)] * (order + 1)
    inv[0] = 1 / denom[0]
    for n in range(1, order + 1):
        acc = Fraction(0)
        for i in range(1, min(n, len(denom) - 1) + 1):
            acc += denom[i] * inv[n - i]
        inv[n] = -acc / denom[0]
    return Fraction((-1) ** (j + 1)) * inv[order]


def s2star_scaled(k: int, j: int) -> Fraction:
    """c*(k, j) * (-1)^{j-1} * j! (the all-positive scaled table)."""
    if j < 1:
        raise ValueError("scaled table is defined for j >= 1")
    return s2star_rec(k, j) * (-1) ** (j - 1) * factorial(j)


def remainder_t(variant: str, k: int, j: int) -> Fraction:
    """Remainder terms t0/t1 of the scaled coefficients against
    unsigned Stirling-1 numbers:

    t0(k, j) = scaled(k, j) - c(j+1, k-1)/j!
    t1(k, j) = scaled(k, j) + c(j+1, k-1)/j!
    """
    if variant not in ("t0", "t1"):
        raise ValueError("variant must be 't0' or 't1'")
    if not 2 <= k <= 7:
        raise ValueError("remainder terms are tabulated for k in 2..7")
    s1_part = Fraction(stirling1_unsigned(j + 1, k - 1), factorial(j))
    if variant == "t0":
        return s2star_scaled(k, j) - s1_part
    return s2star_scaled(k, j) + s1_part


def s2star_general_f(k: int, j: int, alpha, beta) -> Fraction:
    """Modified coefficients for f(n) = alpha*n + beta:

    (1/j!) sum_{m=1}^{j} C(j, m) (-1)^{j-m} / (alpha*m + beta)^{k-2}.

    alpha = 1, beta = 0 reproduces the closed sum.
    """
    if k < 2:
        raise ValueError("generalized coefficients require k >= 2")
    if j < 1:
        raise ValueError("generalized coefficients require j >= 1")
    alpha, beta = Fraction(alpha), Fraction(beta)
    total = Fraction(0)
    for m in range(1, j + 1):
        f_m = alpha * m + beta
        if f_m == 0:
            raise ZeroDivisionError(f"f({m}) = 0 for alpha={alpha}, beta={beta}")
        total += binomial(j, m) * Fraction((-1) ** (j - m)) / f_m ** (k - 2)
    return total / factorial(j)


def s2star_reverse_binomial(k: int, j: int) -> Fraction:
    """c*(k+2, j) = ((-1)^j / (j-1)!) [z^j] Li_{k+1}(-z/(1-z)),

    with both series truncated at order j over exact rationals.
    """
    if j < 1:
        raise ValueError("reverse binomial transform requires j >= 1")
    # u(z) = -z/(1-z) = -(z + z^2 + ... + z^j)
    u = [Fraction(0)] + [Fraction(-1)] * j
    # compose Li_{k+1}(u) by Horner from the top coefficient down
    result = [Fraction(0)] * (j + 1)
    for n in range(j, 0, -1):
        li_n = Fraction(1, n ** (k + 1))
        # result = result * u + li_n * u  <=>  (result + li_n) * u
        result[0] += li_n
        nxt = [Fraction(0)] * (j + 1)
        for p, c in enumerate(result):
            if c == 0:
                continue
            for q, d in enumerate(u):
                if d == 0 or p + q > j:
                    continue
                nxt[p + q] += c * d
        result = nxt
    return Fraction((-1) ** j, factorial(j - 1)) * result[j]
