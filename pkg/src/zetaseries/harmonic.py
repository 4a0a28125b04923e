"""Harmonic number identities built on the coefficient tables.

Every operation here evaluates one side of a printed identity; the other
side (direct summation, the exact coefficient table) lives with the
caller or the audit registry.  Exact paths return Fractions; real-order
paths return doubles.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .coeffs import s2star_rec
from .exactnum import binomial, factorial, falling_factorial
from .harmonicnums import harmonic, harmonic_real, harmonic_t
from .stirling import stirling1_unsigned, stirling2

__all__ = [
    "harmonic",
    "harmonic_real",
    "harmonic_t",
    "npow_inverse",
    "npow_forward",
    "harmonic_via_rec",
    "s2star_from_hnum_int",
    "s2star_from_hnum_real",
    "exp_harmonic_conv",
    "exp_harmonic_inv",
    "harmonic_rec_corollary",
    "harmonic_binomial_form",
    "harmonic_powers_of_n",
]


def npow_inverse(n: int, k: int) -> Fraction:
    """sum_{j=1}^{n} c*(k+2, j) n!/(n-j)!; equals 1/n^k exactly."""
    if n < 1:
        raise ValueError("npow_inverse requires n >= 1")
    total = Fraction(0)
    for j in range(1, n + 1):
        total += s2star_rec(k + 2, j) * falling_factorial(n, j)
    return total


def npow_forward(n: int, k: int) -> Fraction:
    """sum_{j} S2(k, j) n!/(n-j)!; equals n^k."""
    total = Fraction(0)
    for j in range(k + 1):
        total += stirling2(k, j) * falling_factorial(n, j)
    return total


def harmonic_via_rec(n: int, k: int) -> Fraction:
    """H_n^{(k)} accumulated through the 1/n^k coefficient sums."""
    total = Fraction(0)
    for i in range(1, n + 1):
        total += npow_inverse(i, k)
    return total


def s2star_from_hnum_int(k: int, j: int, variant: int) -> Fraction:
    """Finite integer-order harmonic sums equal to c*(k+2, j).

    variant 1: (j+1) sum_{i=0}^{j-1} (-1)^{j-1-i} H_{i+1}^{(k)} /
               ((j-1-i)! (i+2)!)
    variant 2: same with H_{i+2}^{(k)}/(i+2)! - 1/((i+2)! (i+2)^k) inside.
    """
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    total = Fraction(0)
    for i in range(j):
        sign = (-1) ** (j - 1 - i)
        outer = Fraction(sign, factorial(j - 1 - i))
        if variant == 1:
            total += outer * harmonic(i + 1, k) / factorial(i + 2)
        else:
            total += outer * (
                harmonic(i + 2, k) / factorial(i + 2)
                - Fraction(1, factorial(i + 2) * (i + 2) ** k)
            )
    return (j + 1) * total


def s2star_from_hnum_real(k: int, j: int, r: float, variant: int) -> float:
    """Real-order harmonic sums for c*(k+2, j), in double precision.

    variant 1 weight: 1/(i+1)^r + (j-1-i)/(i+2)^{r+1}
    variant 2 weight: 1/(i+1)^r - 1/(i+2)^r + (j+1)/(i+2)^{r+1}
    """
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    if not 0 <= r < k:
        raise ValueError("real order must satisfy 0 <= r < k")
    total = 0.0
    for i in range(j):
        sign = (-1) ** (j - 1 - i)
        h = harmonic_real(i + 1, k - r)
        prefactor = sign * h / (math.factorial(j - 1 - i) * math.factorial(i + 1))
        if variant == 1:
            weight = (i + 1) ** -r + (j - 1 - i) * (i + 2) ** -(r + 1)
        else:
            weight = (i + 1) ** -r - (i + 2) ** -r + (j + 1) * (i + 2) ** -(r + 1)
        total += prefactor * weight
    return total


def exp_harmonic_conv(k: int, j: int) -> Fraction:
    """sum_{m=0}^{j} (H_m^{(k+1)}/m!) (-1)^{j-m}/(j-m)!;
    equals c*(k+2, j)/j."""
    total = Fraction(0)
    for m in range(j + 1):
        total += (
            harmonic(m, k + 1)
            / factorial(m)
            * Fraction((-1) ** (j - m), factorial(j - m))
        )
    return total


def exp_harmonic_inv(k: int, j: int) -> Fraction:
    """sum_{i=1}^{j} c*(k+2, i) / (i (j-i)!); equals H_j^{(k+1)}/j!."""
    total = Fraction(0)
    for i in range(1, j + 1):
        total += s2star_rec(k + 2, i) / (i * factorial(j - i))
    return total


def harmonic_rec_corollary(n: int, k: int, which: int, r: float = 0.0):
    """Right-hand sides of the three harmonic-number recurrences.

    which = 1 and 2 are exact; which = 3 carries a real order r in
    [0, k) and is evaluated in double precision unless r = 0.
    """
    if n < 1:
        raise ValueError("recurrences advance from n >= 1")
    if which == 1:
        total = harmonic(n - 1, k)
        for j in range(1, n + 1):
            for i in range(1, j + 1):
                total += (
                    binomial(n, j)
                    * s2star_rec(k + 1, i)
                    * (-1) ** (j - i)
                    * factorial(i - 1)
                )
        return total
    if which == 2:
        total = harmonic(n - 1, k)
        for j in range(1, n + 1):
            for i in range(1, j + 1):
                for m in range(1, i + 1):
                    total += (
                        binomial(n, j)
                        * binomial(i, m)
                        * (-1) ** (j + m)
                        * harmonic(m, k)
                    )
        return total
    if which == 3:
        if not 0 <= r < k:
            raise ValueError("real order must satisfy 0 <= r < k")
        if r == 0:
            total = harmonic(n - 1, k)
            for j in range(1, n + 1):
                for i in range(j):
                    total += (
                        binomial(n, j)
                        * binomial(j, i + 1)
                        * (-1) ** (j - 1 - i)
                        * harmonic(i + 1, k)
                        * Fraction(j + 1, i + 2)
                    )
            return total
        total = float(harmonic(n - 1, k))
        for j in range(1, n + 1):
            for i in range(j):
                weight = (
                    (i + 1) ** -r - (i + 2) ** -r + (j + 1) * (i + 2) ** -(r + 1)
                )
                total += (
                    binomial(n, j)
                    * binomial(j, i + 1)
                    * (-1) ** (j - 1 - i)
                    * harmonic_real(i + 1, k - r)
                    * weight
                )
        return total
    raise ValueError("which must be 1, 2, or 3")


def harmonic_binomial_form(n: int, k: int) -> Fraction:
    """H_n^{(k)} = sum_{0<=j<=n} C(n+1, j+1) c*(k+2, j) j!."""
    total = Fraction(0)
    for j in range(n + 1):
        total += binomial(n + 1, j + 1) * s2star_rec(k + 2, j) * factorial(j)
    return total


def harmonic_powers_of_n(n: int, k: int) -> Fraction:
    """H_n^{(k)} as the double sum over unsigned Stirling-1 numbers and
    powers of n+1 (the binomial coefficients of harmonic_binomial_form
    expanded through c(j+1, m))."""
    total = Fraction(0)
    for j in range(n + 1):
        coeff = s2star_rec(k + 2, j)
        if coeff == 0:
            continue
        inner = Fraction(0)
        for m in range(j + 2):
            inner += (
                stirling1_unsigned(j + 1, m)
                * Fraction((-1) ** (j + 1 - m))
                * Fraction(n + 1) ** m
            )
        total += coeff * inner / (j + 1)
    return total
