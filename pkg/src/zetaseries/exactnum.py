"""Exact rational arithmetic and complex floating-point helpers.

All exact computation in this package is carried out over
:class:`fractions.Fraction`, which keeps values in canonical form
(positive denominator, gcd-reduced) after every operation.  The helpers
here wrap the handful of integer/complex primitives the rest of the
package needs, with hard errors instead of silent NaN propagation.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

# Canonical exact value type used throughout the package.
Rational = Fraction

__all__ = [
    "Rational",
    "rational",
    "parse_rational",
    "binomial",
    "factorial",
    "falling_factorial",
    "root_of_unity",
    "require_finite",
]


def rational(numerator, denominator=1) -> Fraction:
    """Exact rational from integers (or anything Fraction accepts)."""
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Fraction:
    """Parse a fraction string like ``-3/4`` or ``7``.

    Accepts the Unicode minus sign so values copied from typeset tables
    round-trip.
    """
    return Fraction(text.strip().replace("−", "-"))


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n or k < 0."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial requires n >= 0")
    return math.factorial(n)


def falling_factorial(n: int, j: int) -> int:
    """n!/(n-j)! = n (n-1) ... (n-j+1); zero when j > n."""
    if j < 0:
        raise ValueError("falling_factorial requires j >= 0")
    if j > n:
        return 0
    return math.perm(n, j)


def root_of_unity(a: int, m: int) -> complex:
    """exp(2*pi*i*m/a) to double precision."""
    if a < 1:
        raise ValueError("root_of_unity requires a >= 1")
    return cmath.exp(2j * cmath.pi * m / a)


def require_finite(z: complex) -> complex:
    """Reject NaN/inf components; numeric error states are hard errors."""
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ArithmeticError(f"non-finite complex value: {z!r}")
    return z
