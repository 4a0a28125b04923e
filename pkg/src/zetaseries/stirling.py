"""Classical combinatorial number tables.

Stirling numbers of both kinds, Bernoulli numbers and polynomials,
Faulhaber power sums, and the Stirling-2 weighted power sum.  Values are
memoized on demand; ``functools.cache`` gives lookups that are safe under
concurrent readers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .exactnum import binomial

__all__ = [
    "stirling2",
    "stirling1_unsigned",
    "stirling1_signed",
    "bernoulli_number",
    "bernoulli_poly",
    "faulhaber_sum",
    "stirling2_power_sum",
]


@cache
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, Iverson base case at n=k=0."""
    if n < 0 or k < 0:
        return 0
    if n == 0 or k == 0:
        return 1 if n == k == 0 else 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@cache
def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind (cycle counts)."""
    if n < 0 or k < 0:
        return 0
    if n == 0 or k == 0:
        return 1 if n == k == 0 else 0
    return (n - 1) * stirling1_unsigned(n - 1, k) + stirling1_unsigned(n - 1, k - 1)


def stirling1_signed(n: int, k: int) -> int:
    return (-1) ** (n - k) * stirling1_unsigned(n, k)


@cache
def bernoulli_number(n: int) -> Fraction:
    """B_n with the B_1 = -1/2 convention, via the convolution recurrence

    sum_{j=0}^{n} C(n+1, j) B_j = [n = 0].
    """
    if n < 0:
        raise ValueError("bernoulli_number requires n >= 0")
    if n == 0:
        return Fraction(1)
    if n > 2 and n % 2 == 1:
        return Fraction(0)
    acc = Fraction(1 if n == 0 else 0)
    for j in range(n):
        acc -= binomial(n + 1, j) * bernoulli_number(j)
    return acc / (n + 1)


def bernoulli_poly(n: int, x: Fraction) -> Fraction:
    """B_n(x) = sum_k C(n,k) B_k x^{n-k}, exact."""
    x = Fraction(x)
    return sum(
        (binomial(n, k) * bernoulli_number(k) * x ** (n - k) for k in range(n + 1)),
        Fraction(0),
    )


def faulhaber_sum(k: int, n: int) -> Fraction:
    """sum_{j=0}^{n-1} j^k in closed form through Bernoulli numbers."""
    if k < 0 or n < 0:
        raise ValueError("faulhaber_sum requires k, n >= 0")
    total = Fraction(0)
    for m in range(k + 1):
        total += binomial(k + 1, m) * bernoulli_number(m) * Fraction(n) ** (k + 1 - m)
    return total / (k + 1)


def stirling2_power_sum(k: int, n: int, x: Fraction) -> Fraction:
    """sum_{j=0}^{n} j^k x^j via Stirling-2 weighted derivatives.

    Evaluates sum_j S2(k,j) x^j d^j/dx^j [1 + x + ... + x^n] with exact
    polynomial differentiation.  x = 0 and x = 1 are rejected (the source
    identity's quotient form is singular there).
    """
    x = Fraction(x)
    if x == 0 or x == 1:
        raise ValueError("stirling2_power_sum requires x not in {0, 1}")
    # coefficients of the geometric polynomial 1 + x + ... + x^n
    poly = [Fraction(1)] * (n + 1)
    total = Fraction(0)
    for j in range(k + 1):
        s2 = stirling2(k, j)
        if s2:
            value = sum(c * x**i for i, c in enumerate(poly))
            total += s2 * x**j * value
        # differentiate once for the next j
        poly = [i * c for i, c in enumerate(poly)][1:]
        if not poly:
            break
    return total
