"""Basic k-order harmonic number primitives.

Pure power sums with no dependency on the coefficient tables; the
identity-level operations built on them live in :mod:`zetaseries.harmonic`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

__all__ = ["harmonic", "harmonic_real", "harmonic_t"]


def _inv_power(m: int, r: int) -> Fraction:
    """m^{-r} as an exact rational, for any integer r."""
    return Fraction(1, m**r) if r >= 0 else Fraction(m**-r)


@cache
def harmonic(n: int, r: int = 1) -> Fraction:
    """Exact H_n^{(r)} = sum_{m=1}^{n} m^{-r} for any integer order r.

    r <= 0 is the literal power sum (H_n^{(0)} = n, H_n^{(-1)} = n(n+1)/2),
    needed where derived orders cross zero.  H_0^{(r)} = 0.
    """
    if n < 0:
        raise ValueError("harmonic requires n >= 0")
    if n == 0:
        return Fraction(0)
    return harmonic(n - 1, r) + _inv_power(n, r)


def harmonic_real(n: int, rho: float) -> float:
    """H_n^{(rho)} = sum_{m=1}^{n} m^{-rho} in double precision."""
    if n < 0:
        raise ValueError("harmonic_real requires n >= 0")
    return sum(m ** (-rho) for m in range(1, n + 1))


def harmonic_t(n: int, r: int, t) -> Fraction:
    """Exact t-parameterized harmonic sum H_n^{(r)}(t) = sum t^m / m^r."""
    if n < 0:
        raise ValueError("harmonic_t requires n >= 0")
    t = Fraction(t)
    total = Fraction(0)
    for m in range(1, n + 1):
        total += t**m * _inv_power(m, r)
    return total
