"""Exact harmonic numbers against direct summation."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetaseries.harmonicnums import harmonic, harmonic_real, harmonic_t


def test_harmonic_direct_positive_orders():
    for n in range(0, 15):
        for r in range(1, 6):
            direct = sum(Fraction(1, m**r) for m in range(1, n + 1))
            assert harmonic(n, r) == direct


def test_harmonic_nonpositive_orders_are_power_sums():
    for n in range(0, 12):
        for r in (0, -1, -2, -3):
            direct = sum(Fraction(m ** (-r)) for m in range(1, n + 1))
            assert harmonic(n, r) == direct


def test_harmonic_frozen_values():
    assert harmonic(4, 1) == Fraction(25, 12)
    assert harmonic(3, 2) == Fraction(49, 36)
    assert harmonic(5, 0) == 5
    assert harmonic(0, 3) == 0


@given(st.integers(0, 200), st.integers(-3, 5))
def test_harmonic_recurrence(n, r):
    assert harmonic(n + 1, r) == harmonic(n, r) + Fraction(1, 1) / Fraction(n + 1) ** r


def test_harmonic_real_matches_exact_at_integer_order():
    for n in range(1, 12):
        for r in (1, 2, 3):
            assert harmonic_real(n, float(r)) == pytest.approx(float(harmonic(n, r)), abs=1e-13)


def test_harmonic_real_fractional_order():
    # direct double-precision sum
    for n in (1, 5, 11):
        for rho in (0.25, 1.5, 2.75):
            direct = sum(m**-rho for m in range(1, n + 1))
            assert harmonic_real(n, rho) == pytest.approx(direct, abs=1e-13)


def test_harmonic_t_direct():
    for n in range(0, 10):
        for r in (1, 2):
            for t in (Fraction(1, 3), Fraction(-2), Fraction(1)):
                direct = sum(t**m / Fraction(m**r) for m in range(1, n + 1))
                assert harmonic_t(n, r, t) == direct


def test_harmonic_t_weight_one_reduces_to_harmonic():
    for n in range(0, 12):
        assert harmonic_t(n, 3, Fraction(1)) == harmonic(n, 3)
