"""Truncated power series, the zeta transform, and the worked examples."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaseries.exactnum import factorial
from zetaseries.harmonicnums import harmonic, harmonic_t
from zetaseries.series import (
    TruncSeries,
    dilog_functional_eq_check,
    exp_harmonic_series,
    intro_example,
    multisection,
    stirling1_egf_check,
    transform_forward,
    transform_zeta,
)

small_fracs = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=8
)
series_strategy = st.lists(small_fracs, min_size=3, max_size=8).map(TruncSeries)


# --- ring / calculus structure -------------------------------------------


@given(series_strategy, series_strategy)
def test_multiplication_commutes(f, g):
    assert (f * g).coeffs == (g * f).coeffs


@given(series_strategy, series_strategy, series_strategy)
def test_multiplication_distributes(f, g, h):
    n = min(f.order, g.order, h.order)
    lhs = f * (g + h)
    rhs = f * g + f * h
    for i in range(n + 1):
        assert lhs.coeff(i) == rhs.coeff(i)


@given(series_strategy)
def test_derivative_of_antiderivative(f):
    assert list(f.antiderivative().derivative().coeffs) == list(f.coeffs)


@given(series_strategy)
def test_inverse_round_trip(f):
    if f.coeff(0) == 0:
        with pytest.raises(ZeroDivisionError):
            f.inverse()
        return
    product = f * f.inverse()
    assert product.coeff(0) == 1
    for i in range(1, product.order + 1):
        assert product.coeff(i) == 0


@given(series_strategy)
def test_exp_log_round_trip(f):
    # normalize to unit constant term so log is defined
    g = TruncSeries([Fraction(1)] + [f.coeff(i) for i in range(1, f.order + 1)])
    assert list(g.log().exp().coeffs) == list(g.coeffs)


def test_exp_matches_exponential_series():
    z = TruncSeries([Fraction(0), Fraction(1)] + [Fraction(0)] * 8)
    assert list(z.exp().coeffs) == [Fraction(1, factorial(n)) for n in range(10)]


def test_compose_geometric():
    # 1/(1-z) composed with z/(1+z) gives 1+z exactly (all higher terms 0)
    outer = TruncSeries.geometric(1, 8)
    inner = TruncSeries([Fraction(0), Fraction(1)] + [Fraction(0)] * 6) * TruncSeries.geometric(-1, 8)
    result = outer.compose(inner)
    assert result.coeff(0) == 1
    assert result.coeff(1) == 1
    assert all(result.coeff(n) == 0 for n in range(2, 9))


def test_shift_grows_order():
    f = TruncSeries([Fraction(1), Fraction(2)])
    shifted = f.shift(3)
    assert shifted.order == 4
    assert list(shifted.coeffs) == [0, 0, 0, Fraction(1), Fraction(2)]


# --- the transform --------------------------------------------------------


def test_transform_zeta_geometric():
    for k in (1, 2, 3):
        result = transform_zeta(TruncSeries.geometric(1, 25), k)
        assert result.coeff(0) == 0
        for n in range(1, 26):
            assert result.coeff(n) == Fraction(1, n**k)


def test_transform_zeta_exponential():
    result = transform_zeta(TruncSeries.exp_z(20), 2)
    for n in range(1, 21):
        assert result.coeff(n) == Fraction(1, n**2 * factorial(n))


def test_transform_forward_power_weighting():
    f = TruncSeries([Fraction(0)] + [Fraction(1, n) for n in range(1, 16)])
    result = transform_forward(f, 3)
    for n in range(1, 16):
        assert result.coeff(n) == Fraction(n**3, n)


def test_transform_round_trip():
    G = TruncSeries.geometric(1, 18)
    back = transform_forward(transform_zeta(G, 2), 2)
    for n in range(1, 19):
        assert back.coeff(n) == G.coeff(n)


# --- worked introduction examples ----------------------------------------


def test_intro_example_a_matches_display():
    result = intro_example("a", 1, 3)
    assert [result.coeff(n) for n in range(4)] == [0, 1, Fraction(1, 2), Fraction(1, 3)]


def test_intro_example_c_matches_display():
    result = intro_example("c", 2, 2)
    assert [result.coeff(n) for n in range(3)] == [0, 1, Fraction(5, 4)]


def test_intro_example_f_matches_display():
    result = intro_example("f", 1, 2)
    assert [result.coeff(n) for n in range(3)] == [0, 1, Fraction(3, 4)]


def test_intro_examples_direct_sums():
    u = 10
    for k in (1, 2):
        a = intro_example("a", k, u)
        b = intro_example("b", k, u)
        c = intro_example("c", k, u)
        d = intro_example("d", k, u, t=Fraction(1, 3))
        e = intro_example("e", k, u, r=Fraction(1, 2))
        f = intro_example("f", k, u)
        for n in range(1, u + 1):
            assert a.coeff(n) == Fraction(1, n**k)
            assert b.coeff(n) == Fraction(1, n**k * factorial(n))
            assert c.coeff(n) == harmonic(n, k)
            assert d.coeff(n) == harmonic_t(n, k, Fraction(1, 3))
            assert e.coeff(n) == sum(
                Fraction(1, 2) ** m / (m**k * factorial(m)) for m in range(1, n + 1)
            )
            assert f.coeff(n) == harmonic(n, k) / factorial(n)


def test_intro_example_g_progression():
    for a, b, s in ((2, 0, 1), (2, 1, 2), (3, 1, 1), (4, 3, 2)):
        result = intro_example("g", s, 10, a=a, b=b)
        want0 = 1.0 / b**s if b > 0 else 0.0
        assert abs(result.coeff(0) - want0) < 1e-10
        for n in range(1, 11):
            assert abs(result.coeff(n) - 1.0 / (a * n + b) ** s) < 1e-10


def test_intro_example_rejects_bad_input():
    with pytest.raises(ValueError):
        intro_example("z", 1, 3)
    with pytest.raises(ValueError):
        intro_example("a", 1, 0)
    with pytest.raises(ValueError):
        intro_example("g", 1, 3, a=1, b=0)
    with pytest.raises(ValueError):
        intro_example("d", 1, 3)  # missing t


# --- multisection ---------------------------------------------------------


@settings(deadline=None)
@given(st.integers(2, 6), st.data())
def test_multisection_extracts_residue_class(a, data):
    b = data.draw(st.integers(0, a - 1))
    F = TruncSeries([Fraction(n**2 - 3 * n + 1, 3) for n in range(20)])
    picked = multisection(F, a, b)
    for n in range(20):
        want = float(F.coeff(n)) if n % a == b else 0.0
        assert abs(picked.coeff(n) - want) < 1e-10


def test_multisection_partition_of_unity():
    F = TruncSeries([Fraction(1, n + 1) for n in range(16)])
    total = multisection(F, 3, 0) + multisection(F, 3, 1) + multisection(F, 3, 2)
    for n in range(16):
        assert abs(total.coeff(n) - float(F.coeff(n))) < 1e-12


# --- classical series identities -----------------------------------------


def test_dilog_functional_eq_exact_to_order_40():
    passed, witness = dilog_functional_eq_check(40)
    assert passed, witness


def test_stirling1_egf_corrected_form():
    for k in range(5):
        lhs, rhs = stirling1_egf_check(k, 12)
        assert lhs.coeffs == rhs.coeffs


def test_stirling1_egf_printed_sign_fails_for_odd_k():
    lhs, rhs = stirling1_egf_check(3, 8)
    assert lhs.coeffs != rhs.scale(Fraction(-1)).coeffs


def test_exp_harmonic_series_coefficients():
    for k in (1, 2, 3):
        result = exp_harmonic_series(k, 18)
        for n in range(19):
            assert result.coeff(n) == harmonic(n, k) / factorial(n)
