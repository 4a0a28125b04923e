"""Remainder-term sums: definitions, documented discrepancies, diagnostics."""

from fractions import Fraction

import pytest

from zetaseries.exactnum import binomial, factorial
from zetaseries.harmonicnums import harmonic
from zetaseries.msums import (
    MSumSpec,
    almost_linear_check,
    general_relations_check,
    m_alt,
    m_def,
    m_recurrence_residual,
    m_value,
    zeta5_diagnostic,
)
from zetaseries.coeffs import s2star_rec
from zetaseries.stirling import stirling1_signed, stirling1_unsigned


def test_spec_validation():
    with pytest.raises(ValueError):
        MSumSpec(2, 1, 0)
    with pytest.raises(ValueError):
        MSumSpec(3, 0, 0)
    with pytest.raises(ValueError):
        MSumSpec(3, 1, -1)
    with pytest.raises(ValueError):
        MSumSpec(3, 1, 0, "upside_down")


def test_m_def_direct_oracle():
    for k in (3, 4, 5):
        for d in (1, 2, 3):
            for n in (0, 1, 4):
                for reading, s1 in (("unsigned", stirling1_unsigned), ("signed", stirling1_signed)):
                    direct = sum(
                        s1(d, m) * harmonic(n, k + 1 - m) for m in range(1, d + 1)
                    )
                    assert m_def(MSumSpec(k, d, n, reading)) == direct


def test_m_alt_direct_oracle():
    for k in (3, 4, 6):
        for d in (1, 2):
            for n in (0, 1, 3, 5):
                direct = sum(
                    binomial(n, j)
                    * s2star_rec(k + 2, j)
                    * Fraction((-1) ** j, j + d)
                    * Fraction(factorial(n + d), factorial(n))
                    for j in range(1, n + 1)
                )
                assert m_alt(MSumSpec(k, d, n)) == direct


def test_documented_discrepancy():
    assert m_alt(MSumSpec(3, 1, 1)) == -1
    assert m_def(MSumSpec(3, 1, 1, "unsigned")) == 1
    assert m_alt(MSumSpec(3, 1, 2)) == Fraction(-63, 16)


def test_recurrence_residual_frozen():
    assert m_recurrence_residual(3, 1, 1, "alt") == Fraction(-191, 32)


def test_m_value_dispatch():
    assert m_value(3, 1, 1, "alt") == m_alt(MSumSpec(3, 1, 1))
    assert m_value(3, 1, 1, "def_unsigned") == m_def(MSumSpec(3, 1, 1, "unsigned"))
    assert m_value(3, 1, 1, "def_signed") == m_def(MSumSpec(3, 1, 1, "signed"))
    with pytest.raises(ValueError):
        m_value(3, 1, 1, "oracle")


def test_d_equals_one_reduces_to_harmonic():
    # s1(1, 1) = 1, so M with d = 1 from the definition is H_n^{(k)}
    for k in (3, 4, 5):
        for n in range(0, 8):
            assert m_def(MSumSpec(k, 1, n)) == harmonic(n, k)


def test_almost_linear_check_reports():
    for which in range(1, 7):
        report = almost_linear_check(which, 6, 2)
        assert report.id == "msum_almost_linear"
        assert report.status in ("exact_pass", "fail")
    with pytest.raises(ValueError):
        almost_linear_check(7, 6, 2)


def test_general_relations_families():
    report = general_relations_check(1, [Fraction(1)], Fraction(2), 6, 3)
    assert report.id == "msum_general_relation"
    with pytest.raises(ValueError):
        general_relations_check(1, [1, 2], 1, 6, 3)
    with pytest.raises(ValueError):
        general_relations_check(2, [1, 2], 0, 6, 3)
    with pytest.raises(ValueError):
        general_relations_check(4, [1], 1, 6, 3)


def test_family_degeneration_matches():
    # family 2 with b1 = b2 = 0 and family 1 with a1 = 0 describe
    # different relations but share the same value sources; both produce
    # well-formed reports on the same grid point
    r1 = general_relations_check(1, [Fraction(0)], Fraction(1), 6, 3, "alt")
    r2 = general_relations_check(2, [Fraction(0), Fraction(0)], Fraction(1), 6, 3, "alt")
    assert r1.status in ("exact_pass", "fail")
    assert r2.status in ("exact_pass", "fail")


def test_zeta5_diagnostic_shape():
    rows = zeta5_diagnostic([0, 1, 2, 3])
    assert [n for n, _ in rows] == [0, 1, 2, 3]
    assert all(isinstance(v, Fraction) for _, v in rows)
    assert rows[0][1] == 3 * m_value(5, 2, 0, "def_unsigned") - m_value(5, 3, 0, "def_unsigned")
