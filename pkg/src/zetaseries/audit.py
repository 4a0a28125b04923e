"""Identity registry and verification runner.

Every identity the library claims is registered here as a named,
parameterized :class:`IdentitySpec` inside one of six suites (core,
harmonic, series, special, msums, fourier).  ``run_suite`` sweeps the
parameter grids — optionally across threads — and returns a
deterministic, sorted list of :class:`IdentityReport` records;
``emit_report`` serializes them byte-stably as JSON, CSV, or markdown.

Specs carry an ``assert_pass`` flag: suites that document known-broken
printed forms (all of msums, plus the *_printed variants elsewhere) are
report-only and never fail the verification exit code.
"""

from __future__ import annotations

import cmath
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence, Tuple

from . import msums, special
from .coeffs import (
    remainder_t,
    s2star_harmonic,
    s2star_heuristic,
    s2star_ogf_coeff,
    s2star_rec,
    s2star_reverse_binomial,
    s2star_scaled,
    s2star_sum,
)
from .exactnum import factorial, parse_rational
from .harmonic import (
    exp_harmonic_conv,
    exp_harmonic_inv,
    harmonic,
    harmonic_binomial_form,
    harmonic_powers_of_n,
    harmonic_rec_corollary,
    harmonic_t,
    harmonic_via_rec,
    npow_forward,
    npow_inverse,
    s2star_from_hnum_int,
    s2star_from_hnum_real,
)
from .reports import IdentityReport, exact_compare, numeric_compare
from .series import (
    TruncSeries,
    dilog_functional_eq_check,
    exp_harmonic_series,
    intro_example,
    multisection,
    stirling1_egf_check,
    transform_forward,
    transform_zeta,
)
from .stirling import bernoulli_poly

__all__ = [
    "IdentitySpec",
    "IdentityReport",
    "suite_names",
    "registered_ids",
    "assert_ids",
    "run_suite",
    "suite_passes",
    "emit_report",
    "TABLE1",
    "TABLE2",
]


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    mode: str  # "exact" or "numeric(<tolerance>)"
    points: Tuple[dict, ...]
    evaluate: Callable[[dict], IdentityReport]
    assert_pass: bool = True


def _grid(overrides: Optional[Mapping], key: str, default: Sequence) -> list:
    if overrides and key in overrides:
        return list(overrides[key])
    return list(default)


def _series_compare(identity_id: str, params: Mapping, lhs: TruncSeries, rhs: TruncSeries) -> IdentityReport:
    """Coefficientwise exact comparison of two truncated series."""
    frozen = tuple(sorted(params.items()))
    n = min(lhs.order, rhs.order)
    for i in range(n + 1):
        if lhs.coeff(i) != rhs.coeff(i):
            diff = Fraction(lhs.coeff(i)) - Fraction(rhs.coeff(i))
            return IdentityReport(
                identity_id,
                frozen,
                "fail",
                f"{diff.numerator}/{diff.denominator}" if diff.denominator != 1 else str(diff.numerator),
                witness=(f"[z^{i}] {lhs.coeff(i)}", f"[z^{i}] {rhs.coeff(i)}"),
            )
    return IdentityReport(identity_id, frozen, "exact_pass", "0")


# ---------------------------------------------------------------------
# frozen reference tables (coefficients and their scaled companions,
# rows k = 0..6, columns j = 0..8)
# ---------------------------------------------------------------------

_F = Fraction

TABLE1 = {
    0: [1, 0, 0, 0, 0, 0, 0, 0, 0],
    1: [0, 1, 0, 0, 0, 0, 0, 0, 0],
    2: [0, 1, _F(-1, 2), _F(1, 6), _F(-1, 24), _F(1, 120), _F(-1, 720), _F(1, 5040), _F(-1, 40320)],
    3: [0, 1, _F(-3, 4), _F(11, 36), _F(-25, 288), _F(137, 7200), _F(-49, 14400), _F(121, 235200), _F(-761, 11289600)],
    4: [0, 1, _F(-7, 8), _F(85, 216), _F(-415, 3456), _F(12019, 432000), _F(-13489, 2592000), _F(726301, 889056000), _F(-3144919, 28449792000)],
    5: [0, 1, _F(-15, 16), _F(575, 1296), _F(-5845, 41472), _F(874853, 25920000), _F(-336581, 51840000), _F(129973303, 124467840000), _F(-1149858589, 7965941760000)],
    6: [0, 1, _F(-31, 32), _F(3661, 7776), _F(-76111, 497664), _F(58067611, 1555200000), _F(-68165041, 9331200000), _F(187059457981, 156829478400000), _F(-3355156783231, 20074173235200000)],
}

TABLE2 = {
    0: [1, 0, 0, 0, 0, 0, 0, 0, 0],
    1: [0, 1, 0, 0, 0, 0, 0, 0, 0],
    2: [0, 1, 1, 1, 1, 1, 1, 1, 1],
    3: [0, 1, _F(3, 2), _F(11, 6), _F(25, 12), _F(137, 60), _F(49, 20), _F(363, 140), _F(761, 280)],
    4: [0, 1, _F(7, 4), _F(85, 36), _F(415, 144), _F(12019, 3600), _F(13489, 3600), _F(726301, 176400), _F(3144919, 705600)],
    5: [0, 1, _F(15, 8), _F(575, 216), _F(5845, 1728), _F(874853, 216000), _F(336581, 72000), _F(129973303, 24696000), _F(1149858589, 197568000)],
    6: [0, 1, _F(31, 16), _F(3661, 1296), _F(76111, 20736), _F(58067611, 12960000), _F(68165041, 12960000), _F(187059457981, 31116960000), _F(3355156783231, 497871360000)],
}

_TABLE3_T0 = {
    2: lambda h: _F(0),
    3: lambda h: _F(0),
    4: lambda h: h[2],
    5: lambda h: h[1] * h[2],
    6: lambda h: (h[1] ** 2 * h[2] + h[4]) / 2,
    7: lambda h: (h[1] ** 3 * h[2] + 2 * h[2] * h[3] + 3 * h[1] * h[4]) / 6,
}

_TABLE3_T1 = {
    2: lambda h: _F(2),
    3: lambda h: 2 * h[1],
    4: lambda h: h[1] ** 2,
    5: lambda h: (h[1] ** 3 + 2 * h[3]) / 3,
    6: lambda h: (h[1] ** 4 + 3 * h[2] ** 2 + 8 * h[1] * h[3]) / 12,
    7: lambda h: (h[1] ** 5 + 15 * h[1] * h[2] ** 2 + 20 * h[1] ** 2 * h[3] + 24 * h[5]) / 60,
}


def table3_expression(variant: str, k: int, j: int) -> Fraction:
    """The displayed harmonic-polynomial remainder expressions, k = 2..7."""
    h = {r: harmonic(j, r) for r in range(1, 6)}
    table = _TABLE3_T0 if variant == "t0" else _TABLE3_T1
    return table[k](h)


# ---------------------------------------------------------------------
# suite builders
# ---------------------------------------------------------------------


def _suite_core(overrides=None) -> list:
    specs = []
    points = [{"k": k, "j": j} for k in _grid(overrides, "k", range(2, 11)) for j in _grid(overrides, "j", range(1, 26))]
    specs.append(IdentitySpec(
        "core.rec_vs_sum", "exact", tuple(points),
        lambda p: exact_compare("core.rec_vs_sum", p, s2star_rec(p["k"], p["j"]), s2star_sum(p["k"], p["j"])),
    ))
    points = [{"k": k, "j": j} for k in range(2, 7) for j in _grid(overrides, "j", range(1, 26))]
    specs.append(IdentitySpec(
        "core.rec_vs_harmonic", "exact", tuple(points),
        lambda p: exact_compare("core.rec_vs_harmonic", p, s2star_rec(p["k"], p["j"]), s2star_harmonic(p["k"], p["j"])),
    ))
    points = [{"k": k, "j": j} for k in range(0, 9) for j in range(1, 9)]
    specs.append(IdentitySpec(
        "core.rec_vs_ogf", "exact", tuple(points),
        lambda p: exact_compare("core.rec_vs_ogf", p, s2star_rec(p["k"], p["j"]), s2star_ogf_coeff(p["k"], p["j"])),
    ))
    points = [{"k": k, "j": j} for k in range(0, 9) for j in _grid(overrides, "j", range(1, 26))]
    specs.append(IdentitySpec(
        "core.rec_vs_heuristic", "exact", tuple(points),
        lambda p: exact_compare("core.rec_vs_heuristic", p, s2star_rec(p["k"] + 2, p["j"]), s2star_heuristic(p["k"], p["j"])),
    ))
    points = [{"k": k, "j": j} for k in range(0, 7) for j in range(1, 13)]
    specs.append(IdentitySpec(
        "core.rec_vs_reverse_binomial", "exact", tuple(points),
        lambda p: exact_compare("core.rec_vs_reverse_binomial", p, s2star_rec(p["k"] + 2, p["j"]), s2star_reverse_binomial(p["k"], p["j"])),
    ))
    points = [{"k": k, "j": j} for k in range(0, 7) for j in range(0, 9)]
    specs.append(IdentitySpec(
        "core.table1", "exact", tuple(points),
        lambda p: exact_compare("core.table1", p, s2star_rec(p["k"], p["j"]), TABLE1[p["k"]][p["j"]]),
    ))
    points = [{"k": k, "j": j} for k in range(0, 7) for j in range(1, 9)]
    specs.append(IdentitySpec(
        "core.table2", "exact", tuple(points),
        lambda p: exact_compare("core.table2", p, s2star_scaled(p["k"], p["j"]), TABLE2[p["k"]][p["j"]]),
    ))
    points = [{"variant": v, "k": k, "j": j} for v in ("t0", "t1") for k in range(2, 8) for j in _grid(overrides, "j", range(1, 21))]
    specs.append(IdentitySpec(
        "core.table3_remainder", "exact", tuple(points),
        lambda p: exact_compare("core.table3_remainder", p, remainder_t(p["variant"], p["k"], p["j"]), table3_expression(p["variant"], p["k"], p["j"])),
    ))

    def _sign(p):
        value = s2star_rec(p["k"], p["j"])
        expected_sign = (-1) ** (p["j"] - 1)
        ok = value != 0 and (value > 0) == (expected_sign > 0)
        return IdentityReport(
            "core.sign_pattern", tuple(sorted(p.items())),
            "exact_pass" if ok else "fail",
            "0" if ok else "1",
            None if ok else (str(value), f"sign {expected_sign}"),
        )

    points = [{"k": k, "j": j} for k in range(2, 9) for j in _grid(overrides, "j", range(1, 26))]
    specs.append(IdentitySpec("core.sign_pattern", "exact", tuple(points), _sign))
    return specs


def _suite_harmonic(overrides=None) -> list:
    specs = []
    points = [{"n": n, "k": k} for n in _grid(overrides, "n", range(1, 26)) for k in range(1, 9)]
    specs.append(IdentitySpec(
        "harmonic.npow_inverse", "exact", tuple(points),
        lambda p: exact_compare("harmonic.npow_inverse", p, npow_inverse(p["n"], p["k"]), Fraction(1, p["n"] ** p["k"])),
    ))
    points = [{"n": n, "k": k} for n in range(1, 21) for k in range(0, 9)]
    specs.append(IdentitySpec(
        "harmonic.npow_forward", "exact", tuple(points),
        lambda p: exact_compare("harmonic.npow_forward", p, npow_forward(p["n"], p["k"]), Fraction(p["n"] ** p["k"])),
    ))
    points = [{"n": n, "k": k} for n in range(0, 16) for k in range(1, 6)]
    specs.append(IdentitySpec(
        "harmonic.via_rec", "exact", tuple(points),
        lambda p: exact_compare("harmonic.via_rec", p, harmonic_via_rec(p["n"], p["k"]), harmonic(p["n"], p["k"])),
    ))
    points = [{"k": k, "j": j, "variant": v} for k in range(1, 7) for j in _grid(overrides, "j", range(1, 21)) for v in (1, 2)]
    specs.append(IdentitySpec(
        "harmonic.hnum_int", "exact", tuple(points),
        lambda p: exact_compare("harmonic.hnum_int", p, s2star_from_hnum_int(p["k"], p["j"], p["variant"]), s2star_rec(p["k"] + 2, p["j"])),
    ))

    def _hnum_real(p):
        if p["r"] == 0.0:
            got = s2star_from_hnum_real(p["k"], p["j"], 0.0, p["variant"])
            return numeric_compare("harmonic.hnum_real", p, got, float(s2star_rec(p["k"] + 2, p["j"])), 1e-12)
        v1 = s2star_from_hnum_real(p["k"], p["j"], p["r"], 1)
        v2 = s2star_from_hnum_real(p["k"], p["j"], p["r"], 2)
        return numeric_compare("harmonic.hnum_real", p, v1, v2, 1e-12)

    points = [{"k": k, "j": j, "r": r, "variant": v}
              for k in (2, 3) for j in range(1, 13) for r in (0.0, 0.25, 0.5) for v in (1,)]
    specs.append(IdentitySpec("harmonic.hnum_real", "numeric(1e-12)", tuple(points), _hnum_real))
    points = [{"k": k, "j": j} for k in range(0, 6) for j in _grid(overrides, "j", range(1, 21))]
    specs.append(IdentitySpec(
        "harmonic.exp_conv", "exact", tuple(points),
        lambda p: exact_compare("harmonic.exp_conv", p, exp_harmonic_conv(p["k"], p["j"]) * p["j"], s2star_rec(p["k"] + 2, p["j"])),
    ))
    specs.append(IdentitySpec(
        "harmonic.exp_inv", "exact", tuple(points),
        lambda p: exact_compare("harmonic.exp_inv", p, exp_harmonic_inv(p["k"], p["j"]), harmonic(p["j"], p["k"] + 1) / factorial(p["j"])),
    ))
    points = [{"n": n, "k": k, "which": w} for n in _grid(overrides, "n", range(1, 13)) for k in range(1, 6) for w in (1, 2)]
    specs.append(IdentitySpec(
        "harmonic.rec_corollary_exact", "exact", tuple(points),
        lambda p: exact_compare("harmonic.rec_corollary_exact", p, harmonic_rec_corollary(p["n"], p["k"], p["which"]), harmonic(p["n"], p["k"])),
    ))

    def _rec3(p):
        got = harmonic_rec_corollary(p["n"], p["k"], 3, r=p["r"])
        return numeric_compare("harmonic.rec_corollary_real", p, float(got), float(harmonic(p["n"], p["k"])), 1e-9)

    points = [{"n": n, "k": k, "r": r} for n in range(1, 13) for k in (2, 3) for r in (0.0, 0.25, 0.5)]
    specs.append(IdentitySpec("harmonic.rec_corollary_real", "numeric(1e-9)", tuple(points), _rec3))
    points = [{"n": n, "k": k} for n in range(0, 21) for k in range(1, 6)]
    specs.append(IdentitySpec(
        "harmonic.binomial_form", "exact", tuple(points),
        lambda p: exact_compare("harmonic.binomial_form", p, harmonic_binomial_form(p["n"], p["k"]), harmonic(p["n"], p["k"])),
    ))
    specs.append(IdentitySpec(
        "harmonic.powers_of_n", "exact", tuple(points),
        lambda p: exact_compare("harmonic.powers_of_n", p, harmonic_powers_of_n(p["n"], p["k"]), harmonic(p["n"], p["k"])),
    ))
    return specs


_INTRO_DIRECT = {
    "a": lambda n, k, t, r: Fraction(1, n**k),
    "b": lambda n, k, t, r: Fraction(1, n**k * factorial(n)),
    "c": lambda n, k, t, r: harmonic(n, k),
    "d": lambda n, k, t, r: harmonic_t(n, k, t),
    "e": lambda n, k, t, r: sum(
        (Fraction(r) ** m / (m**k * factorial(m)) for m in range(1, n + 1)), Fraction(0)
    ),
    "f": lambda n, k, t, r: harmonic(n, k) / factorial(n),
}


def _make_gf(name: str, order: int) -> Tuple[TruncSeries, Callable[[int], Fraction]]:
    if name == "geometric":
        return TruncSeries.geometric(1, order), lambda n: Fraction(1)
    if name == "geometric_sq":
        g = TruncSeries.geometric(1, order)
        return g * g, lambda n: Fraction(n + 1)
    if name == "exp":
        return TruncSeries.exp_z(order), lambda n: Fraction(1, factorial(n))
    if name == "li2_over_1mz":
        g = TruncSeries.polylog(2, order) * TruncSeries.geometric(1, order)
        return g, lambda n: sum((Fraction(1, m**2) for m in range(1, n + 1)), Fraction(0))
    raise ValueError(f"unknown generating function {name!r}")


def _suite_series(overrides=None) -> list:
    specs = []

    def _tz(p):
        order = p["order"]
        G, g_of = _make_gf(p["gf"], order)
        got = transform_zeta(G, p["k"])
        want = TruncSeries([Fraction(0)] + [g_of(n) / Fraction(n ** p["k"]) for n in range(1, order + 1)])
        return _series_compare("series.transform_zeta", p, got, want)

    points = [{"gf": g, "k": k, "order": _grid(overrides, "order", [30])[0]}
              for g in ("geometric", "geometric_sq", "exp", "li2_over_1mz") for k in (1, 2, 3)]
    specs.append(IdentitySpec("series.transform_zeta", "exact", tuple(points), _tz))

    def _round_trip(p):
        order = p["order"]
        G, _ = _make_gf(p["gf"], order)
        back = transform_forward(transform_zeta(G, p["k"]), p["k"])
        want = TruncSeries([Fraction(0)] + [G.coeff(n) for n in range(1, order + 1)])
        return _series_compare("series.round_trip", p, back, want)

    points = [{"gf": g, "k": k, "order": 20} for g in ("geometric", "exp") for k in (1, 2)]
    specs.append(IdentitySpec("series.round_trip", "exact", tuple(points), _round_trip))

    def _intro(p):
        t = parse_rational(p["t"]) if "t" in p else None
        r = parse_rational(p["r"]) if "r" in p else None
        got = intro_example(p["id"], p["k"], p["u"], t=t, r=r)
        direct = _INTRO_DIRECT[p["id"]]
        want = TruncSeries(
            [Fraction(0)] + [direct(n, p["k"], t, r) for n in range(1, p["u"] + 1)]
        )
        return _series_compare("series.intro_exact", p, got, want)

    u = _grid(overrides, "u", [12])[0]
    points = []
    for k in (1, 2, 3):
        points += [{"id": e, "k": k, "u": u} for e in "abcf"]
        points += [{"id": "d", "k": k, "u": u, "t": "1/3"}, {"id": "d", "k": k, "u": u, "t": "-2"}]
        points += [{"id": "e", "k": k, "u": u, "r": "1/2"}, {"id": "e", "k": k, "u": u, "r": "3"}]
    specs.append(IdentitySpec("series.intro_exact", "exact", tuple(points), _intro))

    def _intro_g(p):
        a, b, s, u = p["a"], p["b"], p["s"], p["u"]
        got = intro_example("g", s, u, a=a, b=b)
        worst = abs(got.coeff(0) - ((1.0 / b**s) if b > 0 else 0.0))
        for n in range(1, u + 1):
            worst = max(worst, abs(got.coeff(n) - 1.0 / (a * n + b) ** s))
        return numeric_compare("series.intro_progression", p, worst, 0.0, 1e-10)

    points = [
        {"a": a, "b": b, "s": s, "u": _grid(overrides, "u", [12])[0]}
        for a in (2, 3, 4) for b in range(a) for s in (1, 2)
    ]
    specs.append(IdentitySpec("series.intro_progression", "numeric(1e-10)", tuple(points), _intro_g))

    def _multisection(p):
        order = p["order"]
        F = TruncSeries([Fraction(n + 1) for n in range(order + 1)])
        got = multisection(F, p["a"], p["b"])
        worst = 0.0
        for n in range(order + 1):
            want = float(F.coeff(n)) if n % p["a"] == p["b"] else 0.0
            worst = max(worst, abs(got.coeff(n) - want))
        return numeric_compare("series.multisection", p, worst, 0.0, 1e-10)

    points = [{"a": a, "b": b, "order": 64} for a in range(2, 9) for b in (0, 1, a - 1)]
    specs.append(IdentitySpec("series.multisection", "numeric(1e-10)", tuple(points), _multisection))

    def _exp_log(p):
        coeffs = [Fraction(1)] + [Fraction((-1) ** n * (n + 2), 2 * n + 1) for n in range(1, p["order"] + 1)]
        S = TruncSeries(coeffs)
        return _series_compare("series.exp_log_roundtrip", p, S.log().exp(), S)

    specs.append(IdentitySpec("series.exp_log_roundtrip", "exact", ({"order": 15},), _exp_log))

    def _egf(p):
        lhs, rhs = stirling1_egf_check(p["k"], p["order"])
        return _series_compare("series.stirling1_egf", p, lhs, rhs)

    points = [{"k": k, "order": 12} for k in range(0, 5)]
    specs.append(IdentitySpec("series.stirling1_egf", "exact", tuple(points), _egf))

    def _egf_printed(p):
        lhs, rhs = stirling1_egf_check(p["k"], p["order"])
        return _series_compare("series.stirling1_egf_printed_sign", p, lhs, rhs.scale(Fraction((-1) ** p["k"])))

    specs.append(IdentitySpec(
        "series.stirling1_egf_printed_sign", "exact", tuple({"k": k, "order": 8} for k in (1, 2, 3)),
        _egf_printed, assert_pass=False,
    ))

    def _dilog(p):
        passed, witness = dilog_functional_eq_check(p["order"])
        if passed:
            return IdentityReport("series.dilog_functional_eq", tuple(sorted(p.items())), "exact_pass", "0")
        n, lhs, rhs = witness
        return IdentityReport(
            "series.dilog_functional_eq", tuple(sorted(p.items())), "fail",
            str(Fraction(lhs) - Fraction(rhs)), (f"[z^{n}] {lhs}", f"[z^{n}] {rhs}"),
        )

    specs.append(IdentitySpec(
        "series.dilog_functional_eq", "exact", tuple({"order": o} for o in (10, 40)), _dilog,
    ))

    def _exp_harm(p):
        got = exp_harmonic_series(p["k"], p["order"])
        want = TruncSeries([harmonic(n, p["k"]) / factorial(n) for n in range(p["order"] + 1)])
        return _series_compare("series.exp_harmonic", p, got, want)

    specs.append(IdentitySpec(
        "series.exp_harmonic", "exact", tuple({"k": k, "order": 20} for k in (1, 2, 3)), _exp_harm,
    ))

    def _h1_egf(p):
        order = p["order"]
        h1 = TruncSeries([harmonic(n, 1) / factorial(n) for n in range(order + 1)])
        exp_neg = TruncSeries([Fraction(0)] + [Fraction(-1)] + [Fraction(0)] * (order - 1)).exp()
        lhs = h1 * exp_neg
        rhs = TruncSeries([Fraction(0)] + [-Fraction((-1) ** n, factorial(n) * n) for n in range(1, order + 1)])
        return _series_compare("series.h1_egf", p, lhs, rhs)

    specs.append(IdentitySpec("series.h1_egf", "exact", ({"order": 20},), _h1_egf))
    return specs


def _suite_special(overrides=None) -> list:
    specs = []
    J = _grid(overrides, "J", [400])[0]

    def _three_way(p):
        v1 = special.li_new_series(p["s"], p["z"], J).value
        v2 = special.li_classic_series(p["s"], p["z"], J).value
        v3 = special.li_direct_sum(p["s"], p["z"], J).value
        worst = max(abs(v1 - v2), abs(v1 - v3), abs(v2 - v3))
        return numeric_compare("special.li_three_way", p, worst, 0.0, 1e-10)

    points = [{"s": s, "z": z} for s in range(1, 6) for z in (-0.8, -0.5, -0.1, 0.2, 0.4)]
    specs.append(IdentitySpec("special.li_three_way", "numeric(1e-10)", tuple(points), _three_way))

    specs.append(IdentitySpec(
        "special.zeta_star_series", "numeric(1e-8)", tuple({"s": s} for s in range(1, 7)),
        lambda p: numeric_compare(
            "special.zeta_star_series", p,
            special.zeta_star(p["s"], 120, "series"), special.zeta_star(p["s"], method="closed"), 1e-8,
        ),
    ))
    specs.append(IdentitySpec(
        "special.zeta_star_harmonic_form", "numeric(1e-8)", tuple({"s": s} for s in range(1, 5)),
        lambda p: numeric_compare(
            "special.zeta_star_harmonic_form", p,
            special.zeta_star_harmonic_form(p["s"], 120), special.zeta_star(p["s"], method="closed"), 1e-8,
        ),
    ))
    specs.append(IdentitySpec(
        "special.zeta_star_euler_form", "numeric(5e-6)", tuple({"s": s} for s in (3, 4, 5)),
        lambda p: numeric_compare(
            "special.zeta_star_euler_form", p,
            special.zeta_star_euler_form(p["s"], 200), special.zeta_star(p["s"], method="closed"), 5e-6,
        ),
    ))

    def _euler4_printed(p):
        log2 = math.log(2)
        total = log2**4 / 24
        for j in range(1, 201):
            h1 = float(harmonic(j, 1))
            total += (h1**2 * float(harmonic(j, 2)) + h1 * float(harmonic(j, 3))) / 2.0 ** (j + 2)
        return numeric_compare(
            "special.euler_form_s4_printed", p, total, special.zeta_star(4, method="closed"), 5e-6
        )

    specs.append(IdentitySpec(
        "special.euler_form_s4_printed", "numeric(5e-6)", ({"s": 4},), _euler4_printed, assert_pass=False,
    ))
    specs.append(IdentitySpec(
        "special.trilog_functional_eq", "numeric(1e-7)",
        tuple({"z": z} for z in (-0.5, -0.1, -0.9)),
        lambda p: special.trilog_functional_eq_check(p["z"]),
    ))

    def _li(s, x):
        if x < 0.5:
            return special.li_new_series(s, x, 400).value
        return special.li_direct_sum(s, x, 4000).value

    def _trilog_printed(p):
        z = p["z"]
        u = -z / (1 - z)
        v = 1 / (1 - z)
        log1mz = math.log(1 - z)
        lhs = _li(3, z)
        rhs = (
            -log1mz**3 / 6
            + log1mz**2 * math.log(u) / 2
            - log1mz * (_li(2, v) + _li(2, u))
            - _li(3, v)
            - _li(3, u)
            - special.zeta_ref(3)
        )
        return numeric_compare("special.trilog_printed_sign", p, lhs, rhs, 1e-7)

    specs.append(IdentitySpec(
        "special.trilog_printed_sign", "numeric(1e-7)", ({"z": -0.5},), _trilog_printed, assert_pass=False,
    ))

    def _hurwitz(p):
        got = special.hurwitz_phi(p["z"], p["s"], p["alpha"], p["beta"], 200).value
        direct = sum(
            p["z"] ** n / (p["alpha"] * n + p["beta"]) ** p["s"] for n in range(1, 400)
        )
        return numeric_compare("special.hurwitz_direct", p, got, direct, 1e-9)

    points = [
        {"z": 0.4, "s": 2, "alpha": 1, "beta": 0},
        {"z": -0.5, "s": 1, "alpha": 2, "beta": 1},
        {"z": 0.3, "s": 3, "alpha": 3, "beta": 2},
    ]
    specs.append(IdentitySpec("special.hurwitz_direct", "numeric(1e-9)", tuple(points), _hurwitz))
    return specs


def _bernoulli_oracle(order: int, x: float) -> float:
    frac = Fraction(x).limit_denominator(10**6) % 1
    return float(bernoulli_poly(order, frac)) / factorial(order)


def _suite_fourier(overrides=None) -> list:
    specs = []

    specs.append(IdentitySpec(
        "fourier.b1_value", "numeric(1e-6)", ({"x": 1.25, "J": 60},),
        lambda p: numeric_compare("fourier.b1_value", p, special.bernoulli_fourier(1, p["x"], p["J"]), -0.25, 1e-6),
    ))
    points = [{"order": n, "x": x, "J": 60} for n in (1, 2, 3) for x in (0.25, 1.25, 2.75)]
    specs.append(IdentitySpec(
        "fourier.series_vs_poly", "numeric(1e-5)", tuple(points),
        lambda p: numeric_compare(
            "fourier.series_vs_poly", p,
            special.bernoulli_fourier(p["order"], p["x"], p["J"]),
            _bernoulli_oracle(p["order"], p["x"]), 1e-5,
        ),
    ))

    def _convergence(p):
        oracle = _bernoulli_oracle(p["order"], p["x"])
        devs = [abs(special.bernoulli_fourier(p["order"], p["x"], J) - oracle) for J in (20, 40, 80)]
        excess = max(0.0, devs[1] - 1.1 * devs[0]) + max(0.0, devs[2] - 1.1 * devs[1])
        return numeric_compare("fourier.convergence", p, excess, 0.0, 0.0)

    points = [{"order": n, "x": x} for n in (1, 2, 3) for x in (0.2, 1.25, 2.75)]
    specs.append(IdentitySpec("fourier.convergence", "numeric(0)", tuple(points), _convergence))

    def _closed(p):
        value = special.bernoulli_closed_logforms(p["order"], p["x"])
        if abs(value.imag) > 1e-9:
            return numeric_compare("fourier.closed_logforms", p, abs(value.imag), 0.0, 1e-9)
        return numeric_compare(
            "fourier.closed_logforms", p, value.real, _bernoulli_oracle(p["order"], p["x"]), 1e-8
        )

    points = [{"order": n, "x": x} for n in (1, 2) for x in (0.25, 0.3, 0.75)]
    specs.append(IdentitySpec("fourier.closed_logforms", "numeric(1e-8)", tuple(points), _closed))

    def _printed(p):
        # the displayed bracket series: coefficient series without the j!
        # factor, summed at E = e^{2 pi i (x-1/2)} and its conjugate
        n, x = p["order"], p["x"]
        E = cmath.exp(2j * math.pi * (x - 0.5))
        total = 0j
        for j in range(1, 61):
            coeff = complex(s2star_rec(n + 2, j))
            plus = E**j / (1 + E) ** (j + 1)
            minus = (1 / E) ** j / (1 + 1 / E) ** (j + 1)
            if n % 2 == 0:
                total += coeff * (plus + minus)
            else:
                total += coeff * (plus - minus)
        k2 = (n - 2) // 2 if n % 2 == 0 else (n - 1) // 2
        if n % 2 == 0:
            value = ((-1) ** (k2 + 1) / (2 * math.pi) ** n) * total
        else:
            value = ((-1) ** k2 / ((2 * math.pi) ** n * 1j)) * total
        return numeric_compare(
            "fourier.printed_series_reading", p, value.real, _bernoulli_oracle(n, x), 1e-5
        )

    points = [{"order": n, "x": 0.25} for n in (1, 2)]
    specs.append(IdentitySpec(
        "fourier.printed_series_reading", "numeric(1e-5)", tuple(points), _printed, assert_pass=False,
    ))
    return specs


def _suite_msums(overrides=None) -> list:
    specs = []
    k_grid = _grid(overrides, "k", range(4, 9))
    d_grid = _grid(overrides, "d", range(1, 5))
    n_grid = _grid(overrides, "n", range(0, 13))

    def _def_vs_alt(p):
        spec = msums.MSumSpec(p["k"], p["d"], p["n"], p["reading"])
        return exact_compare("msums.def_vs_alt", p, msums.m_def(spec), msums.m_alt(spec))

    points = [{"k": k, "d": d, "n": n, "reading": rd}
              for k in k_grid for d in d_grid for n in n_grid for rd in ("unsigned", "signed")]
    specs.append(IdentitySpec("msums.def_vs_alt", "exact", tuple(points), _def_vs_alt, assert_pass=False))

    def _recurrence(p):
        residual = msums.m_recurrence_residual(p["k"], p["d"], p["n"], p["source"])
        return exact_compare("msums.recurrence", p, residual, Fraction(0))

    points = [{"k": k, "d": d, "n": n, "source": s}
              for k in (3, 4, 5) for d in (1, 2, 3) for n in range(0, 7)
              for s in ("def_unsigned", "def_signed", "alt")]
    specs.append(IdentitySpec("msums.recurrence", "exact", tuple(points), _recurrence, assert_pass=False))

    points = [{"which": w, "k": k, "n": n, "source": s}
              for w in range(1, 7) for k in (5, 6, 7) for n in (0, 1, 2, 3)
              for s in ("def_unsigned", "alt")]
    specs.append(IdentitySpec(
        "msum_almost_linear", "exact", tuple(points),
        lambda p: msums.almost_linear_check(p["which"], p["k"], p["n"], source=p["source"]),
        assert_pass=False,
    ))

    def _general(p):
        coeffs = [Fraction(c) for c in p["coeffs"].split(",")] if p["coeffs"] else []
        return msums.general_relations_check(
            p["family"], coeffs, Fraction(p["d"]), p["k"], p["n"], p["source"]
        )

    points = [
        {"family": 1, "coeffs": "0", "d": "1", "k": 5, "n": 2, "source": "alt"},
        {"family": 1, "coeffs": "1", "d": "2", "k": 6, "n": 3, "source": "def_unsigned"},
        {"family": 2, "coeffs": "0,0", "d": "1", "k": 5, "n": 2, "source": "alt"},
        {"family": 2, "coeffs": "1,-1", "d": "1", "k": 6, "n": 2, "source": "alt"},
        {"family": 3, "coeffs": "1,-1,0", "d": "2", "k": 6, "n": 3, "source": "alt"},
    ]
    specs.append(IdentitySpec("msum_general_relation", "exact", tuple(points), _general, assert_pass=False))

    def _discrepancy(p):
        alt = msums.m_alt(msums.MSumSpec(3, 1, 1))
        deff = msums.m_def(msums.MSumSpec(3, 1, 1, "unsigned"))
        residual = msums.m_recurrence_residual(3, 1, 1, "alt")
        ok = alt == -1 and deff == 1 and residual == Fraction(-191, 32)
        return IdentityReport(
            "msums.documented_discrepancy", tuple(sorted(p.items())),
            "exact_pass" if ok else "fail", "0" if ok else "1",
            None if ok else (f"alt={alt} def={deff}", f"residual={residual}"),
        )

    specs.append(IdentitySpec(
        "msums.documented_discrepancy", "exact", ({"k": 3, "d": 1, "n": 1},), _discrepancy,
    ))
    return specs


_SUITES = {
    "core": _suite_core,
    "harmonic": _suite_harmonic,
    "series": _suite_series,
    "special": _suite_special,
    "msums": _suite_msums,
    "fourier": _suite_fourier,
}


def suite_names() -> tuple:
    return tuple(sorted(_SUITES))


def _build(name: str, overrides=None) -> list:
    if name not in _SUITES:
        raise KeyError(f"unknown suite {name!r}; available: {', '.join(suite_names())}")
    return _SUITES[name](overrides)


def registered_ids(name: str) -> tuple:
    return tuple(spec.id for spec in _build(name))


def assert_ids(name: str) -> frozenset:
    return frozenset(spec.id for spec in _build(name) if spec.assert_pass)


def run_suite(name: str, overrides=None, threads: int = 1) -> list:
    """Evaluate every grid point of every identity in the suite.

    The report list is sorted by (id, params) and is identical across
    runs and thread counts.
    """
    specs = _build(name, overrides)
    tasks = [(spec.evaluate, point) for spec in specs for point in spec.points]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda t: t[0](t[1]), tasks))
    else:
        reports = [evaluate(point) for evaluate, point in tasks]
    reports.sort(key=lambda r: r.sort_key())
    return reports


def suite_passes(name: str, reports: Sequence[IdentityReport]) -> bool:
    """Exit-code policy: only identities registered with assert_pass can
    fail a suite; report-only identities never do."""
    asserted = assert_ids(name)
    return all(r.passed for r in reports if r.id in asserted)


def _params_str(report: IdentityReport) -> str:
    return ";".join(f"{k}={v}" for k, v in report.params)


def emit_report(reports: Sequence[IdentityReport], format: str = "json") -> str:
    if format == "json":
        payload = [
            {
                "id": r.id,
                "params": {k: v for k, v in r.params},
                "status": r.status,
                "residual": r.residual,
                "witness": list(r.witness) if r.witness else None,
            }
            for r in reports
        ]
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))
    if format == "csv":
        lines = ["id,params,status,residual"]
        for r in reports:
            lines.append(f"{r.id},{_params_str(r)},{r.status},{r.residual}")
        return "\n".join(lines) + "\n"
    if format == "markdown":
        lines = ["| id | params | status | residual |", "| --- | --- | --- | --- |"]
        for r in reports:
            lines.append(f"| {r.id} | {_params_str(r)} | {r.status} | {r.residual} |")
        return "\n".join(lines) + "\n"
    raise ValueError("format must be json, csv, or markdown")
