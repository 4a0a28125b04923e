"""Truncated formal power series, univariate and bivariate.

``TruncSeries`` is a dense series with a fixed truncation order; the
coefficient type is duck-typed (Fraction for exact work, complex for
root-of-unity constructions).  Binary operations truncate to the smaller
operand order, so every retained coefficient is exact in rational mode.

``BivarTruncSeries`` nests a z-series inside each power of an outer
variable w, supporting the [w^u] extractions used by the introduction
examples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .coeffs import s2star_rec
from .exactnum import binomial, factorial, root_of_unity
from .harmonicnums import harmonic_t
from .stirling import stirling1_unsigned, stirling2

__all__ = [
    "TruncSeries",
    "BivarTruncSeries",
    "geom_derivative",
    "transform_forward",
    "transform_zeta",
    "intro_example",
    "multisection",
    "stirling1_egf_check",
    "exp_harmonic_series",
    "dilog_functional_eq_check",
]


class TruncSeries:
    """Dense truncated power series with coefficients [0..order]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = list(coeffs)
        if order is not None:
            if len(coeffs) > order + 1:
                coeffs = coeffs[: order + 1]
            else:
                coeffs += [_zero_like(coeffs)] * (order + 1 - len(coeffs))
        if not coeffs:
            raise ValueError("series needs at least the constant coefficient")
        self.coeffs = tuple(coeffs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([Fraction(0)] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([Fraction(1)] + [Fraction(0)] * order)

    @classmethod
    def geometric(cls, t, order: int) -> "TruncSeries":
        """1/(1 - t z) truncated."""
        t = t if isinstance(t, (complex, float)) else Fraction(t)
        c, out = 1 * t**0, []
        for _ in range(order + 1):
            out.append(c)
            c = c * t
        return cls(out)

    @classmethod
    def exp_z(cls, order: int) -> "TruncSeries":
        return cls([Fraction(1, factorial(n)) for n in range(order + 1)])

    @classmethod
    def log_one_minus_z(cls, order: int) -> "TruncSeries":
        return cls([Fraction(0)] + [Fraction(-1, n) for n in range(1, order + 1)])

    @classmethod
    def polylog(cls, s: int, order: int) -> "TruncSeries":
        """Truncated Li_s(z) = sum_{n>=1} z^n/n^s."""
        return cls([Fraction(0)] + [Fraction(1, n**s) for n in range(1, order + 1)])

    # -- basic queries ------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int):
        return self.coeffs[n] if 0 <= n <= self.order else _zero_like(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r})"

    def agrees_with(self, other: "TruncSeries") -> bool:
        """Coefficientwise equality through the smaller order."""
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, order)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs])

    def scale(self, factor) -> "TruncSeries":
        return TruncSeries([factor * c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        out = [_zero_like(self.coeffs)] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: order - i + 1]):
                if b == 0:
                    continue
                out[i + j] += a * b
        return TruncSeries(out)

    __rmul__ = __mul__

    def shift(self, m: int) -> "TruncSeries":
        """Multiply by z^m; the order grows by m (no information lost)."""
        z = _zero_like(self.coeffs)
        return TruncSeries([z] * m + list(self.coeffs))

    def derivative(self) -> "TruncSeries":
        """Formal d/dz; the result order drops by one."""
        if self.order == 0:
            return TruncSeries([_zero_like(self.coeffs)])
        return TruncSeries([n * c for n, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "TruncSeries":
        """Formal integral with zero constant term; order grows by one."""
        out = [_zero_like(self.coeffs)]
        for n, c in enumerate(self.coeffs):
            out.append(c / (n + 1))
        return TruncSeries(out)

    def inverse(self) -> "TruncSeries":
        """Reciprocal series; requires an invertible constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series has no reciprocal: zero constant term")
        inv = [1 / c0]
        for n in range(1, self.order + 1):
            acc = _zero_like(self.coeffs)
            for i in range(1, n + 1):
                acc += self.coeffs[i] * inv[n - i]
            inv.append(-acc / c0)
        return TruncSeries(inv)

    def __truediv__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(1 / Fraction(other) if not isinstance(other, (float, complex)) else 1.0 / other)
        return self * other.inverse()

    def exp(self) -> "TruncSeries":
        """exp of a series with zero constant term (rational closure)."""
        if self.coeffs[0] != 0:
            raise ValueError("series exp requires a zero constant term")
        out = [self.coeffs[0] ** 0]  # one of the coefficient type
        for n in range(1, self.order + 1):
            acc = _zero_like(self.coeffs)
            for k in range(1, n + 1):
                acc += k * self.coeffs[k] * out[n - k]
            out.append(acc / n)
        return TruncSeries(out)

    def log(self) -> "TruncSeries":
        """log of a unit series (constant term 1)."""
        if self.coeffs[0] != 1:
            raise ValueError("series log requires constant term 1")
        return (self.derivative() * self.inverse().truncate(self.order - 1)).antiderivative()

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """self(inner(z)); inner must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("series composition requires inner constant term 0")
        order = min(self.order, inner.order)
        result = TruncSeries.zero(order)
        one = TruncSeries.one(order)
        for c in reversed(self.coeffs[: order + 1]):
            result = result * inner.truncate(order) + one.scale(c)
        return result

    def scale_arg(self, c) -> "TruncSeries":
        """f(c z): multiply coefficient n by c^n."""
        out, p = [], c**0
        for coeff in self.coeffs:
            out.append(coeff * p)
            p = p * c
        return TruncSeries(out)

    def eval(self, x):
        """Horner evaluation of the truncated polynomial at x."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def as_fraction_strings(self) -> list[str]:
        """Exact coefficients rendered as ``num/den`` strings."""
        return [
            f"{c.numerator}/{c.denominator}" if isinstance(c, Fraction) else repr(c)
            for c in self.coeffs
        ]


def _zero_like(coeffs) -> object:
    for c in coeffs:
        return 0 * c
    return Fraction(0)


class BivarTruncSeries:
    """Truncated series in w whose coefficients are TruncSeries in z."""

    __slots__ = ("wcoeffs",)

    def __init__(self, wcoeffs: Sequence[TruncSeries]):
        if not wcoeffs:
            raise ValueError("bivariate series needs at least the w^0 slice")
        self.wcoeffs = tuple(wcoeffs)

    @property
    def order_w(self) -> int:
        return len(self.wcoeffs) - 1

    @property
    def order_z(self) -> int:
        return self.wcoeffs[0].order

    @classmethod
    def zero(cls, order_w: int, order_z: int) -> "BivarTruncSeries":
        return cls([TruncSeries.zero(order_z) for _ in range(order_w + 1)])

    @classmethod
    def from_w(cls, series: TruncSeries, order_z: int) -> "BivarTruncSeries":
        """Embed a series in w alone."""
        return cls(
            [
                TruncSeries([c] + [0 * c] * order_z)
                for c in series.coeffs
            ]
        )

    @classmethod
    def from_z(cls, series: TruncSeries, order_w: int) -> "BivarTruncSeries":
        """Embed a series in z alone (w^0 slice only)."""
        zero = TruncSeries.zero(series.order)
        return cls([series] + [zero] * order_w)

    @classmethod
    def from_diagonal(cls, diag: Sequence, order_w: int, order_z: int) -> "BivarTruncSeries":
        """Series sum_n d_n (wz)^n from its diagonal coefficients."""
        out = []
        for a in range(order_w + 1):
            coeffs = [_zero_like(diag) if diag else Fraction(0)] * (order_z + 1)
            if a <= order_z and a < len(diag):
                coeffs[a] = diag[a]
            out.append(TruncSeries(coeffs))
        return cls(out)

    def __add__(self, other):
        n = min(self.order_w, other.order_w)
        return BivarTruncSeries(
            [self.wcoeffs[i] + other.wcoeffs[i] for i in range(n + 1)]
        )

    def scale(self, factor) -> "BivarTruncSeries":
        return BivarTruncSeries([s.scale(factor) for s in self.wcoeffs])

    def __mul__(self, other):
        if not isinstance(other, BivarTruncSeries):
            return self.scale(other)
        order_w = min(self.order_w, other.order_w)
        order_z = min(self.order_z, other.order_z)
        out = [TruncSeries.zero(order_z) for _ in range(order_w + 1)]
        for i, a in enumerate(self.wcoeffs[: order_w + 1]):
            if a.is_zero():
                continue
            for j, b in enumerate(other.wcoeffs[: order_w - i + 1]):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + (a.truncate(order_z) * b.truncate(order_z))
        return BivarTruncSeries(out)

    __rmul__ = __mul__

    def extract_w(self, u: int) -> TruncSeries:
        """[w^u] of the bivariate series, as an exact z-series."""
        if not 0 <= u <= self.order_w:
            raise ValueError(f"w-power {u} outside truncation order {self.order_w}")
        return self.wcoeffs[u]


# ---------------------------------------------------------------------
# transforms and the introduction examples
# ---------------------------------------------------------------------


def geom_derivative(t, j: int, order: int) -> TruncSeries:
    """Truncated series of t^j j! / (1 - t z)^{j+1}, the j-th derivative
    of the geometric series 1/(1 - t z)."""
    t = t if isinstance(t, (complex, float)) else Fraction(t)
    out = []
    power = t**j
    for n in range(order + 1):
        out.append(factorial(j) * binomial(n + j, j) * power)
        power = power * t
    return TruncSeries(out)


def transform_forward(G: TruncSeries, m: int) -> TruncSeries:
    """sum_{j=0}^{m} S2(m, j) z^j G^{(j)}(z); coefficient n is n^m g_n."""
    order = G.order
    result = TruncSeries.zero(order)
    deriv = G
    for j in range(m + 1):
        s2 = stirling2(m, j)
        if s2:
            result = result + deriv.shift(j).truncate(order).scale(Fraction(s2))
        if deriv.order == 0 and j < m:
            break
        deriv = deriv.derivative()
    return result


def transform_zeta(G: TruncSeries, k: int) -> TruncSeries:
    """sum_{j>=1} c*(k+2, j) z^j G^{(j)}(z), truncated at G's order;
    coefficient n is g_n / n^k for n >= 1."""
    if G.order < 1:
        raise ValueError("transform needs order >= 1")
    order = G.order
    result = TruncSeries.zero(order)
    deriv = G.derivative()
    for j in range(1, order + 1):
        result = result + deriv.shift(j).truncate(order).scale(s2star_rec(k + 2, j))
        if deriv.order == 0:
            break
        deriv = deriv.derivative()
    return result


def _diag_geom_pow(c, j: int, order: int) -> list:
    """Diagonal of (c wz)^j j! / (1 - c wz)^{j+1}: d_n = j! C(n,j) c^n."""
    out, power = [], c**0
    for n in range(order + 1):
        out.append(factorial(j) * binomial(n, j) * power)
        power = power * c
    return out


def _diag_geom_pow2(j: int, order: int) -> list:
    """Diagonal of (wz)^j j! / (1 - wz)^{j+2}: d_n = j! C(n+1, j+1)."""
    return [Fraction(factorial(j) * binomial(n + 1, j + 1)) for n in range(order + 1)]


def _diag_exp_pow(c, j: int, order: int) -> list:
    """Diagonal of (c wz)^j e^{c wz}: d_n = c^n / (n-j)! for n >= j."""
    out, power = [], c**0
    for n in range(order + 1):
        out.append(power / factorial(n - j) if n >= j else 0 * power)
        power = power * c
    return out


def _diag_exp_shifted(j: int, order: int) -> list:
    """Diagonal of (wz)^j e^{wz} (j + 1 + wz) / (j + 1)."""
    out = []
    for n in range(order + 1):
        if n < j:
            out.append(Fraction(0))
            continue
        value = Fraction(j + 1, factorial(n - j))
        if n > j:
            value += Fraction(1, factorial(n - j - 1))
        out.append(value / (j + 1))
    return out


def intro_example(example_id: str, k: int, u: int, *, t=None, r=None, a=None, b=None):
    """Bracketed bivariate constructions of the introduction, collapsed
    by [w^u] extraction (examples a-f, exact) or by root-of-unity
    multisection in fractional powers (example g, complex doubles).

    Returns the truncated z-series whose coefficients match the direct
    left-hand sums.
    """
    if u < 1:
        raise ValueError("truncation order u must be >= 1")
    if example_id in "abcdef":
        return _intro_example_exact(example_id, k, u, t=t, r=r)
    if example_id == "g":
        if a is None or b is None or a < 2 or not 0 <= b < a:
            raise ValueError("example g requires a >= 2 and 0 <= b < a")
        return _intro_example_progression(k, u, a, b)
    raise ValueError(f"unknown introduction example {example_id!r}")


def _intro_example_exact(example_id: str, k: int, u: int, *, t=None, r=None) -> TruncSeries:
    w_geom = BivarTruncSeries.from_w(TruncSeries.geometric(1, u), u)
    wz_geom = BivarTruncSeries.from_diagonal([Fraction(1)] * (u + 1), u, u)
    total = BivarTruncSeries.zero(u, u)
    for j in range(1, u + 1):
        coeff = s2star_rec(k + 2, j)
        if coeff == 0:
            continue
        if example_id == "a":
            term = BivarTruncSeries.from_diagonal(_diag_geom_pow(Fraction(1), j, u), u, u) * w_geom
        elif example_id == "b":
            term = BivarTruncSeries.from_diagonal(_diag_exp_pow(Fraction(1), j, u), u, u) * w_geom
        elif example_id == "c":
            term = BivarTruncSeries.from_diagonal(_diag_geom_pow2(j, u), u, u) * w_geom
        elif example_id == "d":
            if t is None:
                raise ValueError("example d needs the scalar t")
            term = (
                BivarTruncSeries.from_diagonal(_diag_geom_pow(Fraction(t), j, u), u, u)
                * wz_geom
                * w_geom
            )
        elif example_id == "e":
            if r is None:
                raise ValueError("example e needs the scalar r")
            term = (
                BivarTruncSeries.from_diagonal(_diag_exp_pow(Fraction(r), j, u), u, u)
                * wz_geom
                * w_geom
            )
        else:  # "f"
            term = BivarTruncSeries.from_diagonal(_diag_exp_shifted(j, u), u, u) * w_geom
        total = total + term.scale(coeff)
    return total.extract_w(u)


def _intro_example_progression(s: int, u: int, a: int, b: int) -> TruncSeries:
    """Example (g): arithmetic-progression weights 1/(an+b)^s.

    Works in y = z^{1/a}; for each residue-selector m the [w^U] slice of
    the bracketed sum is assembled directly (U = a u + b), then the y^b
    prefactor is stripped by reading off powers y^{an+b}.
    """
    bigu = a * u + b
    # [w^U] of (w y)^j j!/(1-w y)^{j+1} / (1-w) is sum_{n=j}^{U} C(n,j) y^n;
    # the alternating j-sum cancels violently, so collapse it exactly first.
    inner = [Fraction(0)] * (bigu + 1)
    for j in range(1, bigu + 1):
        coeff = s2star_rec(s + 2, j) * factorial(j)
        for n in range(j, bigu + 1):
            inner[n] += coeff * binomial(n, j)
    y_acc = [0j] * (bigu + 1)
    for m in range(a):
        omega_m = root_of_unity(a, m)
        selector = root_of_unity(a, -m * b) / a
        power = 1 + 0j
        for n in range(bigu + 1):
            y_acc[n] += selector * power * float(inner[n])
            power *= omega_m
    out = [y_acc[a * n + b] for n in range(u + 1)]
    return TruncSeries(out)


def multisection(F: TruncSeries, a: int, b: int) -> TruncSeries:
    """Root-of-unity multisection keeping coefficients with n = b (mod a):

    sum_{m<a} (omega_a^{-mb}/a) F(omega_a^m z), as a complex series.
    """
    if a < 2 or not 0 <= b < a:
        raise ValueError("multisection requires a >= 2 and 0 <= b < a")
    Fc = TruncSeries([complex(c) for c in F.coeffs])
    total = TruncSeries([0j] * (F.order + 1))
    for m in range(a):
        total = total + Fc.scale_arg(root_of_unity(a, m)).scale(
            root_of_unity(a, -m * b) / a
        )
    return total


def stirling1_egf_check(k: int, order: int) -> tuple[TruncSeries, TruncSeries]:
    """Both sides of the shifted unsigned Stirling-1 EGF:

    sum_j c(j+1, k+1) z^j/j!   vs   (1/k!) (1/(1-z)) log(1/(1-z))^k.

    Returned as exact rational series; the printed variant with an extra
    (-1)^k factor is an audit target, not asserted here.
    """
    lhs = TruncSeries(
        [Fraction(stirling1_unsigned(j + 1, k + 1), factorial(j)) for j in range(order + 1)]
    )
    log_inv = -TruncSeries.log_one_minus_z(order)  # log(1/(1-z))
    rhs = TruncSeries.geometric(1, order)
    for _ in range(k):
        rhs = rhs * log_inv
    rhs = rhs.scale(Fraction(1, factorial(k)))
    return lhs, rhs


def exp_harmonic_series(k: int, order: int) -> TruncSeries:
    """Truncated series with coefficient H_n^{(k)}/n! at z^n, built from
    sum_j c*(k+2, j) z^j e^z (j+1+z)/(j+1)."""
    out = [Fraction(0)] * (order + 1)
    for j in range(1, order + 1):
        coeff = s2star_rec(k + 2, j)
        if coeff == 0:
            continue
        diag = _diag_exp_shifted(j, order)
        for n in range(order + 1):
            out[n] += coeff * diag[n]
    return TruncSeries(out)


def dilog_functional_eq_check(order: int):
    """Exact truncated-series verification of

    Li_2(z) = -(1/2) log(1-z)^2 - Li_2(-z/(1-z)).

    Returns (passed, first_mismatch) with the witness coefficient pair.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    lhs = TruncSeries.polylog(2, order)
    log1mz = TruncSeries.log_one_minus_z(order)
    inner = TruncSeries([Fraction(0)] + [Fraction(-1)] * order)  # -z/(1-z)
    rhs = (log1mz * log1mz).scale(Fraction(-1, 2)) - TruncSeries.polylog(2, order).compose(inner)
    for n in range(order + 1):
        if lhs.coeff(n) != rhs.coeff(n):
            return False, (n, lhs.coeff(n), rhs.coeff(n))
    return True, None
