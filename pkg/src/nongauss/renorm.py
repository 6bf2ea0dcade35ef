"""Closed forms for the renormalized cubic integral and its derived quantities.

The central object is

    F(a, b, c, d) = integral over R of ((a*x^3 + b*x^2 + c*x + d)^2)^(-1/3) dx

which evaluates to c_plus / D**(1/6) when the cubic discriminant D is
positive and c_minus / (-D)**(1/6) when it is negative.  D = 0 means a
repeated real root and a divergent integral, as does a = b = 0 (the tail
|c*x + d|^(-2/3) is not integrable even though the D expression is finite).

The four renormalized moments are minus the log-derivatives of F with
respect to the coefficients; they reduce to rational expressions in
(a, b, c, d, D) and are verified here against central finite differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .discriminant import DiscriminantResult, Sign, discriminant_cubic_explicit
from .errors import DivergentIntegral, DomainError, StencilCrossesSingularity
from .polynomial import CubicCoeffs, Number
from .special import constants

_FD_EXPECTATION_STEP = 1e-4
_FD_IDENTITY_STEP = 1e-3
# Floor for the relative-residual denominator when a moment vanishes by
# symmetry; moments carry dimension 1/coefficient, hence the 1/scale factor.
_FD_DENOM_FLOOR = 1e-3


class IntegralMethod(Enum):
    CLOSED_FORM = "closed-form"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class IntegralResult:
    value: float
    method: IntegralMethod
    discriminant: DiscriminantResult
    error_estimate: float = 0.0


@dataclass(frozen=True)
class ExpectationSet:
    """The four renormalized moments; exact Fractions for exact input."""

    x3: Union[Fraction, float]
    x2y: Union[Fraction, float]
    xy2: Union[Fraction, float]
    y3: Union[Fraction, float]

    def as_tuple(self) -> tuple:
        return (self.x3, self.x2y, self.xy2, self.y3)


def _ln_abs_fraction(value: Fraction) -> float:
    # math.log takes big ints directly, so huge |D| never overflows a float
    return math.log(abs(value.numerator)) - math.log(value.denominator)


def _checked_discriminant(coeffs: CubicCoeffs) -> DiscriminantResult:
    if coeffs.a == 0 and coeffs.b == 0:
        raise DivergentIntegral("a = b = 0: the integrand tail is not integrable")
    disc = discriminant_cubic_explicit(coeffs)
    if disc.sign is Sign.ZERO:
        raise DivergentIntegral("D = 0: repeated real root makes the integral diverge")
    return disc


def log_closed_form(coeffs: CubicCoeffs) -> float:
    """log F(a, b, c, d); fully in log space for scale robustness."""
    disc = _checked_discriminant(coeffs)
    k = constants()
    c = k.c_plus if disc.sign is Sign.POSITIVE else k.c_minus
    return math.log(c) - _ln_abs_fraction(disc.value) / 6.0


def closed_form_integral(coeffs: CubicCoeffs) -> IntegralResult:
    """Evaluate F exactly from the discriminant sign and the Beta constants.

    The sixth root goes through exp(-ln|D|/6), with ln|D| taken on the exact
    rational D, so extreme coefficient scales neither overflow nor underflow.
    """
    disc = _checked_discriminant(coeffs)
    k = constants()
    c = k.c_plus if disc.sign is Sign.POSITIVE else k.c_minus
    value = c * math.exp(-_ln_abs_fraction(disc.value) / 6.0)
    return IntegralResult(value, IntegralMethod.CLOSED_FORM, disc, 0.0)


def gaussian_analogue(a: Number, b: Number, c: Number) -> float:
    """The quadratic counterpart: integral of 1/(a*x^2 + b*x + c) = 2*pi/sqrt(-D2)
    for a > 0 and D2 = b^2 - 4ac < 0."""
    af, bf, cf = float(a), float(b), float(c)
    if af <= 0.0:
        raise DomainError(f"gaussian analogue requires a > 0, got a = {af}")
    d2 = bf * bf - 4.0 * af * cf
    if d2 >= 0.0:
        raise DomainError(f"gaussian analogue requires b^2 - 4ac < 0, got {d2}")
    return 2.0 * math.pi / math.sqrt(-d2)


def expectations(coeffs: CubicCoeffs) -> ExpectationSet:
    """The four renormalized moments as rational expressions over 6*D.

    Exact inputs stay exact; any float coefficient switches the whole set to
    floating point.
    """
    disc = discriminant_cubic_explicit(coeffs)
    if disc.sign is Sign.ZERO:
        raise DivergentIntegral("moments are undefined at D = 0")
    a, b, c, d = (Fraction(v) for v in coeffs.as_tuple())
    six_d = 6 * disc.value
    x3 = (18 * b * c * d - 4 * c**3 - 54 * a * d * d) / six_d
    x2y = (2 * b * c * c + 18 * a * c * d - 12 * b * b * d) / six_d
    xy2 = (2 * b * b * c + 18 * a * b * d - 12 * a * c * c) / six_d
    y3 = (18 * a * b * c - 4 * b**3 - 54 * a * a * d) / six_d
    if coeffs.is_exact():
        return ExpectationSet(x3, x2y, xy2, y3)
    return ExpectationSet(float(x3), float(x2y), float(xy2), float(y3))


def _stencil_coeffs(base: tuple, index: int, delta: float) -> CubicCoeffs:
    values = list(base)
    values[index] += delta
    return CubicCoeffs(*values)


def _stencil_sign(base: tuple, center: Sign, points) -> None:
    for point in points:
        disc = discriminant_cubic_explicit(point)
        if disc.sign is not center:
            raise StencilCrossesSingularity(
                f"stencil point {point.as_tuple()} has discriminant sign "
                f"{disc.sign.value}, center has {center.value}"
            )


def expectations_fd_check(
    coeffs: CubicCoeffs, step: Optional[float] = None
) -> tuple:
    """Residuals of the moment formulas against central differences of -log F.

    Each residual is |fd - formula| / max(|formula|, 1e-3/scale); the floor
    keeps symmetry-forced zero moments from dividing by zero.  Default step
    is 1e-4 * max|coefficient|.
    """
    base = tuple(float(v) for v in coeffs.as_tuple())
    scale = max(abs(v) for v in base)
    if scale == 0.0:
        raise DivergentIntegral("all coefficients are zero")
    h = _FD_EXPECTATION_STEP * scale if step is None else float(step)
    center = _checked_discriminant(coeffs).sign
    exact = expectations(coeffs)
    residuals = []
    for i, formula_value in enumerate(exact.as_tuple()):
        plus = _stencil_coeffs(base, i, +h)
        minus = _stencil_coeffs(base, i, -h)
        _stencil_sign(base, center, (plus, minus))
        fd = -(log_closed_form(plus) - log_closed_form(minus)) / (2.0 * h)
        denom = max(abs(float(formula_value)), _FD_DENOM_FLOOR / scale)
        residuals.append(abs(fd - float(formula_value)) / denom)
    return tuple(residuals)


def pde_identity_residuals(
    coeffs: CubicCoeffs, step: Optional[float] = None
) -> tuple:
    """Second-difference residuals of the three coefficient identities

        (d/da d/dd - d/db d/dc) F = 0
        (d/db d/db - d/da d/dc) F = 0
        (d/dc d/dc - d/db d/dd) F = 0

    using second-order central stencils at step 1e-3 * max|coefficient| by
    default, each normalized by |F| / scale^2.
    """
    base = tuple(float(v) for v in coeffs.as_tuple())
    scale = max(abs(v) for v in base)
    if scale == 0.0:
        raise DivergentIntegral("all coefficients are zero")
    h = _FD_IDENTITY_STEP * scale if step is None else float(step)
    center = _checked_discriminant(coeffs).sign

    def value_at(deltas: dict) -> float:
        values = list(base)
        for index, delta in deltas.items():
            values[index] += delta
        point = CubicCoeffs(*values)
        _stencil_sign(base, center, (point,))
        return math.exp(log_closed_form(point))

    f0 = value_at({})

    def mixed(i: int, j: int) -> float:
        return (
            value_at({i: +h, j: +h})
            - value_at({i: +h, j: -h})
            - value_at({i: -h, j: +h})
            + value_at({i: -h, j: -h})
        ) / (4.0 * h * h)

    def second(i: int) -> float:
        return (value_at({i: +h}) - 2.0 * f0 + value_at({i: -h})) / (h * h)

    norm = scale * scale / abs(f0)
    return (
        abs(mixed(0, 3) - mixed(1, 2)) * norm,
        abs(second(1) - mixed(0, 2)) * norm,
        abs(second(2) - mixed(1, 3)) * norm,
    )
