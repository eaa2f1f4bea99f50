"""Closed-form antiderivatives of exp, cosh, sinh, cos and sin of ``lam*x**alpha``.

Every antiderivative is normalised to vanish at ``x = 0``.  The exponential
family is ``x 1F1(1/alpha; 1/alpha+1; lam x^alpha)``; the other four use 1F2
with argument ``+-lam^2 x^(2 alpha) / 4``.  When that 1F2 series would cancel
(large argument with oscillating terms), the same function is evaluated
through its split into two exponential antiderivatives instead.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from nonelem import _backend as _kern
from nonelem.errors import DomainError
from nonelem.hyper_core import DEFAULT_TOL, EPS, HyperParams, default_config, gamma, hyp1f1

# beyond this e^{rho} the 1F2 series cannot beat double rounding anyway
_MAX_1F2_CANCELLATION_EXP = 30.0


class Family(str, Enum):
    EXP = "exp"
    COSH = "cosh"
    SINH = "sinh"
    COS = "cos"
    SIN = "sin"


class LimitKind(str, Enum):
    FINITE = "finite"
    DIVERGENT = "divergent"


class Direction(str, Enum):
    PLUS_INF = "+inf"
    MINUS_INF = "-inf"


@dataclass(frozen=True)
class IntegralSpec:
    family: Family
    lam: complex
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "lam", complex(self.lam))
        alpha = float(self.alpha)
        if not (math.isfinite(alpha) and alpha >= 2.0):
            raise DomainError(f"alpha must be >= 2, got {self.alpha}")
        object.__setattr__(self, "alpha", alpha)

    @property
    def integer_alpha(self) -> bool:
        return self.alpha == math.floor(self.alpha)

    @property
    def even(self) -> bool:
        return self.integer_alpha and int(self.alpha) % 2 == 0


@dataclass(frozen=True)
class LimitResult:
    kind: LimitKind
    value: complex | None = None

    @property
    def finite(self) -> bool:
        return self.kind is LimitKind.FINITE


@dataclass(frozen=True)
class AntiderivValue:
    """An antiderivative value with its error estimate and computation path."""

    value: complex
    err_estimate: float
    regime: str


def _pow(spec: IntegralSpec, x: float) -> float:
    if spec.integer_alpha:
        return x ** int(spec.alpha)
    if x < 0:
        raise DomainError("non-integer alpha is only defined for x >= 0")
    return x ** spec.alpha


def _check_family(spec: IntegralSpec, family: Family) -> None:
    if spec.family is not family:
        raise ValueError(f"expected a {family.value} spec, got {spec.family.value}")


def _exp_params(alpha: float) -> HyperParams:
    a = 1.0 / alpha
    return HyperParams(a, a + 1.0)


def _f(alpha: float, z: complex, tol: float):
    return hyp1f1(_exp_params(alpha), z, tol)


def _eval_exp(spec: IntegralSpec, x: float, tol: float) -> AntiderivValue:
    if x == 0:
        return AntiderivValue(0j, 0.0, "exact")
    xa = _pow(spec, x)
    if spec.lam == 0:
        return AntiderivValue(complex(x), 0.0, "exact")
    r = _f(spec.alpha, spec.lam * xa, tol)
    return AntiderivValue(x * r.value, abs(x) * r.err_estimate, r.regime.value)


def _pair_route(spec: IntegralSpec, x: float, xa: float, tol: float) -> AntiderivValue:
    """Evaluate a cosh/sinh/cos/sin antiderivative as a sum or difference of two
    exponential antiderivatives."""
    lam = spec.lam
    if spec.family in (Family.COS, Family.SIN):
        lam = 1j * lam
    zp = lam * xa
    fp = _f(spec.alpha, zp, tol)
    fm = _f(spec.alpha, -zp, tol)
    if spec.family in (Family.COSH, Family.COS):
        val = 0.5 * x * (fp.value + fm.value)
    elif spec.family is Family.SINH:
        val = 0.5 * x * (fp.value - fm.value)
    else:
        val = x * (fp.value - fm.value) / 2j
    err = 0.5 * abs(x) * (fp.err_estimate + fm.err_estimate)
    return AntiderivValue(val, err, f"1f1-pair:{fp.regime.value}/{fm.regime.value}")


def _eval_trig(spec: IntegralSpec, x: float, tol: float) -> AntiderivValue:
    if x == 0:
        return AntiderivValue(0j, 0.0, "exact")
    xa = _pow(spec, x)
    lam = spec.lam
    alpha = spec.alpha
    if lam == 0:
        if spec.family in (Family.COSH, Family.COS):
            return AntiderivValue(complex(x), 0.0, "exact")
        return AntiderivValue(0j, 0.0, "exact")
    w = lam * lam * xa * xa / 4.0
    if spec.family in (Family.COS, Family.SIN):
        w = -w
    root = cmath.sqrt(w)
    rho = 2.0 * (abs(root) - abs(root.real))
    if rho < _MAX_1F2_CANCELLATION_EXP:
        if spec.family in (Family.COSH, Family.COS):
            p = HyperParams(1.0 / (2 * alpha), 0.5, 1.0 / (2 * alpha) + 1.0)
            pref = complex(x)
        else:
            p = HyperParams(1.0 / (2 * alpha) + 0.5, 1.5, 1.0 / (2 * alpha) + 1.5)
            pref = lam * x * xa / (alpha + 1.0)
        value, n, err, abs_sum, ok = _kern.kernels.series_1f2(p.a, p.b, p.c, w, tol, 10_000)
        if ok and EPS * abs_sum <= tol * abs(value) and math.isfinite(abs_sum):
            return AntiderivValue(pref * value, abs(pref) * err, "1f2-series")
    return _pair_route(spec, x, xa, tol)


def evaluate(spec: IntegralSpec, x: float, tol: float = DEFAULT_TOL) -> AntiderivValue:
    """Antiderivative of the spec's integrand at ``x`` with error and regime."""
    x = float(x)
    if spec.family is Family.EXP:
        return _eval_exp(spec, x, tol)
    return _eval_trig(spec, x, tol)


def antideriv_exp(spec: IntegralSpec, x: float) -> complex:
    """``G(x) = x 1F1(1/alpha; 1/alpha + 1; lam x^alpha)``, the antiderivative
    of ``exp(lam x^alpha)`` with ``G(0) = 0``."""
    _check_family(spec, Family.EXP)
    return _eval_exp(spec, float(x), DEFAULT_TOL).value


def antideriv_cosh(spec: IntegralSpec, x: float) -> complex:
    _check_family(spec, Family.COSH)
    return _eval_trig(spec, float(x), DEFAULT_TOL).value


def antideriv_sinh(spec: IntegralSpec, x: float) -> complex:
    _check_family(spec, Family.SINH)
    return _eval_trig(spec, float(x), DEFAULT_TOL).value


def antideriv_cos(spec: IntegralSpec, x: float) -> complex:
    _check_family(spec, Family.COS)
    return _eval_trig(spec, float(x), DEFAULT_TOL).value


def antideriv_sin(spec: IntegralSpec, x: float) -> complex:
    _check_family(spec, Family.SIN)
    return _eval_trig(spec, float(x), DEFAULT_TOL).value


def antideriv(spec: IntegralSpec, x: float) -> complex:
    return evaluate(spec, x).value


def integrand(spec: IntegralSpec, x: float) -> complex:
    """The function whose antiderivative :func:`evaluate` returns."""
    z = spec.lam * _pow(spec, float(x))
    if spec.family is Family.EXP:
        return cmath.exp(z)
    if spec.family is Family.COSH:
        return cmath.cosh(z)
    if spec.family is Family.SINH:
        return cmath.sinh(z)
    if spec.family is Family.COS:
        return cmath.cos(z)
    return cmath.sin(z)


def antideriv_exp_asymptotic(spec: IntegralSpec, x: float) -> complex:
    """Large-|x| form of the exponential antiderivative.

    Constant term ``Gamma(1/alpha + 1) e^{+-i pi/alpha} x (lam x^alpha)^{-1/alpha}``
    plus ``e^{lam x^alpha} / (alpha lam x^{alpha-1})``.  For even alpha and
    the upper sign the constant reduces to
    ``Gamma(1/alpha + 1) e^{i pi/alpha} lam^{-1/alpha} sign(x)``.
    """
    _check_family(spec, Family.EXP)
    if not spec.integer_alpha:
        raise DomainError("the asymptotic form needs an integer alpha")
    x = float(x)
    xa = _pow(spec, x)
    z = spec.lam * xa
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    radius = default_config(_exp_params(spec.alpha)).switch_radius
    if not abs(z) > radius:
        raise DomainError(f"|lam x^alpha| = {abs(z):g} is inside the switch radius {radius:g}")
    a = 1.0 / spec.alpha
    sign = 1.0 if z.imag >= 0.0 else -1.0
    const = gamma(a + 1.0) * cmath.exp(sign * 1j * math.pi * a - a * cmath.log(z)) * x
    tail = cmath.exp(z) / (spec.alpha * spec.lam * x ** (int(spec.alpha) - 1))
    return const + tail


def limit_at_infinity(spec: IntegralSpec, direction: Direction) -> LimitResult:
    """Limit of the exponential antiderivative as ``x -> +-inf``.

    Finite exactly when the integrand decays in that direction: ``Re lam < 0``
    toward ``+inf``; toward ``-inf``, ``Re lam < 0`` for even alpha and
    ``Re lam > 0`` for odd alpha.
    """
    _check_family(spec, Family.EXP)
    direction = Direction(direction)
    lam = spec.lam
    g = gamma(1.0 / spec.alpha + 1.0)
    a = 1.0 / spec.alpha
    if direction is Direction.PLUS_INF:
        if lam.real < 0:
            return LimitResult(LimitKind.FINITE, g * (-lam) ** (-a))
        return LimitResult(LimitKind.DIVERGENT)
    if not spec.integer_alpha:
        raise DomainError("x -> -inf needs an integer alpha")
    if spec.even:
        if lam.real < 0:
            return LimitResult(LimitKind.FINITE, -g * (-lam) ** (-a))
        return LimitResult(LimitKind.DIVERGENT)
    if lam.real > 0:
        return LimitResult(LimitKind.FINITE, -g * lam ** (-a))
    return LimitResult(LimitKind.DIVERGENT)
