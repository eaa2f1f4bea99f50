"""Definite integrals by the fundamental theorem of calculus.

``integrate`` subtracts antiderivative values, substituting the closed-form
limits at infinity for infinite endpoints.  Also here: the full-line formula
for ``exp(-beta^2 x^alpha)``, the even-moment recurrence for
``x^(2n) exp(lam x^2)`` and the odd-power tail integrals.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from nonelem.antideriv import (
    Direction,
    Family,
    IntegralSpec,
    evaluate,
    limit_at_infinity,
)
from nonelem.errors import DivergentIntegral, DomainError, UnsupportedEndpoint
from nonelem.hyper_core import EPS, HyperParams, default_config, gamma, hyp1f1


class EndpointTag(str, Enum):
    FINITE = "finite"
    PLUS_INF = "+inf"
    MINUS_INF = "-inf"


@dataclass(frozen=True)
class Endpoint:
    tag: EndpointTag
    value: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "tag", EndpointTag(self.tag))
        if self.tag is EndpointTag.FINITE:
            if self.value is None or not math.isfinite(self.value):
                raise ValueError("a finite endpoint needs a finite value")
            object.__setattr__(self, "value", float(self.value))
        elif self.value is not None:
            raise ValueError("infinite endpoints carry no value")

    @classmethod
    def finite(cls, value: float) -> "Endpoint":
        return cls(EndpointTag.FINITE, value)

    @classmethod
    def plus_inf(cls) -> "Endpoint":
        return cls(EndpointTag.PLUS_INF)

    @classmethod
    def minus_inf(cls) -> "Endpoint":
        return cls(EndpointTag.MINUS_INF)

    @classmethod
    def parse(cls, text: str) -> "Endpoint":
        """Accepts a float literal, or ``inf``/``+inf``/``-inf`` (any case)."""
        t = text.strip().lower()
        if t in ("inf", "+inf", "infinity", "+infinity"):
            return cls.plus_inf()
        if t in ("-inf", "-infinity"):
            return cls.minus_inf()
        return cls.finite(float(t))

    @classmethod
    def of(cls, v) -> "Endpoint":
        if isinstance(v, Endpoint):
            return v
        if isinstance(v, str):
            return cls.parse(v)
        v = float(v)
        if v == math.inf:
            return cls.plus_inf()
        if v == -math.inf:
            return cls.minus_inf()
        return cls.finite(v)

    def __str__(self):
        return str(self.value) if self.tag is EndpointTag.FINITE else self.tag.value


class Method(str, Enum):
    FTC = "ftc"
    FTC_ASYMPTOTIC_LIMIT = "ftc_asymptotic_limit"
    RECURRENCE = "recurrence"


class TailSign(str, Enum):
    GROWING_AT_PLUS_INF = "growing"
    DECAYING_AT_PLUS_INF = "decaying"


@dataclass(frozen=True)
class EvalResult:
    value: complex
    err_estimate: float
    method: Method


def _limit_err(spec: IntegralSpec, limit: complex) -> float:
    # remainder |e^{z}/(alpha lam x^{alpha-1})| at the point where the
    # asymptotic regime starts, plus rounding of the gamma constant
    lam = abs(spec.lam)
    a = 1.0 / spec.alpha
    radius = default_config(HyperParams(a, a + 1.0)).switch_radius
    xc = (radius / lam) ** a
    remainder = math.exp(-abs(spec.lam.real) / lam * radius) / (spec.alpha * lam * xc ** (spec.alpha - 1))
    return remainder + 8 * EPS * abs(limit)


def _endpoint_value(spec: IntegralSpec, e: Endpoint, tol: float):
    if e.tag is EndpointTag.FINITE:
        r = evaluate(spec, e.value, tol)
        return r.value, r.err_estimate, False
    if spec.family is not Family.EXP:
        raise UnsupportedEndpoint(f"infinite endpoints are not supported for {spec.family.value}")
    direction = Direction.PLUS_INF if e.tag is EndpointTag.PLUS_INF else Direction.MINUS_INF
    lim = limit_at_infinity(spec, direction)
    if not lim.finite:
        raise DivergentIntegral(
            f"exp({spec.lam} x^{spec.alpha:g}) does not decay as x -> {direction.value}")
    return lim.value, _limit_err(spec, lim.value), True


def integrate(spec: IntegralSpec, A, B, tol: float = 1e-13) -> EvalResult:
    """``G(B) - G(A)`` for any endpoints, infinite ones via the limits of G."""
    A = Endpoint.of(A)
    B = Endpoint.of(B)
    if A == B and A.tag is EndpointTag.FINITE:
        return EvalResult(0j, 0.0, Method.FTC)
    gb, eb, lb = _endpoint_value(spec, B, tol)
    ga, ea, la = _endpoint_value(spec, A, tol)
    method = Method.FTC_ASYMPTOTIC_LIMIT if (la or lb) else Method.FTC
    return EvalResult(gb - ga, ea + eb, method)


def full_line_exp(beta: float, alpha: int) -> EvalResult:
    """Integral of ``exp(-beta^2 x^alpha)`` over the real line, even alpha:
    ``2 Gamma(1/alpha + 1) / beta^(2/alpha)``."""
    beta = float(beta)
    if not beta > 0:
        raise DomainError("beta must be positive")
    if alpha != int(alpha) or int(alpha) < 2 or int(alpha) % 2:
        raise DomainError("alpha must be an even integer >= 2")
    alpha = int(alpha)
    value = 2.0 * gamma(1.0 / alpha + 1.0).real / beta ** (2.0 / alpha)
    return EvalResult(complex(value), 8 * EPS * value, Method.FTC_ASYMPTOTIC_LIMIT)


def moment_integral(n: int, lam, x: float) -> complex:
    """Antiderivative of ``x^(2n) exp(lam x^2)`` that vanishes at 0.

    Integration by parts lowers the power by two each step, ending at the
    exponential antiderivative with alpha = 2.  Each step amplifies earlier
    rounding by about ``(2k-1)/(2|lam| x^2)``, so for small ``|lam| x^2`` the
    equivalent ``x^(2n+1)/(2n+1) 1F1(n+1/2; n+3/2; lam x^2)`` is used instead.
    """
    lam = complex(lam)
    if lam == 0:
        raise DomainError("lam must be nonzero")
    if n < 0 or n != int(n):
        raise DomainError("n must be a nonnegative integer")
    x = float(x)
    n = int(n)
    if abs(lam) * x * x < n + 0.5:
        p = HyperParams(n + 0.5, n + 1.5)
        return x ** (2 * n + 1) / (2 * n + 1) * hyp1f1(p, lam * x * x).value
    acc = evaluate(IntegralSpec(Family.EXP, lam, 2), x).value
    e = cmath.exp(lam * x * x)
    for k in range(1, n + 1):
        acc = x ** (2 * k - 1) * e / (2 * lam) - (2 * k - 1) / (2 * lam) * acc
    return acc


def tail_integral_odd(n: int, x: float, sign: TailSign) -> EvalResult:
    """Tails of ``exp(+-t^(2n+1))``.

    ``GROWING_AT_PLUS_INF``: integral of ``exp(t^(2n+1))`` over ``(-inf, x]``,
    equal to ``G(x) + Gamma((2n+2)/(2n+1))``.
    ``DECAYING_AT_PLUS_INF``: integral of ``exp(-t^(2n+1))`` over ``[x, +inf)``,
    equal to ``Gamma((2n+2)/(2n+1)) - G(x)``.
    """
    if n < 1 or n != int(n):
        raise DomainError("n must be a positive integer")
    sign = TailSign(sign)
    alpha = 2 * int(n) + 1
    if sign is TailSign.GROWING_AT_PLUS_INF:
        return integrate(IntegralSpec(Family.EXP, 1.0, alpha), Endpoint.minus_inf(), x)
    return integrate(IntegralSpec(Family.EXP, -1.0, alpha), x, Endpoint.plus_inf())
