"""Normal and Maxwell-Boltzmann distribution functions, and the solution of
``y' + 2 x y = 1``, all written with 1F1(1/2; 3/2; .)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from nonelem import _backend
from nonelem.errors import DomainError
from nonelem.hyper_core import HyperParams, default_config, hyp1f1

_HALF = HyperParams(0.5, 1.5)
_CDF_CUTOFF = 40.0
# beyond this 1F1(1/2; 3/2; -x) is in its asymptotic regime
_TAIL_FROM = default_config(_HALF).switch_radius


def _m(z: float) -> float:
    return hyp1f1(_HALF, z).value.real


def _gap(x: float) -> float:
    """``sqrt(pi)/(2 sqrt(x)) - 1F1(1/2; 3/2; -x)`` for large x, without the
    cancellation.  This is the exponential half of the asymptotic expansion;
    the algebraic half is exactly the leading ``sqrt(pi)/(2 sqrt(x))``."""
    s, _, _ = _backend.kernels.asymptotic_sum(1.0, 0.5, -1.0 / x, 40)
    return math.exp(-x) * s.real / (2.0 * x)


@dataclass(frozen=True)
class MaxwellParams:
    theta: float
    gamma_c: float

    def __post_init__(self):
        if not (self.theta > 0 and self.gamma_c > 0):
            raise DomainError("theta and gamma_c must be positive")


def normal_cdf(z: float) -> float:
    """P(X < z) for a standard normal X: ``1/2 + z/sqrt(2 pi) 1F1(1/2; 3/2; -z^2/2)``."""
    z = float(z)
    if z > _CDF_CUTOFF:
        return 1.0
    if z < -_CDF_CUTOFF:
        return 0.0
    x = 0.5 * z * z
    if z < 0 and x > _TAIL_FROM:
        # 1/2 cancels against the leading asymptotic term
        return -z * _gap(x) / math.sqrt(2.0 * math.pi)
    p = 0.5 + z / math.sqrt(2.0 * math.pi) * _m(-0.5 * z * z)
    if -1e-12 < p < 0.0:
        p = 0.0
    elif 1.0 < p < 1.0 + 1e-12:
        p = 1.0
    return p


def normal_interval_prob(a: float, b: float) -> float:
    if a > b:
        raise DomainError(f"interval is reversed: {a} > {b}")
    return normal_cdf(b) - normal_cdf(a)


def maxwell_cdf(p: MaxwellParams, v: float) -> float:
    """``theta * integral_0^v x^2 exp(-gamma x^2) dx``, theta left unnormalised."""
    v = float(v)
    if v < 0:
        raise DomainError("speed must be nonnegative")
    if v == 0:
        return 0.0
    g = p.gamma_c * v * v
    if g > _TAIL_FROM:
        # limit minus a positive decreasing tail, so monotone under rounding
        limit = p.theta * math.sqrt(math.pi) / (4.0 * p.gamma_c ** 1.5)
        return limit - p.theta * v / (2.0 * p.gamma_c) * (_gap(g) + math.exp(-g))
    return p.theta * v / (2.0 * p.gamma_c) * (_m(-g) - math.exp(-g))


def ode_solution(x: float, C: float) -> float:
    """Solution of ``y' + 2 x y = 1`` with ``y(0) = C``."""
    x = float(x)
    e = math.exp(-x * x)
    return x * e * _m(x * x) + C * e
