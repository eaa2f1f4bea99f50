"""Antiderivatives of exp, cosh, sinh, cos and sin of ``lam*x**alpha``
written with the hypergeometric functions 1F1 and 1F2."""

__version__ = "0.1.0"

from nonelem._backend import BACKEND
from nonelem.antideriv import (
    AntiderivValue,
    Direction,
    Family,
    IntegralSpec,
    LimitKind,
    LimitResult,
    antideriv,
    antideriv_cos,
    antideriv_cosh,
    antideriv_exp,
    antideriv_exp_asymptotic,
    antideriv_sin,
    antideriv_sinh,
    evaluate,
    integrand,
    limit_at_infinity,
)
from nonelem.applications import (
    MaxwellParams,
    maxwell_cdf,
    normal_cdf,
    normal_interval_prob,
    ode_solution,
)
from nonelem.errors import (
    ConvergenceError,
    DivergentIntegral,
    DomainError,
    NonelemError,
    PoleError,
    RangeError,
    UnsupportedEndpoint,
)
from nonelem.hyper_core import (
    AsymptoticConfig,
    HyperParams,
    Regime,
    SeriesValue,
    gamma,
    hyp1f1,
    hyp1f1_asymptotic,
    hyp1f1_series,
    hyp1f2_series,
    log_gamma,
    pochhammer,
)
from nonelem.identities import (
    IdentityId,
    IdentityReport,
    check_t2_cos,
    check_t2_cosh,
    check_t3_sin,
    check_t3_sinh,
)
from nonelem.integrals import (
    Endpoint,
    EndpointTag,
    EvalResult,
    Method,
    TailSign,
    full_line_exp,
    integrate,
    moment_integral,
    tail_integral_odd,
)
