"""Complex special-function kernels: gamma, Pochhammer, 1F1 and 1F2.

The public evaluator :func:`hyp1f1` picks one of four computation paths and
records which one in the returned :class:`SeriesValue`:

* ``SERIES``: direct power series.
* ``KUMMER_SERIES``: series of ``e^z 1F1(b-a; b; -z)`` for ``Re z < -5``.
* ``CONTINUATION``: series at a small point on the ray through ``z``, then
  Taylor stepping of the confluent ODE out to ``z``.  Used when the series at
  ``z`` itself would cancel below the requested tolerance (typically near
  the imaginary axis).
* ``ASYMPTOTIC``: large-argument expansion for ``|z| > switch_radius``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from nonelem import _backend
from nonelem.errors import ConvergenceError, DomainError, PoleError, RangeError

EPS = 2.0 ** -53
DEFAULT_TOL = 1e-13
MAX_TERMS = 10_000
KUMMER_THRESHOLD = -5.0

# continuation path: start radius and largest step relative to the centre
_CONT_START = 3.0
_CONT_STEP = 1.5

# Lanczos approximation, g = 7, n = 9
_LANCZOS_G = 7.0
_LANCZOS_P = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


class Regime(str, Enum):
    SERIES = "series"
    KUMMER_SERIES = "kummer_series"
    CONTINUATION = "continuation"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class HyperParams:
    """Parameters ``(a; b)`` of 1F1 or ``(a; b, c)`` of 1F2.

    ``c`` is ignored by the 1F1 routines.
    """

    a: complex
    b: complex
    c: complex | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        _check_lower(self.b, "b")
        if self.c is not None:
            object.__setattr__(self, "c", complex(self.c))
            _check_lower(self.c, "c")


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    terms_used: int
    err_estimate: float
    regime: Regime


@dataclass(frozen=True)
class AsymptoticConfig:
    R: int
    S: int
    switch_radius: float

    def __post_init__(self):
        if self.R < 1 or self.S < 1:
            raise ValueError("truncation orders must be >= 1")
        if not self.switch_radius > 0:
            raise ValueError("switch_radius must be positive")


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def _check_lower(v: complex, name: str) -> None:
    if _is_nonpositive_integer(v):
        raise PoleError(f"lower parameter {name}={v} is zero or a negative integer")


def _principal(z: complex) -> complex:
    # -0.0 imaginary parts would put arg(z) at -pi
    if z.imag == 0.0:
        return complex(z.real, 0.0)
    return z


def _lanczos_log_gamma(z: complex) -> complex:
    z = z - 1.0
    x = _LANCZOS_P[0]
    for i in range(1, len(_LANCZOS_P)):
        x += _LANCZOS_P[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def log_gamma(z) -> complex:
    """Principal logarithm of the gamma function.

    The imaginary part is reduced to ``(-pi, pi]`` so that the result is
    ``log(Gamma(z))`` on the principal branch.  Raises :class:`PoleError` at
    ``z = 0, -1, -2, ...``.
    """
    z = _principal(complex(z))
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        val = math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - _lanczos_log_gamma(1.0 - z)
    else:
        val = _lanczos_log_gamma(z)
    im = math.remainder(val.imag, 2.0 * math.pi)
    if im == -math.pi:
        im = math.pi
    return complex(val.real, im)


def gamma(z) -> complex:
    return cmath.exp(log_gamma(z))


def rgamma(z) -> complex:
    """1/Gamma(z); zero at the poles of gamma."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        return 0j
    return cmath.exp(-log_gamma(z))


def pochhammer(v, n: int) -> complex:
    """Rising factorial ``(v)_n = v (v+1) ... (v+n-1)``, ``(v)_0 = 1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    v = complex(v)
    out = 1.0 + 0.0j
    for k in range(n):
        out *= v + k
    return out


def series_terms(p: HyperParams, z, count: int):
    """First ``count`` terms of the 1F1 (or 1F2 when ``p.c`` is set) series,
    generated by the same ratio recurrence the kernels use."""
    z = complex(z)
    t = 1.0 + 0.0j
    out = [t]
    for n in range(1, count):
        den = (p.b + (n - 1)) * n
        if p.c is not None:
            den *= p.c + (n - 1)
        t = t * (p.a + (n - 1)) * z / den
        out.append(t)
    return out


def hyp1f1_series(p: HyperParams, z, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Direct power series of 1F1(a; b; z)."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    value, n, err, _, ok = _backend.kernels.series_1f1(p.a, p.b, complex(z), tol, MAX_TERMS)
    if not ok:
        raise ConvergenceError(f"1F1 series did not converge in {MAX_TERMS} terms at z={z}")
    return SeriesValue(value, n, err, Regime.SERIES)


def hyp1f2_series(p: HyperParams, z, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Direct power series of 1F2(a; b, c; z).  Entire in ``z``."""
    if p.c is None:
        raise ValueError("1F2 needs the second lower parameter c")
    if not tol > 0:
        raise ValueError("tol must be positive")
    value, n, err, _, ok = _backend.kernels.series_1f2(p.a, p.b, p.c, complex(z), tol, MAX_TERMS)
    if not ok:
        raise ConvergenceError(f"1F2 series did not converge in {MAX_TERMS} terms at z={z}")
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise RangeError(f"1F2 overflows at z={z}")
    return SeriesValue(value, n, err, Regime.SERIES)


def default_config(p: HyperParams, z=None) -> AsymptoticConfig:
    radius = max(30.0, 10.0 * (abs(p.a) + abs(p.b)))
    order = 40 if z is None else max(1, min(int(abs(z)), 40))
    return AsymptoticConfig(order, order, radius)


def hyp1f1_asymptotic(p: HyperParams, z, cfg: AsymptoticConfig | None = None) -> SeriesValue:
    """Large-|z| expansion of 1F1: an algebraic sum scaled by
    ``e^{+-i pi a} z^{-a} / Gamma(b-a)`` plus an exponential sum scaled by
    ``e^z z^{a-b} / Gamma(a)``, both times ``Gamma(b)``.

    The upper sign is used for ``Im z >= 0`` and the lower sign for
    ``Im z < 0``; powers of ``z`` use the principal branch.  Each sum stops at
    its smallest term or at the configured order, whichever is first.
    """
    z = _principal(complex(z))
    if cfg is None:
        cfg = default_config(p, z)
    if not abs(z) > cfg.switch_radius:
        raise DomainError(f"|z|={abs(z):g} is inside the switch radius {cfg.switch_radius:g}")
    a, b = p.a, p.b
    logz = cmath.log(z)
    sign = 1.0 if z.imag >= 0.0 else -1.0

    alg, n_alg, alg_tail = _backend.kernels.asymptotic_sum(a, 1.0 + a - b, -1.0 / z, cfg.R)
    ex, n_ex, ex_tail = _backend.kernels.asymptotic_sum(b - a, 1.0 - a, 1.0 / z, cfg.S)

    lg_b = log_gamma(b)
    alg_pref = 0j
    if not _is_nonpositive_integer(b - a):
        alg_pref = cmath.exp(sign * 1j * math.pi * a - a * logz + lg_b - log_gamma(b - a))
    ex_pref = 0j
    if not _is_nonpositive_integer(a):
        log_ex = z + (a - b) * logz + lg_b - log_gamma(a)
        if log_ex.real > 709.0:
            raise RangeError(f"1F1 overflows at z={z}")
        ex_pref = cmath.exp(log_ex)
    value = alg_pref * alg + ex_pref * ex
    # remainder of an optimally truncated sum is ~ sqrt(|z|) times its smallest term
    spread = 1.0 + math.sqrt(abs(z))
    err = spread * (abs(alg_pref) * alg_tail + abs(ex_pref) * ex_tail) + 4 * EPS * (
        abs(alg_pref * alg) + abs(ex_pref * ex))
    return SeriesValue(value, n_alg + n_ex, err, Regime.ASYMPTOTIC)


def _raw_series(a: complex, b: complex, z: complex, tol: float):
    """Series or Kummer series with the kernel's absolute-term sum."""
    if z.real < KUMMER_THRESHOLD and not _is_nonpositive_integer(a):
        s, n, err, abs_sum, ok = _backend.kernels.series_1f1(b - a, b, -z, tol, MAX_TERMS)
        if not ok:
            raise ConvergenceError(f"Kummer series did not converge at z={z}")
        scale = cmath.exp(z)
        return s * scale, n, err * abs(scale), abs_sum * abs(scale), Regime.KUMMER_SERIES
    s, n, err, abs_sum, ok = _backend.kernels.series_1f1(a, b, z, tol, MAX_TERMS)
    if not ok:
        raise ConvergenceError(f"1F1 series did not converge at z={z}")
    return s, n, err, abs_sum, Regime.SERIES


def _continuation(a: complex, b: complex, z: complex, tol: float) -> SeriesValue:
    r = abs(z)
    z1 = z * (_CONT_START / r)
    w, n1, e1, _, _ = _raw_series(a, b, z1, tol)
    dw, n2, e2, _, _ = _raw_series(a + 1.0, b + 1.0, z1, tol)
    dw *= a / b
    e2 *= abs(a / b)
    nsteps = max(1, math.ceil((r - _CONT_START) / _CONT_STEP))
    w_end, _, most = _backend.kernels.taylor_continue(a, b, z1, w, dw, z, nsteps, EPS * 0.1)
    rel_start = max(e1 / abs(w) if w else 0.0, e2 / abs(dw) if dw else 0.0)
    err = abs(w_end) * (rel_start + 4 * EPS * nsteps)
    return SeriesValue(w_end, n1 + n2 + nsteps * most, err, Regime.CONTINUATION)


def hyp1f1(p: HyperParams, z, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Confluent hypergeometric function 1F1(a; b; z) with regime dispatch."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    z = _principal(complex(z))
    if z == 0:
        return SeriesValue(1.0 + 0.0j, 1, 0.0, Regime.SERIES)
    a, b = p.a, p.b
    if _is_nonpositive_integer(a):
        # terminating polynomial; the series is exact up to rounding
        return hyp1f1_series(p, z, tol)
    cfg = default_config(p, z)
    if abs(z) > cfg.switch_radius:
        return hyp1f1_asymptotic(p, z, cfg)
    value, n, err, abs_sum, regime = _raw_series(a, b, z, tol)
    if EPS * abs_sum > tol * abs(value) and abs(z) > _CONT_START:
        return _continuation(a, b, z, tol)
    return SeriesValue(value, n, err, regime)
