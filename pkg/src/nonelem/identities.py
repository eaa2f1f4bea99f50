"""Both sides of the 1F2-in-terms-of-1F1 identities, with residuals.

Each check evaluates the 1F2 side by its own power series and the 1F1 side
through :func:`nonelem.hyper_core.hyp1f1`, so the two sides share no code
beyond the Pochhammer ratio recurrence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from nonelem.errors import DomainError
from nonelem.hyper_core import HyperParams, hyp1f1, hyp1f2_series

_ABS_TOL = 1e-10
_SCALE_FROM = 5.0

# Grid used by the identity suite and the CLI selftest.
GRID_LAMBDAS = (0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 1 + 1j)
GRID_ALPHAS = (2, 3, 4)
GRID_XS = (0.25, 0.5, 1.0, 1.5, 2.0)
GRID_MAX_ARG = 12.0


class IdentityId(str, Enum):
    T2_COSH = "t2-cosh"
    T2_COS = "t2-cos"
    T3_SINH = "t3-sinh"
    T3_SIN = "t3-sin"


# The sinh identity's 1F2 argument is +lam^2 x^(2 alpha)/4, the same as the
# sinh antiderivative's series.  A minus sign there breaks the identity.
SINH_SIGN_NOTE = "t3-sinh uses +lam^2 x^(2a)/4 in the 1F2 argument (verified by residual)"


@dataclass(frozen=True)
class IdentityReport:
    identity_id: IdentityId
    lhs: complex
    rhs: complex
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


def _xa(alpha: float, x: float) -> float:
    if alpha == math.floor(alpha):
        return x ** int(alpha)
    if x < 0:
        raise DomainError("non-integer alpha needs x >= 0")
    return x ** alpha


def _prep(lam, alpha, x):
    lam = complex(lam)
    alpha = float(alpha)
    if not alpha >= 2.0:
        raise DomainError("alpha must be >= 2")
    x = float(x)
    return lam, alpha, x, _xa(alpha, x)


def _f(alpha: float, z: complex) -> complex:
    a = 1.0 / alpha
    return hyp1f1(HyperParams(a, a + 1.0), z).value


def _report(iid: IdentityId, lhs: complex, rhs: complex, arg: float) -> IdentityReport:
    tol = _ABS_TOL * max(1.0, abs(lhs)) if arg > _SCALE_FROM else _ABS_TOL
    return IdentityReport(iid, lhs, rhs, abs(lhs - rhs), tol)


def _even_lhs(alpha, w):
    k = 1.0 / (2.0 * alpha)
    return hyp1f2_series(HyperParams(k, 0.5, k + 1.0), w).value


def _odd_lhs(lam, alpha, xa, w):
    k = 1.0 / (2.0 * alpha) + 0.5
    return lam * xa / (alpha + 1.0) * hyp1f2_series(HyperParams(k, 1.5, k + 1.0), w).value


def check_t2_cosh(lam, alpha, x) -> IdentityReport:
    lam, alpha, x, xa = _prep(lam, alpha, x)
    z = lam * xa
    lhs = _even_lhs(alpha, z * z / 4.0)
    rhs = 0.5 * (_f(alpha, z) + _f(alpha, -z))
    return _report(IdentityId.T2_COSH, lhs, rhs, abs(z))


def check_t2_cos(lam, alpha, x) -> IdentityReport:
    lam, alpha, x, xa = _prep(lam, alpha, x)
    z = lam * xa
    lhs = _even_lhs(alpha, -z * z / 4.0)
    rhs = 0.5 * (_f(alpha, 1j * z) + _f(alpha, -1j * z))
    return _report(IdentityId.T2_COS, lhs, rhs, abs(z))


def check_t3_sinh(lam, alpha, x) -> IdentityReport:
    lam, alpha, x, xa = _prep(lam, alpha, x)
    z = lam * xa
    lhs = _odd_lhs(lam, alpha, xa, z * z / 4.0)
    rhs = 0.5 * (_f(alpha, z) - _f(alpha, -z))
    return _report(IdentityId.T3_SINH, lhs, rhs, abs(z))


def check_t3_sin(lam, alpha, x) -> IdentityReport:
    lam, alpha, x, xa = _prep(lam, alpha, x)
    z = lam * xa
    lhs = _odd_lhs(lam, alpha, xa, -z * z / 4.0)
    rhs = (_f(alpha, 1j * z) - _f(alpha, -1j * z)) / 2j
    return _report(IdentityId.T3_SIN, lhs, rhs, abs(z))


CHECKS = {
    IdentityId.T2_COSH: check_t2_cosh,
    IdentityId.T2_COS: check_t2_cos,
    IdentityId.T3_SINH: check_t3_sinh,
    IdentityId.T3_SIN: check_t3_sin,
}


def check(identity_id, lam, alpha, x) -> IdentityReport:
    return CHECKS[IdentityId(identity_id)](lam, alpha, x)


def grid_cases():
    """(lam, alpha, x) triples of the standard grid with |lam| x^alpha <= 12."""
    for lam in GRID_LAMBDAS:
        for alpha in GRID_ALPHAS:
            for x in GRID_XS:
                if abs(lam) * x ** alpha <= GRID_MAX_ARG:
                    yield lam, alpha, x


def run_grid():
    """Every identity on every grid case, as a list of reports."""
    return [check(iid, lam, alpha, x)
            for iid in IdentityId for lam, alpha, x in grid_cases()]
