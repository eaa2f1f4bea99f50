"""Cases run by ``nonelem selftest``.

Three groups: the two oracles against each other, the production 1F1 against
the double-double series oracle, and the identity grid.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from nonelem.hyper_core import HyperParams, hyp1f1
from nonelem.identities import run_grid
from nonelem.oracle import adaptive_quad, series_oracle_1f1


@dataclass(frozen=True)
class CaseResult:
    group: str
    name: str
    passed: bool
    detail: str


def _cross_oracle():
    for lam in (-1.0, -2.0):
        for alpha in (2, 3, 4):
            for x in (0.5, 1.0, 2.0):
                a = 1.0 / alpha
                series = x * series_oracle_1f1(a, a + 1.0, lam * x ** alpha)
                quad = adaptive_quad(lambda t: cmath.exp(lam * t ** alpha), 0.0, x, tol=1e-13).value
                diff = abs(series - quad)
                yield CaseResult("oracle-cross", f"oracle lam={lam:g} a={alpha} x={x:g}",
                                 diff <= 1e-11, f"diff={diff:.2e}")


_PRODUCTION_POINTS = (-25.0, -8.0, -1.0, 0.5, 3.0, 12.0, 25.0, 6j, -4 + 9j, 2 - 15j)


def _production():
    for alpha in (2, 3, 4):
        a = 1.0 / alpha
        p = HyperParams(a, a + 1.0)
        for z in _PRODUCTION_POINTS:
            got = hyp1f1(p, z)
            ref = series_oracle_1f1(a, a + 1.0, z)
            rel = abs(got.value - ref) / abs(ref)
            yield CaseResult("hyp1f1-vs-oracle", f"1F1 a=1/{alpha} z={z}", rel <= 1e-12,
                             f"rel={rel:.2e} regime={got.regime.value}")


def _identities():
    for r in run_grid():
        yield CaseResult("identities", f"{r.identity_id.value}", r.passed,
                         f"residual={r.residual:.2e} tol={r.tolerance:.0e}")


def run_all():
    return [*_cross_oracle(), *_production(), *_identities()]
