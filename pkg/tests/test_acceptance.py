"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line (also collected into the
terminal summary) and asserts on the same condition.
"""

import cmath
import csv
import dataclasses
import io
import itertools
import math
import random

import pytest
from click.testing import CliRunner

from nonelem.antideriv import Direction, Family, IntegralSpec, antideriv_exp, evaluate, integrand, limit_at_infinity
from nonelem.applications import normal_interval_prob
from nonelem.cli import main
from nonelem.errors import DivergentIntegral
from nonelem.hyper_core import HyperParams, default_config, gamma, hyp1f1_asymptotic, hyp1f1_series
from nonelem.identities import SINH_SIGN_NOTE, grid_cases, run_grid
from nonelem.integrals import TailSign, full_line_exp, integrate, tail_integral_odd
from nonelem.oracle import adaptive_quad

SQRT_PI = math.sqrt(math.pi)


def rel(a, b):
    return abs(a - b) / abs(b)


def test_ac01_gaussian_constant(criterion):
    g = IntegralSpec(Family.EXP, -1, 2)
    full = integrate(g, "-inf", "inf").value
    left = integrate(g, "-inf", 0).value
    right = integrate(g, 0, "inf").value
    worst = max(rel(full, SQRT_PI), rel(left, SQRT_PI / 2), rel(right, SQRT_PI / 2))
    criterion(1, "Gaussian constant and half lines", worst <= 1e-10,
              f"full={full.real!r}, worst rel err {worst:.1e} (tol 1e-10)")


def _truncation(beta, alpha):
    # smallest T (step 0.05) with 2 * exp(-c T^a) / (c a T^(a-1)) < 1e-12
    c = beta * beta
    T = 0.5
    while 2 * math.exp(-c * T ** alpha) / (c * alpha * T ** (alpha - 1)) >= 1e-12:
        T += 0.05
    return T


def test_ac02_full_line_formula(criterion):
    worst = 0.0
    for beta, alpha in [(1, 2), (2, 2), (1, 4), (0.5, 6)]:
        T = _truncation(beta, alpha)
        ref = adaptive_quad(lambda t: math.exp(-beta * beta * t ** alpha), -T, T, tol=1e-13).value.real
        worst = max(worst, rel(full_line_exp(beta, alpha).value.real, ref))
    criterion(2, "full_line_exp vs quadrature on 4 (beta, alpha)", worst <= 1e-8,
              f"worst rel err {worst:.1e} (tol 1e-8)")


@pytest.mark.xfail(strict=True, reason=(
    "exact values are 0.95449974 and 0.81859461; the targets 0.9544 and 0.8185 are "
    "sums of two halves each rounded to four decimals, so both sit ~1e-4 away"))
def test_ac03_interval_probabilities(criterion):
    p1 = normal_interval_prob(-2, 2)
    p2 = normal_interval_prob(-1, 2)
    ok = abs(p1 - 0.9544) <= 5e-5 and abs(p2 - 0.8185) <= 5e-5
    criterion(3, "P(-2<X<2)=0.9544, P(-1<X<2)=0.8185 within 5e-5", ok,
              f"got {p1:.8f} (off {p1 - 0.9544:.2e}), {p2:.8f} (off {p2 - 0.8185:.2e}); "
              "unattainable at this tolerance")


def test_ac03_half_interval_masses():
    # the tabulated halves the printed sums are built from
    assert abs(normal_interval_prob(0, 2) - 0.4772) <= 5e-5
    assert abs(normal_interval_prob(-1, 0) - 0.3413) <= 5e-5
    assert round(normal_interval_prob(0, 2), 4) * 2 == pytest.approx(0.9544, abs=1e-12)
    assert round(normal_interval_prob(0, 2), 4) + round(normal_interval_prob(-1, 0), 4) == pytest.approx(
        0.8185, abs=1e-12)


def test_ac04_limit_formulas(criterion):
    spec = IntegralSpec(Family.EXP, -1, 2)
    hi = antideriv_exp(spec, 30.0)
    lo = antideriv_exp(spec, -30.0)
    up = limit_at_infinity(spec, Direction.PLUS_INF).value
    down = limit_at_infinity(spec, Direction.MINUS_INF).value
    g = gamma(1.5)
    ok = (abs(hi - SQRT_PI / 2) <= 1e-10 and abs(lo + SQRT_PI / 2) <= 1e-10
          and up == g and down == -g and abs(g - SQRT_PI / 2) <= 1e-15)
    criterion(4, "G(+-30) and limits at +-inf equal +-sqrt(pi)/2", ok,
              f"G(30)-sqrt(pi)/2={(hi - SQRT_PI / 2).real:.1e}, limit={up.real!r}")


def test_ac05_identity_suites(criterion):
    reports = run_grid()
    worst = max(r.residual for r in reports)
    n_cases = len(list(grid_cases()))
    ok = len(reports) >= 120 and worst <= 1e-10
    criterion(5, f"identity residuals on {len(reports)} checks ({n_cases} grid points x 4)", ok,
              f"max residual {worst:.1e} (tol 1e-10); {SINH_SIGN_NOTE}")


def _random_case(rng):
    family = rng.choice(list(Family))
    if rng.random() < 0.5:
        lam = rng.uniform(-2, 2)
    else:
        lam = cmath.rect(rng.uniform(0, 2), rng.uniform(-math.pi, math.pi))
    alpha = rng.choice((2, 3, 4))
    A, B = rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5)
    return IntegralSpec(family, lam, alpha), A, B


def _check_against_quad(spec, A, B):
    v = integrate(spec, A, B).value
    lo, hi, s = (A, B, 1) if A <= B else (B, A, -1)
    q = s * adaptive_quad(lambda t: integrand(spec, t), lo, hi, tol=1e-12 * max(1.0, abs(v))).value
    return abs(v - q) <= max(1e-8, 1e-8 * abs(q)), abs(v - q) / max(1.0, abs(q))


def test_ac06_oracle_equivalence(criterion):
    rng = random.Random(20240601)
    failures = 0
    worst = 0.0
    for _ in range(100):
        ok, err = _check_against_quad(*_random_case(rng))
        failures += not ok
        worst = max(worst, err)
    # non-integer alpha spot cases, x >= 0
    for alpha in (2.5, 3.7):
        for family in Family:
            ok, err = _check_against_quad(IntegralSpec(family, rng.uniform(-2, 2), alpha),
                                          rng.uniform(0, 1), rng.uniform(1, 2.5))
            failures += not ok
            worst = max(worst, err)
    criterion(6, "100 random FTC integrals (+10 non-integer alpha) vs quadrature", failures == 0,
              f"{failures} failures, worst scaled err {worst:.1e}")


def test_ac07_derivative_property(criterion):
    h = 1e-3
    worst = 0.0
    count = 0
    for family, lam, alpha, x in itertools.product(
            Family, (-1.0, 0.5, 1 + 0.5j, -2.0), (2, 3, 4), (0.3, 0.7, 1.1, 1.4)):
        spec = IntegralSpec(family, lam, alpha)
        G = lambda t: evaluate(spec, t).value
        # fourth-order central difference
        fd = (8 * (G(x + h) - G(x - h)) - (G(x + 2 * h) - G(x - 2 * h))) / (12 * h)
        worst = max(worst, rel(fd, integrand(spec, x)))
        count += 1
    criterion(7, f"finite-difference derivative on {count} points", count >= 200 and worst <= 1e-6,
              f"worst rel err {worst:.1e} (tol 1e-6)")


def test_ac08_regime_overlap(criterion):
    worst = 0.0
    zs = [s * (30 + i) for s in (-1, 1) for i in range(31)]
    for alpha in (2, 4):
        a = 1.0 / alpha
        p = HyperParams(a, a + 1.0)
        for z in zs:
            # the closed interval includes |z| = 30 itself
            cfg = dataclasses.replace(default_config(p, z), switch_radius=29.5)
            asym = hyp1f1_asymptotic(p, z, cfg).value
            if z > 0:
                ser = hyp1f1_series(p, z).value
            else:
                ser = cmath.exp(z) * hyp1f1_series(HyperParams(1.0, a + 1.0), -z).value
            worst = max(worst, rel(asym, ser))
    criterion(8, "series vs asymptotic on [-60,-30] u [30,60], alpha in {2,4}", worst <= 1e-6,
              f"worst rel diff {worst:.1e} (tol 1e-6)")


def test_ac09_divergence_gate(criterion):
    wrong = []
    for direction, alpha, re_lam in itertools.product(("+inf", "-inf"), (2, 3), (-1.0, 0.0, 1.0)):
        spec = IntegralSpec(Family.EXP, complex(re_lam, 0.3), alpha)
        if direction == "+inf":
            expect_finite = re_lam < 0
            A, B = 0.0, direction
        else:
            expect_finite = re_lam < 0 if alpha % 2 == 0 else re_lam > 0
            A, B = direction, 0.0
        try:
            v = integrate(spec, A, B).value
            T = 8.0
            q = (adaptive_quad(lambda t: integrand(spec, t), 0, T).value if direction == "+inf"
                 else adaptive_quad(lambda t: integrand(spec, t), -T, 0).value)
            if not (expect_finite and abs(v - q) <= 1e-10):
                wrong.append((direction, alpha, re_lam))
        except DivergentIntegral:
            if expect_finite:
                wrong.append((direction, alpha, re_lam))
    criterion(9, "divergence gate over 12 direction/parity/sign cases", not wrong,
              f"{12 - len(wrong)}/12 as expected" + (f", wrong: {wrong}" if wrong else ""))


def test_ac10_tail_adjudication(criterion):
    ref_decay = adaptive_quad(lambda t: math.exp(-t ** 3), 0, 10).value.real
    ref_grow = adaptive_quad(lambda t: math.exp(t ** 3), -10, 0).value.real
    dec = tail_integral_odd(1, 0.0, TailSign.DECAYING_AT_PLUS_INF).value.real
    grow = tail_integral_odd(1, 0.0, TailSign.GROWING_AT_PLUS_INF).value.real
    ok = abs(dec - ref_decay) <= 1e-9 and abs(grow - ref_grow) <= 1e-9 and grow > 0
    criterion(10, "odd-power tails at x=0 equal Gamma(4/3) in both directions", ok,
              f"growing={grow!r}, decaying={dec!r}, quadrature={ref_decay!r}")


def test_ac11_default_table(criterion):
    result = CliRunner().invoke(main, ["table"])
    rows = list(csv.DictReader(io.StringIO(result.output)))
    xs = [float(r["x"]) for r in rows]
    re = [float(r["re"]) for r in rows]
    monotone = all(b >= a for a, b in zip(re, re[1:]))
    through_origin = any(x == 0 and g == 0 for x, g in zip(xs, re))
    plateau = max(abs(g - math.copysign(SQRT_PI / 2, x)) for x, g in zip(xs, re) if abs(x) >= 4)
    ok = result.exit_code == 0 and len(rows) == 501 and monotone and through_origin and plateau <= 1e-6
    criterion(11, "default table: monotone, through (0,0), plateaus at +-sqrt(pi)/2", ok,
              f"{len(rows)} rows, monotone={monotone}, origin={through_origin}, "
              f"plateau dev {plateau:.1e} (tol 1e-6)")
