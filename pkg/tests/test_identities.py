import pytest

from nonelem.antideriv import Family, IntegralSpec, antideriv
from nonelem.hyper_core import HyperParams, hyp1f2_series
from nonelem.identities import (
    GRID_MAX_ARG,
    IdentityId,
    check,
    check_t2_cos,
    check_t2_cosh,
    check_t3_sin,
    check_t3_sinh,
    grid_cases,
    run_grid,
)
from nonelem.errors import DomainError

CHECKS = [check_t2_cosh, check_t2_cos, check_t3_sinh, check_t3_sin]


@pytest.mark.parametrize("fn", CHECKS)
def test_zero_point(fn):
    r = fn(1.3, 3, 0.0)
    assert r.residual == 0 and r.passed


@pytest.mark.parametrize("fn,lam,alpha,x,tol", [
    (check_t2_cosh, 1, 2, 1, 1e-11),
    (check_t2_cosh, 2j, 3, 0.8, 1e-10),
    (check_t2_cos, 1, 2, 1.5, 1e-11),
    (check_t2_cos, 0.5, 4, 1, 1e-11),
    (check_t3_sinh, 1, 2, 1, 1e-11),
    (check_t3_sinh, -1.5, 3, 0.7, 1e-10),
    (check_t3_sin, 1, 2, 1, 1e-11),
    (check_t3_sin, 1, 2, 2, 1e-10),
])
def test_examples(fn, lam, alpha, x, tol):
    r = fn(lam, alpha, x)
    assert r.residual <= tol


def test_real_lambda_gives_real_rhs():
    for lam in (0.5, -1, 2):
        for x in (0.5, 1.0, 1.5):
            assert abs(check_t2_cos(lam, 2, x).rhs.imag) <= 1e-11
            assert abs(check_t3_sin(lam, 3, x).rhs.imag) <= 1e-11


def test_grid():
    cases = list(grid_cases())
    assert all(abs(lam) * x ** a <= GRID_MAX_ARG for lam, a, x in cases)
    reports = run_grid()
    assert len(reports) == 4 * len(cases) >= 120
    assert all(r.residual <= 1e-10 for r in reports)


def test_minus_sign_in_sinh_identity_fails():
    # with -lam^2 x^(2a)/4 the 1F2 side no longer matches the 1F1 side
    lam, alpha, x = 1.0, 2, 1.0
    wrong = lam * x ** alpha / (alpha + 1) * hyp1f2_series(
        HyperParams(0.75, 1.5, 1.75), -(lam ** 2) * x ** (2 * alpha) / 4).value
    assert abs(wrong - check_t3_sinh(lam, alpha, x).rhs) > 1e-3


def test_sinh_identity_is_the_antiderivative():
    lam, alpha, x = 0.8 - 0.2j, 3, 1.1
    r = check_t3_sinh(lam, alpha, x)
    assert abs(x * r.lhs - antideriv(IntegralSpec(Family.SINH, lam, alpha), x)) < 1e-14


def test_tolerance_scales_for_large_arguments():
    r = check_t2_cosh(2, 2, 2.0)  # |lam| x^alpha = 8
    assert r.tolerance == pytest.approx(1e-10 * max(1, abs(r.lhs)))
    assert check_t2_cosh(0.5, 2, 1.0).tolerance == 1e-10


def test_dispatch_and_validation():
    assert check("t2-cos", 1, 2, 1).identity_id is IdentityId.T2_COS
    with pytest.raises(ValueError):
        check("t4", 1, 2, 1)
    with pytest.raises(DomainError):
        check_t2_cosh(1, 1.5, 1)
    with pytest.raises(DomainError):
        check_t2_cosh(1, 2.5, -1)
