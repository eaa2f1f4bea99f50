import cmath
import math

import pytest

from nonelem.antideriv import (
    Direction,
    Family,
    IntegralSpec,
    LimitKind,
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
from nonelem.errors import DomainError
from nonelem.oracle import adaptive_quad

FAMILIES = list(Family)
SQRT_PI = math.sqrt(math.pi)


def quad(spec, a, b, tol=1e-13):
    lo, hi, s = (a, b, 1) if a <= b else (b, a, -1)
    return s * adaptive_quad(lambda t: integrand(spec, t), lo, hi, tol=tol).value


def test_spec_validation():
    with pytest.raises(DomainError):
        IntegralSpec(Family.EXP, -1, 1.5)
    with pytest.raises(ValueError):
        IntegralSpec("tan", -1, 2)
    s = IntegralSpec("cos", 2, 3)
    assert s.family is Family.COS and s.lam == 2 + 0j and not s.even and s.integer_alpha


def test_erf_value():
    # G(1) for exp(-x^2) is sqrt(pi)/2 erf(1)
    v = antideriv_exp(IntegralSpec(Family.EXP, -1, 2), 1.0)
    assert v.real == pytest.approx(SQRT_PI / 2 * math.erf(1.0), rel=1e-15)


def test_family_guard():
    with pytest.raises(ValueError):
        antideriv_cosh(IntegralSpec(Family.EXP, -1, 2), 1.0)


@pytest.mark.parametrize("family", FAMILIES)
def test_zero_at_origin(family):
    assert antideriv(IntegralSpec(family, 1.3, 3), 0.0) == 0


@pytest.mark.parametrize("fn,family,expected", [
    (antideriv_cos, Family.COS, 0.9045242379002720),
    (antideriv_sin, Family.SIN, 0.3102683017233811),
    (antideriv_cosh, Family.COSH, 1.1047379393598043),
    (antideriv_sinh, Family.SINH, 0.357913806547377),
])
def test_unit_interval_values(fn, family, expected):
    assert fn(IntegralSpec(family, 1, 2), 1.0).real == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("alpha", [2, 3, 4])
def test_odd_symmetry_for_even_alpha_and_parity(family, alpha):
    spec = IntegralSpec(family, 0.7 - 0.4j, alpha)
    g = antideriv(spec, 1.3)
    g_neg = antideriv(spec, -1.3)
    if alpha % 2 == 0:
        # even integrand, odd antiderivative
        assert abs(g + g_neg) <= 1e-14 * abs(g)
    else:
        assert abs(g_neg - quad(spec, 0, -1.3)) <= 1e-12 * max(1, abs(g_neg))


def test_lambda_zero():
    assert antideriv(IntegralSpec(Family.EXP, 0, 2), 2.5) == 2.5
    assert antideriv(IntegralSpec(Family.COS, 0, 2), 2.5) == 2.5
    assert antideriv(IntegralSpec(Family.SIN, 0, 2), 2.5) == 0


def test_non_integer_alpha():
    spec = IntegralSpec(Family.EXP, -1, 2.5)
    assert antideriv(spec, 1.2) == pytest.approx(quad(spec, 0, 1.2), rel=1e-12)
    with pytest.raises(DomainError):
        antideriv(spec, -1.0)


def test_inflection_of_gaussian_antiderivative():
    # G'' = -2x e^{-x^2} vanishes only at 0; G is convex below and concave above
    spec = IntegralSpec(Family.EXP, -1, 2)
    h = 1e-3
    for x, sign in ((-1.0, 1), (1.0, -1)):
        second = (antideriv(spec, x + h) - 2 * antideriv(spec, x) + antideriv(spec, x - h)).real / h ** 2
        assert sign * second > 0


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("lam", [-1.5, 2.0, 0.5 + 1.5j])
def test_large_argument_pair_route(family, lam):
    # |lam| x^alpha up to ~ 55: beyond the 1F2 comfort zone
    spec = IntegralSpec(family, lam, 2)
    x = 5.2 if abs(lam) < 2 else 3.7
    r = evaluate(spec, x)
    ref = quad(spec, 0, x, tol=1e-13 * max(1.0, abs(r.value)))
    assert abs(r.value - ref) <= 1e-9 * max(1.0, abs(ref))


def test_continuation_regime_used_near_imaginary_axis():
    r = evaluate(IntegralSpec(Family.EXP, 1j, 2), 4.5)
    assert r.regime == "continuation"
    assert abs(r.value - quad(IntegralSpec(Family.EXP, 1j, 2), 0, 4.5)) < 1e-11


def test_euler_hyperbolic_split():
    for lam in (0.8, -1.2 + 0.3j):
        for alpha in (2, 3):
            for x in (0.4, 1.1, 1.7):
                c = antideriv(IntegralSpec(Family.COSH, lam, alpha), x)
                s = antideriv(IntegralSpec(Family.SINH, lam, alpha), x)
                e = antideriv(IntegralSpec(Family.EXP, lam, alpha), x)
                assert abs(c + s - e) <= 1e-10


def test_asymptotic_form_matches_series():
    for x in (-6.0, 6.0):
        spec = IntegralSpec(Family.EXP, -1, 2)
        assert abs(antideriv_exp_asymptotic(spec, x) - antideriv_exp(spec, x)) < 1e-13
    spec = IntegralSpec(Family.EXP, 1, 3)
    # decaying side: the exponential term is negligible
    assert abs(antideriv_exp_asymptotic(spec, -3.5) - antideriv_exp(spec, -3.5)) < 1e-13
    # growing side keeps only the leading term, relative error O(1/z)
    z = 3.5 ** 3
    a = antideriv_exp_asymptotic(spec, 3.5)
    b = antideriv_exp(spec, 3.5)
    assert abs(a - b) <= 1.0 / z * abs(b)


def test_asymptotic_form_inside_radius():
    with pytest.raises(DomainError):
        antideriv_exp_asymptotic(IntegralSpec(Family.EXP, -1, 2), 2.0)


def test_limits():
    g = math.gamma(1.5)
    spec = IntegralSpec(Family.EXP, -1, 2)
    assert limit_at_infinity(spec, Direction.PLUS_INF).value.real == pytest.approx(g, rel=1e-15)
    assert limit_at_infinity(spec, "-inf").value.real == pytest.approx(-g, rel=1e-15)
    odd = IntegralSpec(Family.EXP, 1, 3)
    lim = limit_at_infinity(odd, Direction.MINUS_INF)
    assert lim.kind is LimitKind.FINITE
    assert lim.value.real == pytest.approx(-math.gamma(4 / 3), rel=1e-14)
    assert not limit_at_infinity(odd, Direction.PLUS_INF).finite
    with pytest.raises(DomainError):
        limit_at_infinity(IntegralSpec(Family.EXP, -1, 2.5), Direction.MINUS_INF)


def test_complex_lambda_limit_matches_large_x():
    spec = IntegralSpec(Family.EXP, -1 + 2j, 2)
    lim = limit_at_infinity(spec, Direction.PLUS_INF).value
    assert abs(antideriv(spec, 8.0) - lim) < 1e-12
    assert abs(antideriv(spec, -8.0) + lim) < 1e-12


def test_integrand():
    spec = IntegralSpec(Family.SINH, 0.5j, 3)
    assert integrand(spec, 1.2) == pytest.approx(cmath.sinh(0.5j * 1.2 ** 3))


def test_quartic_gaussian_at_five():
    v = antideriv_exp(IntegralSpec(Family.EXP, -1, 4), 5.0)
    assert v.real == pytest.approx(math.gamma(1.25), abs=1e-8)


def test_gaussian_far_points():
    spec = IntegralSpec(Family.EXP, -1, 2)
    assert antideriv(spec, 10.0).real == pytest.approx(SQRT_PI / 2, abs=1e-15)
    assert antideriv(spec, -10.0).real == pytest.approx(-SQRT_PI / 2, abs=1e-15)


def test_fresnel_type_stays_bounded():
    spec = IntegralSpec(Family.COS, 1, 2)
    g40, g50 = antideriv(spec, 40.0), antideriv(spec, 50.0)
    assert abs(g50 - g40) < 0.05
    # and the difference is the actual integral over [40, 50]
    assert abs((g50 - g40) - quad(spec, 40.0, 50.0, tol=1e-12)) < 1e-11
    # int_0^inf cos(t^2) dt = sqrt(pi/8)
    assert abs(g50.real - math.sqrt(math.pi / 8)) < 0.02


def test_sin_cubic_and_sinh_odd_in_lambda():
    spec = IntegralSpec(Family.SIN, 2, 3)
    assert antideriv(spec, 0.5) == pytest.approx(quad(spec, 0, 0.5), rel=1e-13)
    pos = antideriv(IntegralSpec(Family.SINH, 1, 2), 1.0)
    neg = antideriv(IntegralSpec(Family.SINH, -1, 2), 1.0)
    assert neg == -pos
    assert antideriv(IntegralSpec(Family.COSH, 0, 2), 7.0) == 7.0
