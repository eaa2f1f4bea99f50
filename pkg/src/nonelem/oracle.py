"""Independent reference computations for verification.

Nothing in the production evaluation path imports this module.  It holds:

* :func:`adaptive_quad`, a globally adaptive Gauss-Kronrod (7/15) integrator
  for complex-valued integrands on a finite interval;
* :func:`series_oracle_1f1`, a double-double summation of the 1F1 power
  series, written separately from the production kernels.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

from nonelem.errors import ConvergenceError, PoleError

# Kronrod 15-point abscissae/weights on [-1, 1]; Gauss 7-point weights on the
# odd-indexed abscissae.  Values from QUADPACK qk15.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


@dataclass(frozen=True)
class QuadResult:
    value: complex
    err_estimate: float
    subdivisions: int


def _gk15(f, lo: float, hi: float):
    c = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    fc = complex(f(c))
    kron = fc * _WGK[7]
    gauss = fc * _WG[3]
    for j in range(7):
        dx = h * _XGK[j]
        pair = complex(f(c - dx)) + complex(f(c + dx))
        kron += _WGK[j] * pair
        if j % 2 == 1:
            gauss += _WG[j // 2] * pair
    kron *= h
    gauss *= h
    return kron, abs(kron - gauss)


def adaptive_quad(
    f: Callable[[float], complex],
    A: float,
    B: float,
    tol: float = 1e-12,
    max_subdivisions: int = 10_000,
) -> QuadResult:
    """Integrate ``f`` over ``[A, B]`` until the summed Kronrod-Gauss
    difference is at most ``tol``.

    The interval with the largest local error is bisected first.  Raises
    :class:`ConvergenceError` if ``max_subdivisions`` bisections do not
    suffice.
    """
    if A > B:
        raise ValueError("adaptive_quad needs A <= B")
    if A == B:
        return QuadResult(0j, 0.0, 0)
    val, err = _gk15(f, A, B)
    heap = [(-err, A, B, val)]
    total_err = err
    splits = 0
    while total_err > tol:
        if splits >= max_subdivisions:
            raise ConvergenceError(
                f"adaptive_quad: error {total_err:.3g} > {tol:.3g} after {splits} subdivisions")
        neg_err, lo, hi, _ = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise ConvergenceError("adaptive_quad: interval cannot be bisected further")
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        splits += 1
        # re-sum rather than update in place to keep rounding drift out
        total_err = math.fsum(-item[0] for item in heap)
    re = math.fsum(item[3].real for item in heap)
    im = math.fsum(item[3].imag for item in heap)
    return QuadResult(complex(re, im), total_err, splits)


# ---------------------------------------------------------------------------
# double-double arithmetic


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _fast_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _split(a):
    t = 134217729.0 * a
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


class DD:
    """Unevaluated sum ``hi + lo`` of two doubles (about 32 digits)."""

    __slots__ = ("hi", "lo")

    def __init__(self, hi=0.0, lo=0.0):
        self.hi, self.lo = _fast_two_sum(float(hi), float(lo))

    def __add__(self, o):
        if not isinstance(o, DD):
            o = DD(o)
        s, e = _two_sum(self.hi, o.hi)
        t, f = _two_sum(self.lo, o.lo)
        e += t
        s, e = _fast_two_sum(s, e)
        e += f
        return DD(s, e)

    __radd__ = __add__

    def __neg__(self):
        return DD(-self.hi, -self.lo)

    def __sub__(self, o):
        if not isinstance(o, DD):
            o = DD(o)
        return self + (-o)

    def __rsub__(self, o):
        return DD(o) - self

    def __mul__(self, o):
        if not isinstance(o, DD):
            o = DD(o)
        p, e = _two_prod(self.hi, o.hi)
        e += self.hi * o.lo + self.lo * o.hi
        return DD(p, e)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if not isinstance(o, DD):
            o = DD(o)
        q1 = self.hi / o.hi
        r = self - o * q1
        q2 = r.hi / o.hi
        r = r - o * q2
        q3 = r.hi / o.hi
        return DD(q1) + DD(q2) + DD(q3)

    def __float__(self):
        return self.hi + self.lo

    def __abs__(self):
        return -self if self.hi < 0 else self

    def ldexp(self, k):
        return DD(math.ldexp(self.hi, k), math.ldexp(self.lo, k))

    def __repr__(self):
        return f"DD({self.hi!r}, {self.lo!r})"


_LN2 = DD(0.6931471805599453, 2.3190468138462996e-17)
_HALF_PI = DD(1.5707963267948966, 6.123233995736766e-17)


def _dd_exp(x: DD) -> DD:
    if x.hi > 709.0:
        raise OverflowError("exp overflow")
    if x.hi < -745.0:
        return DD(0.0)
    k = round(x.hi / _LN2.hi)
    r = (x - _LN2 * k).ldexp(-10)
    term = DD(1.0)
    s = DD(1.0)
    for n in range(1, 30):
        term = term * r / n
        s = s + term
        if abs(term.hi) < 1e-36:
            break
    for _ in range(10):
        s = s * s
    return s.ldexp(k)


def _dd_cos_sin(x: DD):
    k = round(x.hi / _HALF_PI.hi)
    r = x - _HALF_PI * k
    r2 = r * r
    # Taylor series on |r| <= pi/4
    c = DD(1.0)
    s = DD(r.hi, r.lo)
    tc = DD(1.0)
    ts = DD(r.hi, r.lo)
    for n in range(1, 30):
        tc = -(tc * r2) / ((2 * n - 1) * (2 * n))
        ts = -(ts * r2) / ((2 * n) * (2 * n + 1))
        c = c + tc
        s = s + ts
        if abs(tc.hi) < 1e-36 and abs(ts.hi) < 1e-36:
            break
    q = k % 4
    if q == 0:
        return c, s
    if q == 1:
        return -s, c
    if q == 2:
        return -c, -s
    return s, -c


class DDComplex:
    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        self.re = re if isinstance(re, DD) else DD(re)
        self.im = DD(0.0) if im is None else (im if isinstance(im, DD) else DD(im))

    @classmethod
    def of(cls, z):
        z = complex(z)
        return cls(DD(z.real), DD(z.imag))

    def __add__(self, o):
        return DDComplex(self.re + o.re, self.im + o.im)

    def __mul__(self, o):
        return DDComplex(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __truediv__(self, o):
        den = o.re * o.re + o.im * o.im
        return DDComplex((self.re * o.re + self.im * o.im) / den,
                         (self.im * o.re - self.re * o.im) / den)

    def scale(self, k):
        return DDComplex(self.re * k, self.im * k)

    def magnitude(self) -> float:
        return math.hypot(self.re.hi, self.im.hi)

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def _dd_cexp(z: DDComplex) -> DDComplex:
    m = _dd_exp(z.re)
    c, s = _dd_cos_sin(z.im)
    return DDComplex(m * c, m * s)


def _oracle_sum(a: DDComplex, b: DDComplex, z: DDComplex, max_terms: int) -> DDComplex:
    s = DDComplex(1.0)
    t = DDComplex(1.0)
    quiet = 0
    for n in range(1, max_terms):
        nn = DDComplex(float(n - 1))
        t = t * (a + nn) * z / ((b + nn) * DDComplex(float(n)))
        s = s + t
        # a term changes nothing once it is below the last double-double bit
        if t.magnitude() <= 2.0 ** -106 * s.magnitude():
            quiet += 1
            if quiet >= 40:
                return s
        else:
            quiet = 0
    raise ConvergenceError(f"series oracle did not settle in {max_terms} terms")


def series_oracle_1f1(a, b, z, max_terms: int = 100_000) -> complex:
    """Reference 1F1(a; b; z) by double-double summation.

    For ``Re z < 0`` the Kummer image ``e^z 1F1(b-a; b; -z)`` is summed
    instead, so the terms never alternate in magnitude-destroying ways on
    the negative real axis.
    """
    a = complex(a)
    b = complex(b)
    z = complex(z)
    if b.imag == 0 and b.real <= 0 and b.real == math.floor(b.real):
        raise PoleError("b is zero or a negative integer")
    if z == 0:
        return 1.0 + 0.0j
    A = DDComplex.of(a)
    B = DDComplex.of(b)
    Z = DDComplex.of(z)
    if z.real < 0:
        s = _oracle_sum(DDComplex(B.re - A.re, B.im - A.im), B, DDComplex(-Z.re, -Z.im), max_terms)
        return complex(s * _dd_cexp(Z))
    return complex(_oracle_sum(A, B, Z, max_terms))
