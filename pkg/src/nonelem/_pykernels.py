"""Pure-Python series kernels.

Mirror of ``_kernels.pyx``; used when the compiled extension is not
available (or ``NONELEM_PURE_PYTHON=1`` is set).  Every function here has
the same signature and return layout as its compiled twin.
"""

import math

EPS = 2.0 ** -53


def _stop(abs_t, prev_abs_t, abs_s, abs_sum, tol):
    floor = tol * abs_s
    noise = EPS * abs_sum
    if noise > floor:
        floor = noise
    return abs_t <= floor and prev_abs_t <= floor and abs_t <= prev_abs_t


def series_1f1(a, b, z, tol, max_terms):
    """Sum sum_n (a)_n/(b)_n z^n/n! with a Neumaier-compensated accumulator.

    Returns ``(value, terms_used, err_estimate, abs_sum, converged)``.
    """
    a = complex(a)
    b = complex(b)
    z = complex(z)
    s_re, s_im = 1.0, 0.0
    c_re, c_im = 0.0, 0.0
    t = 1.0 + 0.0j
    abs_sum = 1.0
    weighted = 0.0
    prev = 1.0
    n = 1
    if z == 0:
        return 1.0 + 0.0j, 1, 0.0, 1.0, True
    while n < max_terms:
        t = t * (a + (n - 1)) * z / ((b + (n - 1)) * n)
        # Neumaier on each component
        x = t.real
        y = s_re + x
        if abs(s_re) >= abs(x):
            c_re += (s_re - y) + x
        else:
            c_re += (x - y) + s_re
        s_re = y
        x = t.imag
        y = s_im + x
        if abs(s_im) >= abs(x):
            c_im += (s_im - y) + x
        else:
            c_im += (x - y) + s_im
        s_im = y
        at = abs(t)
        abs_sum += at
        weighted += n * at
        if n >= 4 and _stop(at, prev, math.hypot(s_re, s_im), abs_sum, tol):
            value = complex(s_re + c_re, s_im + c_im)
            err = at + EPS * (abs(value) + 6.0 * weighted)
            return value, n + 1, err, abs_sum, True
        prev = at
        n += 1
    value = complex(s_re + c_re, s_im + c_im)
    return value, n, abs(t) + EPS * (abs(value) + 6.0 * weighted), abs_sum, False


def series_1f2(a, b, c, z, tol, max_terms):
    """Sum sum_n (a)_n/((b)_n (c)_n) z^n/n!; same return layout as series_1f1."""
    a = complex(a)
    b = complex(b)
    c = complex(c)
    z = complex(z)
    s_re, s_im = 1.0, 0.0
    c_re, c_im = 0.0, 0.0
    t = 1.0 + 0.0j
    abs_sum = 1.0
    weighted = 0.0
    prev = 1.0
    n = 1
    if z == 0:
        return 1.0 + 0.0j, 1, 0.0, 1.0, True
    while n < max_terms:
        t = t * (a + (n - 1)) * z / ((b + (n - 1)) * (c + (n - 1)) * n)
        x = t.real
        y = s_re + x
        if abs(s_re) >= abs(x):
            c_re += (s_re - y) + x
        else:
            c_re += (x - y) + s_re
        s_re = y
        x = t.imag
        y = s_im + x
        if abs(s_im) >= abs(x):
            c_im += (s_im - y) + x
        else:
            c_im += (x - y) + s_im
        s_im = y
        at = abs(t)
        abs_sum += at
        weighted += n * at
        if n >= 4 and _stop(at, prev, math.hypot(s_re, s_im), abs_sum, tol):
            value = complex(s_re + c_re, s_im + c_im)
            err = at + EPS * (abs(value) + 8.0 * weighted)
            return value, n + 1, err, abs_sum, True
        prev = at
        n += 1
    value = complex(s_re + c_re, s_im + c_im)
    return value, n, abs(t) + EPS * (abs(value) + 8.0 * weighted), abs_sum, False


def asymptotic_sum(p, q, w, max_terms):
    """Optimally truncated sum_n (p)_n (q)_n / n! w^n.

    Stops before the first term that is larger than its predecessor, once
    terms fall below rounding level, or after ``max_terms`` terms.  Returns
    ``(value, terms_used, abs_first_omitted)``.
    """
    p = complex(p)
    q = complex(q)
    w = complex(w)
    s = 1.0 + 0.0j
    t = 1.0 + 0.0j
    prev = 1.0
    n = 1
    while n < max_terms:
        nt = t * (p + (n - 1)) * (q + (n - 1)) * w / n
        at = abs(nt)
        if at > prev:
            return s, n, at
        s += nt
        t = nt
        if at <= EPS * abs(s):
            return s, n + 1, at
        prev = at
        n += 1
    nt = t * (p + (n - 1)) * (q + (n - 1)) * w / n
    return s, n, abs(nt)


def taylor_continue(a, b, z0, w, dw, z1, nsteps, tol):
    """Carry (w, w') of a solution of z w'' + (b - z) w' - a w = 0 from z0 to z1.

    Straight-line path in ``nsteps`` equal steps; at each centre the local
    Taylor coefficients come from the three-term recurrence of the ODE.
    Returns ``(w, dw, max_terms_per_step)``.
    """
    a = complex(a)
    b = complex(b)
    zc = complex(z0)
    w = complex(w)
    dw = complex(dw)
    h = (complex(z1) - zc) / nsteps
    most = 0
    for _ in range(nsteps):
        # d_k = c_k h^k
        d0 = w
        d1 = dw * h
        s = d0 + d1
        ds = d1
        k = 0
        quiet = 0
        while True:
            d2 = ((k + 1) * (zc - b - k) * h * d1 + (k + a) * h * h * d0) / (
                zc * (k + 2) * (k + 1))
            s += d2
            ds += (k + 2) * d2
            ad = abs(d2)
            if ad <= tol * abs(s) or ad == 0.0:
                quiet += 1
                if quiet >= 2 and k >= 2:
                    break
            else:
                quiet = 0
            d0, d1 = d1, d2
            k += 1
            if k > 500:
                break
        if k + 2 > most:
            most = k + 2
        w = s
        dw = ds / h
        zc = zc + h
    return w, dw, most
