# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled series kernels.

Same functions, signatures and return tuples as ``_pykernels``.
"""

from libc.math cimport hypot, fabs

cdef double EPS = 2.0 ** -53


cdef inline double cabs_(double complex z) nogil:
    return hypot(z.real, z.imag)


cdef inline bint _stop(double abs_t, double prev_abs_t, double abs_s,
                       double abs_sum, double tol) nogil:
    cdef double floor = tol * abs_s
    cdef double noise = EPS * abs_sum
    if noise > floor:
        floor = noise
    return abs_t <= floor and prev_abs_t <= floor and abs_t <= prev_abs_t


cdef inline void _neumaier(double *s, double *c, double x) nogil:
    cdef double y = s[0] + x
    if fabs(s[0]) >= fabs(x):
        c[0] += (s[0] - y) + x
    else:
        c[0] += (x - y) + s[0]
    s[0] = y


def series_1f1(a, b, z, double tol, long max_terms):
    cdef double complex ca = a, cb = b, cz = z
    cdef double complex t = 1.0
    cdef double s_re = 1.0, s_im = 0.0, c_re = 0.0, c_im = 0.0
    cdef double abs_sum = 1.0, weighted = 0.0, prev = 1.0, at = 1.0
    cdef long n = 1
    cdef double complex value
    if cz == 0:
        return 1.0 + 0.0j, 1, 0.0, 1.0, True
    with nogil:
        while n < max_terms:
            t = t * (ca + (n - 1)) * cz / ((cb + (n - 1)) * n)
            _neumaier(&s_re, &c_re, t.real)
            _neumaier(&s_im, &c_im, t.imag)
            at = cabs_(t)
            abs_sum += at
            weighted += n * at
            if n >= 4 and _stop(at, prev, hypot(s_re, s_im), abs_sum, tol):
                break
            prev = at
            n += 1
    value = (s_re + c_re) + 1j * (s_im + c_im)
    err = at + EPS * (cabs_(value) + 6.0 * weighted)
    if n < max_terms:
        return complex(value), n + 1, err, abs_sum, True
    return complex(value), n, err, abs_sum, False


def series_1f2(a, b, c, z, double tol, long max_terms):
    cdef double complex ca = a, cb = b, cc = c, cz = z
    cdef double complex t = 1.0
    cdef double s_re = 1.0, s_im = 0.0, c_re = 0.0, c_im = 0.0
    cdef double abs_sum = 1.0, weighted = 0.0, prev = 1.0, at = 1.0
    cdef long n = 1
    cdef double complex value
    if cz == 0:
        return 1.0 + 0.0j, 1, 0.0, 1.0, True
    with nogil:
        while n < max_terms:
            t = t * (ca + (n - 1)) * cz / ((cb + (n - 1)) * (cc + (n - 1)) * n)
            _neumaier(&s_re, &c_re, t.real)
            _neumaier(&s_im, &c_im, t.imag)
            at = cabs_(t)
            abs_sum += at
            weighted += n * at
            if n >= 4 and _stop(at, prev, hypot(s_re, s_im), abs_sum, tol):
                break
            prev = at
            n += 1
    value = (s_re + c_re) + 1j * (s_im + c_im)
    err = at + EPS * (cabs_(value) + 8.0 * weighted)
    if n < max_terms:
        return complex(value), n + 1, err, abs_sum, True
    return complex(value), n, err, abs_sum, False


def asymptotic_sum(p, q, w, long max_terms):
    cdef double complex cp = p, cq = q, cw = w
    cdef double complex s = 1.0, t = 1.0, nt
    cdef double prev = 1.0, at
    cdef long n = 1
    while n < max_terms:
        nt = t * (cp + (n - 1)) * (cq + (n - 1)) * cw / n
        at = cabs_(nt)
        if at > prev:
            return complex(s), n, at
        s = s + nt
        t = nt
        if at <= EPS * cabs_(s):
            return complex(s), n + 1, at
        prev = at
        n += 1
    nt = t * (cp + (n - 1)) * (cq + (n - 1)) * cw / n
    return complex(s), n, cabs_(nt)


def taylor_continue(a, b, z0, w, dw, z1, long nsteps, double tol):
    cdef double complex ca = a, cb = b, zc = z0, cw = w, cdw = dw
    cdef double complex h = (<double complex>z1 - zc) / nsteps
    cdef double complex d0, d1, d2, s, ds
    cdef long step, k, quiet, most = 0
    cdef double ad
    with nogil:
        for step in range(nsteps):
            d0 = cw
            d1 = cdw * h
            s = d0 + d1
            ds = d1
            k = 0
            quiet = 0
            while True:
                d2 = ((k + 1) * (zc - cb - k) * h * d1 + (k + ca) * h * h * d0) / (
                    zc * (k + 2) * (k + 1))
                s = s + d2
                ds = ds + (k + 2) * d2
                ad = cabs_(d2)
                if ad <= tol * cabs_(s) or ad == 0.0:
                    quiet += 1
                    if quiet >= 2 and k >= 2:
                        break
                else:
                    quiet = 0
                d0 = d1
                d1 = d2
                k += 1
                if k > 500:
                    break
            if k + 2 > most:
                most = k + 2
            cw = s
            cdw = ds / h
            zc = zc + h
    return complex(cw), complex(cdw), most
