# cython: language_level=3, cdivision=True, boundscheck=False, wraparound=False
"""Compiled numerical kernels; twin of ``_kernels_py``.

Same function surface and stopping rules as the pure-Python module.
Complex exponential/cosine are expanded into real libm calls:
exp(a+bi) = e^a (cos b + i sin b) and cos(a+bi) = cos a cosh b - i sin a sinh b.
"""

from libc.math cimport cos, cosh, exp, pow, sin, sinh

cdef double TWO_PI = 6.283185307179586
cdef double INF = float("inf")


cdef inline double complex _cexp(double complex z):
    cdef double m = exp(z.real)
    return m * cos(z.imag) + 1j * (m * sin(z.imag))


cdef inline double complex _ccos(double complex z):
    return cos(z.real) * cosh(z.imag) - 1j * (sin(z.real) * sinh(z.imag))


def alpha_sum(double complex x, int s, double tol, int max_terms):
    """Sum x^n/(n!)^s; returns (value, terms_used, tail_bound, converged)."""
    cdef double ax = abs(x)
    cdef double complex total = 0
    cdef double complex term = 1
    cdef double t_mag, den, r
    cdef int n
    for n in range(max_terms):
        total = total + term
        t_mag = abs(term)
        den = pow(n + 1, s)
        r = ax / den
        if r <= 0.5 and t_mag * r <= tol:
            return total, n + 1, t_mag * r / (1.0 - r), True
        term = term * x / den
    return total, max_terms, INF, False


def alpha_deriv_sum(double complex x, int s, int k, double tol, int max_terms):
    """Sum the k-th term-wise derivative series; same result contract."""
    cdef double ax = abs(x)
    cdef double c = 1.0
    cdef int i
    for i in range(1, k + 1):
        c *= pow(i, 1 - s)
    cdef double complex total = 0
    cdef double complex term = c
    cdef double t_mag, factor, r
    cdef int n = k
    cdef int count
    for count in range(max_terms):
        total = total + term
        t_mag = abs(term)
        factor = (n + 1) / ((n + 1 - k) * pow(n + 1, s))
        r = ax * factor
        if r <= 0.5 and t_mag * r <= tol:
            return total, n - k + 1, t_mag * r / (1.0 - r), True
        term = term * x * factor
        n += 1
    return total, max_terms, INF, False


def alpha2_mean(double x, int n):
    """Circle mean of exp((x+1)cos t)*cos((x-1)sin t) over n nodes."""
    cdef double total = 0.0
    cdef double t
    cdef int j
    for j in range(n):
        t = (TWO_PI * j) / n
        total += exp((x + 1.0) * cos(t)) * cos((x - 1.0) * sin(t))
    return total / n


def bessel_mean(double a, double b, int n):
    """Circle mean of exp(a*cos t + b*sin t) over n nodes."""
    cdef double total = 0.0
    cdef double t
    cdef int j
    for j in range(n):
        t = (TWO_PI * j) / n
        total += exp(a * cos(t) + b * sin(t))
    return total / n


def alpha3_real_mean(double x, int n):
    """Torus mean of the expanded real integrand for the s=3 identity."""
    cdef double total = 0.0
    cdef double th, cth, sth, t, ct, st, common, a1, a2, a3
    cdef int j, kk
    for j in range(n):
        th = (TWO_PI * j) / n
        cth = cos(th)
        sth = sin(th)
        for kk in range(n):
            t = (TWO_PI * kk) / n
            ct = cos(t)
            st = sin(t)
            common = exp(x * cth + cth * ct + ct)
            a1 = x * sth - sth * ct
            a2 = cth * st - st
            a3 = sth * st
            total += common * (
                cos(a1) * cos(a2) * cosh(a3) - sin(a1) * sin(a2) * sinh(a3)
            )
    return total / (<double> n * n)


def alpha3_complex_mean(double x, int n):
    """Torus mean of exp(x e^{i th}) exp((e^{-i th}+1)cos t) cos((e^{-i th}-1)sin t)."""
    cdef double complex total = 0
    cdef double complex eith, emith, f1
    cdef double th, t, ct, st
    cdef int j, kk
    for j in range(n):
        th = (TWO_PI * j) / n
        eith = cos(th) + 1j * sin(th)
        emith = cos(th) - 1j * sin(th)
        f1 = _cexp(x * eith)
        for kk in range(n):
            t = (TWO_PI * kk) / n
            ct = cos(t)
            st = sin(t)
            total = total + f1 * _cexp((emith + 1.0) * ct) * _ccos((emith - 1.0) * st)
    return total / (<double> n * n)


def exp_alpha_mean(double x, int s, int n, double tol, int max_terms):
    """Circle mean of exp(x e^{i th}) * alpha(e^{-i th}, s-1) over n nodes."""
    cdef double complex total = 0
    cdef double complex eith, inner, term
    cdef double th, ax, t_mag, den, r
    cdef int j, m
    cdef bint ok
    for j in range(n):
        th = (TWO_PI * j) / n
        eith = cos(th) + 1j * sin(th)
        # inline alpha_sum(conj(eith), s-1, ...) keeping only the value
        inner = 0
        term = 1
        ax = 1.0  # |e^{-i th}| == 1
        ok = False
        for m in range(max_terms):
            inner = inner + term
            t_mag = abs(term)
            den = pow(m + 1, s - 1)
            r = ax / den
            if r <= 0.5 and t_mag * r <= tol:
                ok = True
                break
            term = term * (cos(th) - 1j * sin(th)) / den
        if not ok:
            return 0j, False
        total = total + _cexp(x * eith) * inner
    return total / n, True
