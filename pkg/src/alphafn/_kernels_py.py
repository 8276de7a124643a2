"""Pure-Python numerical kernels.

Fallback twin of the compiled extension ``_kernels_cy``; both expose the
same functions with identical semantics, and `alphafn.backend` picks one
at import time.  Everything here is scalar double-precision arithmetic;
``math.pow`` is used for integer powers so that both backends round the
same way.

Series kernels return ``(value, terms_used, tail_bound, converged)`` and
never raise; the callers own the error contract.  Mean kernels return the
equal-weight average of an integrand over ``n`` uniformly spaced circle
(or torus) nodes ``theta_j = 2*pi*j/n``, accumulated in ascending node
order for reproducibility.
"""

import cmath
import math

TWO_PI = 6.283185307179586


def alpha_sum(x, s, tol, max_terms):
    """Sum x^n/(n!)^s with the dual stopping rule.

    Terms follow the recurrence term_{n+1} = term_n * x/(n+1)**s, never
    forming (n!)**s, which overflows doubles near n=58 already for s=3.
    After adding term n the loop stops once the next-term bound
    t_n*r <= tol with r = |x|/(n+1)**s <= 1/2; the geometric tail bound
    is then t_n*r/(1-r).
    """
    x = complex(x)
    ax = abs(x)
    total = 0j
    term = 1 + 0j
    for n in range(max_terms):
        total += term
        t_mag = abs(term)
        den = math.pow(n + 1, s)
        r = ax / den
        if r <= 0.5 and t_mag * r <= tol:
            return total, n + 1, t_mag * r / (1.0 - r), True
        term = term * x / den
    return total, max_terms, math.inf, False


def alpha_deriv_sum(x, s, k, tol, max_terms):
    """Sum the k-th term-wise derivative: sum_{n>=k} n!/(n-k)! x^(n-k)/(n!)^s.

    Successive-term ratio r_n = |x|*(n+1)/((n+1-k)*(n+1)**s) is
    nonincreasing in n, so the same geometric tail bound applies.
    """
    x = complex(x)
    ax = abs(x)
    # first coefficient: k!/(k!)^s = (k!)^(1-s)
    c = 1.0
    for i in range(1, k + 1):
        c *= math.pow(i, 1 - s)
    total = 0j
    term = complex(c, 0.0)
    n = k
    for _ in range(max_terms):
        total += term
        t_mag = abs(term)
        factor = (n + 1) / ((n + 1 - k) * math.pow(n + 1, s))
        r = ax * factor
        if r <= 0.5 and t_mag * r <= tol:
            return total, n - k + 1, t_mag * r / (1.0 - r), True
        term = term * x * factor
        n += 1
    return total, max_terms, math.inf, False


def alpha2_mean(x, n):
    """Circle mean of exp((x+1)cos t)*cos((x-1)sin t) over n nodes."""
    total = 0.0
    for j in range(n):
        t = (TWO_PI * j) / n
        total += math.exp((x + 1.0) * math.cos(t)) * math.cos((x - 1.0) * math.sin(t))
    return total / n


def bessel_mean(a, b, n):
    """Circle mean of exp(a*cos t + b*sin t) over n nodes."""
    total = 0.0
    for j in range(n):
        t = (TWO_PI * j) / n
        total += math.exp(a * math.cos(t) + b * math.sin(t))
    return total / n


def alpha3_real_mean(x, n):
    """Torus mean of the expanded real integrand for the s=3 identity.

    Integrand: exp(x cos th + cos th cos t + cos t) *
      [cos(x sin th - sin th cos t) cos(cos th sin t - sin t) cosh(sin th sin t)
       - sin(x sin th - sin th cos t) sin(cos th sin t - sin t) sinh(sin th sin t)]
    """
    total = 0.0
    for j in range(n):
        th = (TWO_PI * j) / n
        cth = math.cos(th)
        sth = math.sin(th)
        for kk in range(n):
            t = (TWO_PI * kk) / n
            ct = math.cos(t)
            st = math.sin(t)
            common = math.exp(x * cth + cth * ct + ct)
            a1 = x * sth - sth * ct
            a2 = cth * st - st
            a3 = sth * st
            total += common * (
                math.cos(a1) * math.cos(a2) * math.cosh(a3)
                - math.sin(a1) * math.sin(a2) * math.sinh(a3)
            )
    return total / (n * n)


def alpha3_complex_mean(x, n):
    """Torus mean of exp(x e^{i th}) exp((e^{-i th}+1)cos t) cos((e^{-i th}-1)sin t)."""
    total = 0j
    for j in range(n):
        th = (TWO_PI * j) / n
        eith = complex(math.cos(th), math.sin(th))
        emith = eith.conjugate()
        f1 = cmath.exp(x * eith)
        for kk in range(n):
            t = (TWO_PI * kk) / n
            ct = math.cos(t)
            st = math.sin(t)
            total += f1 * cmath.exp((emith + 1.0) * ct) * cmath.cos((emith - 1.0) * st)
    return total / (n * n)


def exp_alpha_mean(x, s, n, tol, max_terms):
    """Circle mean of exp(x e^{i th}) * alpha(e^{-i th}, s-1) over n nodes.

    Returns (mean, converged); converged is False if any inner series
    evaluation ran out of terms.
    """
    total = 0j
    for j in range(n):
        th = (TWO_PI * j) / n
        eith = complex(math.cos(th), math.sin(th))
        inner, _, _, ok = alpha_sum(eith.conjugate(), s - 1, tol, max_terms)
        if not ok:
            return 0j, False
        total += cmath.exp(x * eith) * inner
    return total / n, True
