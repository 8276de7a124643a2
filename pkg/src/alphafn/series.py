"""Direct series evaluation of alpha(x, s) = sum_{n>=0} x^n/(n!)^s.

Covers real and complex arguments, term-wise derivatives, and the
modified Bessel function I0 through the reduction I0(z) = alpha(z^2/4, 2).
Every result carries a rigorous geometric tail bound for the truncation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .backend import kernels
from .errors import InvalidQueryError, NonConvergenceError

DEFAULT_TOL = 1e-13
DEFAULT_MAX_TERMS = 500


def _check_query(x: complex, s: int) -> complex:
    if not isinstance(s, int):
        raise InvalidQueryError(f"s must be an integer >= 1, got {s!r}")
    if s < 1:
        raise InvalidQueryError(f"s must be >= 1, got {s}")
    x = complex(x)
    if not (math.isfinite(x.real) and math.isfinite(x.imag)):
        raise InvalidQueryError(f"x must be finite, got {x!r}")
    return x


def _check_budget(tol: float, max_terms: int) -> None:
    if not tol > 0:
        raise InvalidQueryError(f"tol must be positive, got {tol!r}")
    if max_terms < 2:
        raise InvalidQueryError(f"max_terms must be >= 2, got {max_terms!r}")


@dataclass(frozen=True)
class AlphaQuery:
    """An evaluation request: argument x (complex allowed) and power s >= 1."""

    x: complex
    s: int

    def __post_init__(self):
        object.__setattr__(self, "x", _check_query(self.x, self.s))


@dataclass(frozen=True)
class SeriesResult:
    """Truncated-series value with the number of summed terms and a tail bound.

    ``tail_bound`` majorizes |exact - value|: it is the geometric bound
    t*r/(1-r) from the last added term t and the next-term ratio r <= 1/2.
    """

    value: complex
    terms_used: int
    tail_bound: float


def alpha_series(
    x: complex | float,
    s: int,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesResult:
    """Evaluate alpha(x, s) by direct summation.

    Terms are generated forward by term_{n+1} = term_n * x/(n+1)**s.
    Summation stops once the next term is bounded by ``tol`` and the term
    ratio has fallen to 1/2 or below, which makes the attached tail bound
    rigorous.  Raises NonConvergenceError when ``max_terms`` is exhausted
    first (|x| too large for the budget).
    """
    x = _check_query(x, s)
    _check_budget(tol, max_terms)
    value, terms, tail, ok = kernels.alpha_sum(x, s, tol, max_terms)
    if not ok:
        raise NonConvergenceError(
            f"alpha({x!r}, {s}) did not reach tol={tol:g} within {max_terms} terms"
        )
    return SeriesResult(value, terms, tail)


def alpha_derivative_series(
    x: complex | float,
    s: int,
    k: int,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesResult:
    """Evaluate the k-th derivative of alpha(., s) at x, term by term.

    The summand is n(n-1)...(n-k+1) x^(n-k)/(n!)^s for n >= k, with
    successive-term ratio r_n = |x|(n+1)/((n+1-k)(n+1)**s); the ratio is
    nonincreasing, so the geometric tail bound carries over unchanged.
    """
    x = _check_query(x, s)
    _check_budget(tol, max_terms)
    if not isinstance(k, int) or k < 0:
        raise InvalidQueryError(f"k must be an integer >= 0, got {k!r}")
    value, terms, tail, ok = kernels.alpha_deriv_sum(x, s, k, tol, max_terms)
    if not ok:
        raise NonConvergenceError(
            f"alpha^({k})({x!r}, {s}) did not reach tol={tol:g} "
            f"within {max_terms} terms"
        )
    return SeriesResult(value, terms, tail)


def bessel_i0(
    z: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesResult:
    """Modified Bessel function I0(z) = sum (z^2/4)^n/(n!)^2 = alpha(z^2/4, 2)."""
    if not math.isfinite(z):
        raise InvalidQueryError(f"z must be finite, got {z!r}")
    return alpha_series(z * z / 4.0, 2, tol, max_terms)
