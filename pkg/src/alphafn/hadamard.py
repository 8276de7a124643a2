"""Coefficient-wise (Hadamard) products of power series via circle integrals.

For entire/real-coefficient series f(x) = sum a_n x^n and g(x) = sum b_n x^n
with radii R and R', the series h(x) = sum a_n b_n x^n satisfies

    h(u v) = (1/2pi) int_0^{2pi} f(u e^{i t}) g(v e^{-i t}) dt,   |u|<R, |v|<R'.

Specializing f = g = exp gives the closed forms for s = 2, the reduction to
the modified Bessel function I0, and (iterating against exp once more) the
double-integral identity for s = 3; the same iteration lifts alpha(., s-1)
to alpha(., s) for any s >= 2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from .backend import kernels
from .errors import DomainViolationError, ImaginaryResidueError, InvalidQueryError
from .quadrature import (
    DEFAULT_CONFIG_1D,
    DEFAULT_CONFIG_2D,
    QuadratureConfig,
    QuadratureResult,
    converge,
    trapezoid_periodic_1d,
)
from .series import bessel_i0

# Inner series budget for evaluating alpha at circle points |z| = 1; the
# tail bound lands near the double-precision floor well before 500 terms.
_INNER_TOL = 1e-15
_INNER_MAX_TERMS = 500

# exp overflows doubles just above 709; the closed-form integrands peak at
# exp of the values guarded here, so reject inputs past this point instead
# of letting the two backends diverge (Python raises, C produces inf)
_EXP_PEAK_LIMIT = 700.0


def _guard_exp_peak(peak: float, route: str) -> None:
    if peak > _EXP_PEAK_LIMIT:
        raise InvalidQueryError(
            f"{route}: integrand peak exp({peak:.1f}) exceeds the "
            "double-precision range; use alpha_series instead"
        )

# Promised ceilings for the imaginary residue of results that are real in
# exact arithmetic.  Scaled up for user configs looser than the defaults:
# the residue cannot be certified below the quadrature tolerance itself.
_IMAG_LIMIT_EVAL = 1e-10
_IMAG_LIMIT_LIFT = 1e-9


@dataclass(frozen=True)
class AnalyticFunction:
    """A real-coefficient power series, given by an evaluator and its radius.

    The evaluator must accept complex arguments; radius may be math.inf.
    Real coefficients mean evaluator(conj(z)) == conj(evaluator(z)), which
    the property suite samples rather than this class enforcing per call.
    """

    evaluator: Callable[[complex], complex]
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise InvalidQueryError(f"radius must be positive, got {self.radius!r}")

    def __call__(self, z: complex) -> complex:
        return self.evaluator(z)

    @classmethod
    def from_coefficients(cls, coefficients: list[float]) -> "AnalyticFunction":
        """Polynomial with the given real coefficients (radius infinite)."""
        coeffs = [float(c) for c in coefficients]

        def evaluate(z: complex) -> complex:
            acc = 0j
            for c in reversed(coeffs):
                acc = acc * z + c
            return acc

        return cls(evaluate, math.inf)


EXP = AnalyticFunction(cmath.exp, math.inf)


@dataclass(frozen=True)
class HadamardProduct:
    """The pair (f, g) whose coefficient-wise product is to be evaluated."""

    f: AnalyticFunction
    g: AnalyticFunction


def _check_imag(value: complex, limit: float, what: str) -> None:
    if abs(value.imag) > limit:
        raise ImaginaryResidueError(
            f"{what}: imaginary residue {value.imag:.3e} exceeds {limit:.1e}"
        )


def hadamard_eval(
    product: HadamardProduct,
    u: float,
    v: float,
    cfg: QuadratureConfig | None = None,
) -> QuadratureResult:
    """Evaluate h(u v) = (1/2pi) int f(u e^{i t}) g(v e^{-i t}) dt.

    u and v must lie strictly inside the respective radii.  The value is
    returned as complex: its imaginary part is a consistency diagnostic
    and must stay below max(1e-10, 10*cfg.tol) for real-coefficient input.
    """
    if cfg is None:
        cfg = DEFAULT_CONFIG_1D
    if not abs(u) < product.f.radius:
        raise DomainViolationError(
            f"|u|={abs(u)!r} is not inside the first factor's radius "
            f"{product.f.radius!r}"
        )
    if not abs(v) < product.g.radius:
        raise DomainViolationError(
            f"|v|={abs(v)!r} is not inside the second factor's radius "
            f"{product.g.radius!r}"
        )
    f, g = product.f, product.g

    def integrand(theta: float) -> complex:
        point = cmath.exp(1j * theta)
        return f(u * point) * g(v * point.conjugate())

    result = trapezoid_periodic_1d(integrand, cfg)
    _check_imag(result.value, max(_IMAG_LIMIT_EVAL, 10.0 * cfg.tol), "hadamard_eval")
    return result


def alpha2_integrand(x: float, t: float) -> float:
    """exp((x+1)cos t) * cos((x-1)sin t): the real circle integrand whose
    mean over [0, 2pi) is alpha(x, 2)."""
    return math.exp((x + 1.0) * math.cos(t)) * math.cos((x - 1.0) * math.sin(t))


def alpha2_quadrature(
    x: float, cfg: QuadratureConfig | None = None
) -> QuadratureResult:
    """alpha(x, 2) as the circle mean of alpha2_integrand."""
    if cfg is None:
        cfg = DEFAULT_CONFIG_1D
    _guard_exp_peak(abs(x) + 1.0, "alpha2_quadrature")
    return converge(lambda n: kernels.alpha2_mean(float(x), n), cfg)


def bessel_identity_check(
    a: float,
    b: float,
    cfg: QuadratureConfig | None = None,
) -> tuple[float, float]:
    """Both sides of (1/2pi) int e^{a cos t + b sin t} dt = I0(sqrt(a^2+b^2)).

    Returns (quadrature lhs, series rhs); the window [0, 2pi) replaces the
    symmetric one by periodicity.
    """
    if cfg is None:
        cfg = DEFAULT_CONFIG_1D
    _guard_exp_peak(math.hypot(a, b), "bessel_identity_check")
    lhs = converge(lambda n: kernels.bessel_mean(float(a), float(b), n), cfg)
    rhs = bessel_i0(math.hypot(a, b))
    return lhs.value.real, rhs.value.real


def alpha3_integrand_complex(x: float, theta: float, t: float) -> complex:
    """exp(x e^{i theta}) exp((e^{-i theta}+1)cos t) cos((e^{-i theta}-1)sin t).

    All three factors are complex; the cosine takes a complex argument,
    cos(a+bi) = cos a cosh b - i sin a sinh b.  The torus mean of this
    integrand is alpha(x, 3).
    """
    point = cmath.exp(1j * theta)
    conj_point = point.conjugate()
    return (
        cmath.exp(x * point)
        * cmath.exp((conj_point + 1.0) * math.cos(t))
        * cmath.cos((conj_point - 1.0) * math.sin(t))
    )


def alpha3_integrand_real(x: float, theta: float, t: float) -> float:
    """Fully expanded real form of alpha3_integrand_complex's real part.

    Two products share the common factor exp(x cos th + cos th cos t + cos t);
    the hyperbolic factors come from the complex cosine expansion.
    """
    cth = math.cos(theta)
    sth = math.sin(theta)
    ct = math.cos(t)
    st = math.sin(t)
    common = math.exp(x * cth + cth * ct + ct)
    a1 = x * sth - sth * ct
    a2 = cth * st - st
    a3 = sth * st
    return common * (
        math.cos(a1) * math.cos(a2) * math.cosh(a3)
        - math.sin(a1) * math.sin(a2) * math.sinh(a3)
    )


def alpha3_quadrature_real(
    x: float, cfg: QuadratureConfig | None = None
) -> QuadratureResult:
    """alpha(x, 3) as the torus mean of the expanded real integrand."""
    if cfg is None:
        cfg = DEFAULT_CONFIG_2D
    _guard_exp_peak(abs(x) + 2.0, "alpha3_quadrature_real")
    return converge(lambda n: kernels.alpha3_real_mean(float(x), n), cfg)


def alpha3_quadrature_complex(
    x: float, cfg: QuadratureConfig | None = None
) -> QuadratureResult:
    """alpha(x, 3) as the torus mean of the complex-product integrand.

    The imaginary part of the returned value is the torus average of the
    integrand's imaginary component and is reported, not dropped.
    """
    if cfg is None:
        cfg = DEFAULT_CONFIG_2D
    _guard_exp_peak(abs(x) + 2.0, "alpha3_quadrature_complex")
    return converge(lambda n: kernels.alpha3_complex_mean(float(x), n), cfg)


def alpha_via_hadamard(
    x: float,
    s: int,
    cfg: QuadratureConfig | None = None,
) -> QuadratureResult:
    """alpha(x, s) through the coefficient-product lift, for s >= 2.

    One circle integral of exp(x e^{i theta}) * alpha(e^{-i theta}, s-1)
    with the inner factor evaluated by the complex-argument series; both
    factors are entire, so no radius precondition can fail.  The result's
    imaginary residue must stay below max(1e-9, 10*cfg.tol).
    """
    if cfg is None:
        cfg = DEFAULT_CONFIG_1D
    if not isinstance(s, int) or s < 2:
        raise InvalidQueryError(f"the lift needs integer s >= 2, got {s!r}")
    x = float(x)
    if not math.isfinite(x):
        raise InvalidQueryError(f"x must be finite, got {x!r}")
    _guard_exp_peak(abs(x), "alpha_via_hadamard")

    def node_mean(n: int) -> complex:
        value, ok = kernels.exp_alpha_mean(x, s, n, _INNER_TOL, _INNER_MAX_TERMS)
        if not ok:
            # unreachable for |z| = 1 circle points; guards kernel misuse
            raise InvalidQueryError("inner series failed to converge")
        return value

    result = converge(node_mean, cfg)
    _check_imag(result.value, max(_IMAG_LIMIT_LIFT, 10.0 * cfg.tol), "alpha_via_hadamard")
    return result
