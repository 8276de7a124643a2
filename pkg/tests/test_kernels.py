"""Backend parity: the compiled kernels must match the pure-Python twins."""

from __future__ import annotations

import cmath
import math

import pytest

from alphafn import _kernels_py

try:
    from alphafn import _kernels_cy
except ImportError:
    _kernels_cy = None

requires_cython = pytest.mark.skipif(
    _kernels_cy is None, reason="compiled kernels not built"
)

TWO_PI = 2.0 * math.pi

SERIES_ARGS = [
    (0j, 3), (1 + 0j, 1), (1 + 0j, 3), (-2 + 0j, 2),
    (0.5 + 0.25j, 2), (-1.5 + 2j, 4), (3 + 0j, 1),
]


def close(a: complex, b: complex, tol: float = 1e-13) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


class TestPythonKernelsAgainstCompositions:
    """The fused kernels must reproduce per-node compositions exactly."""

    def test_alpha2_mean(self):
        x, n = 0.75, 32
        loop = sum(
            math.exp((x + 1) * math.cos((TWO_PI * j) / n))
            * math.cos((x - 1) * math.sin((TWO_PI * j) / n))
            for j in range(n)
        ) / n
        assert close(_kernels_py.alpha2_mean(x, n), loop, 1e-15)

    def test_bessel_mean(self):
        a, b, n = 3.0, 4.0, 64
        loop = sum(
            math.exp(a * math.cos((TWO_PI * j) / n) + b * math.sin((TWO_PI * j) / n))
            for j in range(n)
        ) / n
        assert close(_kernels_py.bessel_mean(a, b, n), loop, 1e-15)

    def test_exp_alpha_mean(self):
        x, s, n = 1.0, 3, 16
        total = 0j
        for j in range(n):
            eith = cmath.exp(1j * ((TWO_PI * j) / n))
            inner = _kernels_py.alpha_sum(eith.conjugate(), s - 1, 1e-15, 500)[0]
            total += cmath.exp(x * eith) * inner
        mean, ok = _kernels_py.exp_alpha_mean(x, s, n, 1e-15, 500)
        assert ok
        assert close(mean, total / n, 1e-14)

    def test_alpha_sum_flags_budget_exhaustion(self):
        value, terms, tail, ok = _kernels_py.alpha_sum(300 + 0j, 1, 1e-13, 100)
        assert not ok
        assert terms == 100
        assert math.isinf(tail)


@requires_cython
class TestBackendParity:
    def test_alpha_sum(self):
        for x, s in SERIES_ARGS:
            py = _kernels_py.alpha_sum(x, s, 1e-13, 500)
            cy = _kernels_cy.alpha_sum(x, s, 1e-13, 500)
            assert close(py[0], cy[0], 1e-14), (x, s)
            assert py[1] == cy[1]
            assert math.isclose(py[2], cy[2], rel_tol=1e-12, abs_tol=1e-300)
            assert py[3] == cy[3]

    def test_alpha_deriv_sum(self):
        for x, s in SERIES_ARGS:
            for k in (0, 1, 2, 4):
                py = _kernels_py.alpha_deriv_sum(x, s, k, 1e-13, 500)
                cy = _kernels_cy.alpha_deriv_sum(x, s, k, 1e-13, 500)
                assert close(py[0], cy[0], 1e-14), (x, s, k)
                assert py[1] == cy[1]

    def test_means(self):
        for n in (16, 32):
            for x in (-1.0, 0.5, 2.0):
                assert close(
                    _kernels_py.alpha2_mean(x, n), _kernels_cy.alpha2_mean(x, n), 1e-14
                )
                assert close(
                    _kernels_py.alpha3_real_mean(x, n),
                    _kernels_cy.alpha3_real_mean(x, n),
                    1e-14,
                )
                assert close(
                    _kernels_py.alpha3_complex_mean(x, n),
                    _kernels_cy.alpha3_complex_mean(x, n),
                    1e-14,
                )
        assert close(
            _kernels_py.bessel_mean(3.0, 4.0, 64),
            _kernels_cy.bessel_mean(3.0, 4.0, 64),
            1e-14,
        )

    def test_exp_alpha_mean(self):
        for s in (2, 3, 4):
            py, ok_py = _kernels_py.exp_alpha_mean(1.0, s, 32, 1e-15, 500)
            cy, ok_cy = _kernels_cy.exp_alpha_mean(1.0, s, 32, 1e-15, 500)
            assert ok_py and ok_cy
            assert close(py, cy, 1e-14)
