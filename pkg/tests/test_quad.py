import math
import random

import pytest

from zetacomb.kernels import dirichlet_compact
from zetacomb.quad import (
    QuadResult,
    QuadratureError,
    integrate_adaptive,
    sinc_truncated,
)
from zetacomb.testfn import gaussian_bump

TWO_PI = 2 * math.pi

# frozen 50-digit oracle values of 2*Si((N+1/2)*pi)
SINC_N0 = 2.7415243363089770
SINC_N1 = 3.2167455079080215

# frozen 50-digit quadrature of the unit mollifier integral
MOLLIFIER_INTEGRAL = 0.4439938161680794


class TestIntegrateAdaptive:
    def test_constant(self):
        r = integrate_adaptive(lambda x: 1.0, -math.pi, math.pi, 1e-12)
        assert abs(r.value - TWO_PI) <= 1e-12
        assert r.error_estimate <= 1e-12
        assert r.panels_used == 1

    def test_quadratic_is_exact(self):
        r = integrate_adaptive(lambda x: x * x, 0.0, TWO_PI, 1e-12)
        assert abs(r.value - TWO_PI**3 / 3) <= 1e-12

    def test_oscillatory_kernel_normalization(self):
        r = integrate_adaptive(
            lambda x: dirichlet_compact(50, x) if abs(x) < math.pi else 0.0,
            -math.pi,
            math.pi,
            1e-10,
            osc_freq=50.5,
        )
        assert abs(r.value - TWO_PI) <= 1e-9
        assert r.error_estimate <= 1e-10

    def test_polynomial_exactness_through_degree_13(self):
        for d in range(14):
            exact = (2.0 ** (d + 1) - (-1.0) ** (d + 1)) / (d + 1)
            r = integrate_adaptive(lambda x, d=d: x**d, -1.0, 2.0, 1e-6)
            assert r.panels_used == 1
            assert abs(r.value - exact) <= 1e-14 * abs(exact)

    def test_tolerance_honesty_on_random_smooth_integrands(self):
        rng = random.Random(2024)
        tol = 1e-10
        for i in range(20):
            a = rng.uniform(-3.0, 0.0)
            b = a + rng.uniform(0.5, 4.0)
            kind = i % 4
            if kind == 0:
                c = [rng.uniform(-2, 2) for _ in range(5)]
                f = lambda x, c=c: sum(cj * x**j for j, cj in enumerate(c))
                F = lambda x, c=c: sum(cj * x ** (j + 1) / (j + 1) for j, cj in enumerate(c))
            elif kind == 1:
                A, w = rng.uniform(0.5, 2), rng.uniform(1, 6)
                f = lambda x, A=A, w=w: A * math.sin(w * x)
                F = lambda x, A=A, w=w: -A / w * math.cos(w * x)
            elif kind == 2:
                A, c = rng.uniform(0.5, 2), rng.uniform(0.3, 1.2)
                f = lambda x, A=A, c=c: A * math.exp(c * x)
                F = lambda x, A=A, c=c: A / c * math.exp(c * x)
            else:
                s = 0.5 - a  # keeps x + s >= 0.5 on [a, b]
                f = lambda x, s=s: 1.0 / (x + s)
                F = lambda x, s=s: math.log(x + s)
            r = integrate_adaptive(f, a, b, tol)
            assert abs(r.value - (F(b) - F(a))) <= 10 * tol
            assert r.error_estimate <= tol

    def test_mollifier_integral(self):
        g = gaussian_bump(0.0, 1.0)
        r = integrate_adaptive(g.evaluator, -1.0, 1.0, 1e-12)
        assert abs(r.value - MOLLIFIER_INTEGRAL) <= 1e-12

    def test_oscillation_hint_seeds_panels(self):
        r = integrate_adaptive(
            lambda x: math.sin(40.0 * x), 0.0, TWO_PI, 1e-10, osc_freq=40.0
        )
        assert abs(r.value) <= 1e-10  # whole periods integrate to zero
        assert r.panels_used >= 40

    def test_determinism_is_bitwise(self):
        def f(x):
            return dirichlet_compact(50, x) if abs(x) < math.pi else 0.0

        r1 = integrate_adaptive(f, -math.pi, math.pi, 1e-10, osc_freq=50.5)
        r2 = integrate_adaptive(f, -math.pi, math.pi, 1e-10, osc_freq=50.5)
        assert r1.value == r2.value
        assert r1.error_estimate == r2.error_estimate
        assert r1.panels_used == r2.panels_used

    def test_budget_exhaustion_reports_best_value(self):
        with pytest.raises(QuadratureError) as info:
            integrate_adaptive(
                lambda x: math.sin(50.0 * x), 0.0, 10.0, 1e-13, max_panels=9
            )
        err = info.value
        assert math.isfinite(err.value)
        assert err.error_estimate > 1e-13
        assert 1 <= err.panels_used <= 9

    def test_preconditions(self):
        f = lambda x: x
        with pytest.raises(ValueError):
            integrate_adaptive(f, 1.0, 1.0, 1e-9)
        with pytest.raises(ValueError):
            integrate_adaptive(f, 2.0, 1.0, 1e-9)
        with pytest.raises(ValueError):
            integrate_adaptive(f, 0.0, 1.0, 0.0)
        with pytest.raises(ValueError):
            integrate_adaptive(f, 0.0, 1.0, 1e-9, osc_freq=-1.0)


class TestQuadResult:
    def test_field_validation(self):
        with pytest.raises(ValueError):
            QuadResult(1.0, -1e-3, 5)
        with pytest.raises(ValueError):
            QuadResult(1.0, 0.0, 0)
        r = QuadResult(1.0, 0.0, 1)
        assert r.error_estimate == 0.0


class TestSincTruncated:
    def test_frozen_oracle_values(self):
        assert abs(sinc_truncated(0, 1e-12).value - SINC_N0) <= 1e-12
        assert abs(sinc_truncated(1, 1e-12).value - SINC_N1) <= 1e-12

    def test_alternation_around_pi(self):
        values = [sinc_truncated(N, 1e-11).value for N in range(11)]
        for N, v in enumerate(values):
            # odd truncations land above pi, even ones below
            assert (v - math.pi > 0) == (N % 2 == 1)

    def test_envelope_decreases(self):
        errors = [abs(sinc_truncated(N, 1e-11).value - math.pi) for N in range(1, 11)]
        assert all(a > b for a, b in zip(errors, errors[1:]))

    def test_alternating_tail_bound(self):
        for N in (1, 2, 5, 10, 50):
            v = sinc_truncated(N, 1e-11).value
            assert abs(v - math.pi) <= 2.0 / ((N + 0.5) * math.pi)

    def test_determinism_is_bitwise(self):
        r1 = sinc_truncated(7, 1e-10)
        r2 = sinc_truncated(7, 1e-10)
        assert r1.value == r2.value
        assert r1.error_estimate == r2.error_estimate

    def test_validation(self):
        with pytest.raises(ValueError):
            sinc_truncated(-1, 1e-9)
        with pytest.raises(ValueError):
            sinc_truncated(1.5, 1e-9)
        with pytest.raises(ValueError):
            sinc_truncated(3, -1e-9)
