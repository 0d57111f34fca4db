import math
import random

import pytest

from zetacomb.kernels import (
    EPS_SING,
    SampleTable,
    dirichlet_compact,
    dirichlet_sum,
    kernel_normalization,
    kernel_samples,
)

TWO_PI = 2 * math.pi


def simpson_normalization(N, points=20001):
    """Fixed-step Simpson, independent of the adaptive code.

    Samples the raw cosine sum rather than the windowed kernel: the window
    only changes the two endpoint values, which are measure zero for the
    integral but would poison Simpson's endpoint weights.
    """
    h = TWO_PI / (points - 1)
    total = 0.0
    for i in range(points):
        x = -math.pi + i * h
        w = 1 if i in (0, points - 1) else (4 if i % 2 else 2)
        total += w * (1.0 + 2.0 * math.fsum(math.cos(n * x) for n in range(1, N + 1)))
    return total * h / 3


class TestDirichletSum:
    def test_peak_is_exact(self):
        for N in (0, 1, 5, 50, 1000, 10**4):
            assert dirichlet_sum(N, 0.0) == 2 * N + 1

    def test_simple_values(self):
        assert abs(dirichlet_sum(1, math.pi / 2) - 1.0) < 1e-15
        for x in (-3.0, -1.0, 0.5, 3.1):
            assert dirichlet_sum(0, x) == 1.0

    def test_window_boundary_is_zero(self):
        for x in (math.pi, -math.pi, 4.0, -100.0):
            assert dirichlet_sum(50, x) == 0.0

    def test_symmetry_to_the_last_bit(self):
        rng = random.Random(7)
        xs = [rng.uniform(0, math.pi) for _ in range(40)]
        for N in (5, 50, 10**4):
            for x in xs[: 40 if N < 10**4 else 5]:
                assert dirichlet_sum(N, x) == dirichlet_sum(N, -x)

    def test_order_validation(self):
        for bad in (-1, 1.5, "3"):
            with pytest.raises(ValueError):
                dirichlet_sum(bad, 0.0)


class TestDirichletCompact:
    def test_matches_closed_value(self):
        # sin(3pi/4)/sin(pi/4) = 1
        assert abs(dirichlet_compact(1, math.pi / 2) - 1.0) < 1e-12

    def test_fallback_near_zero_is_sum_form(self):
        for x in (0.0, 1e-9, -1e-7, EPS_SING / 2):
            assert dirichlet_compact(50, x) == dirichlet_sum(50, x)
        assert dirichlet_compact(50, 0.0) == 101.0

    def test_agreement_with_sum_form(self):
        assert abs(dirichlet_compact(50, 0.1) - dirichlet_sum(50, 0.1)) < 1e-11

    def test_form_equivalence_on_dense_grid(self):
        N = 50
        budget = 1e-10 * (2 * N + 1)
        count = 10**4
        for i in range(count):
            x = -math.pi + (i + 0.5) * TWO_PI / count
            if abs(x) < EPS_SING:
                continue
            assert abs(dirichlet_sum(N, x) - dirichlet_compact(N, x)) <= budget

    def test_domain_error_outside_window(self):
        for x in (math.pi, -math.pi, 3.5):
            with pytest.raises(ValueError):
                dirichlet_compact(5, x)


class TestKernelSamples:
    def test_fig_scale_table(self):
        table = kernel_samples(50, 2001)
        assert table.column_names == ("x", "sum_form", "compact_form")
        assert len(table.rows) == 2001
        values = [row[1][0] for row in table.rows]
        peak = max(values)
        peak_x = table.rows[values.index(peak)][0]
        assert peak == 101.0
        assert peak_x == 0.0

    def test_symmetric_range_is_bitwise_symmetric(self):
        table = kernel_samples(13, 501)
        rows = table.rows
        for (x1, v1), (x2, v2) in zip(rows, reversed(rows)):
            assert x1 == -x2
            assert v1 == v2

    def test_columns_agree(self):
        table = kernel_samples(50, 2001)
        budget = 1e-10 * 101
        for x, (s, c) in table.rows:
            assert abs(s - c) <= budget

    def test_order_zero_is_flat(self):
        table = kernel_samples(0, 101, -3.0, 3.0)
        assert all(values == (1.0, 1.0) for _, values in table.rows)

    def test_grid_endpoints_are_exact(self):
        table = kernel_samples(3, 11, -1.0, 0.5)
        assert table.rows[0][0] == -1.0
        assert table.rows[-1][0] == 0.5

    def test_invalid_requests(self):
        with pytest.raises(ValueError):
            kernel_samples(5, 1)
        with pytest.raises(ValueError):
            kernel_samples(5, 10, 1.0, 1.0)
        with pytest.raises(ValueError):
            kernel_samples(5, 10, -4.0, 0.0)
        with pytest.raises(ValueError):
            kernel_samples(5, 10, 0.0, 3.2)


class TestSampleTable:
    def test_rejects_non_increasing_grid(self):
        with pytest.raises(ValueError):
            SampleTable(("x", "v"), ((0.0, (1.0,)), (0.0, (1.0,))))

    def test_rejects_ragged_rows(self):
        with pytest.raises(ValueError):
            SampleTable(("x", "a", "b"), ((0.0, (1.0,)),))


class TestNormalization:
    def test_constant_case(self):
        assert abs(kernel_normalization(0, 1e-12) - TWO_PI) < 1e-12

    def test_normalization_across_orders(self):
        for N in (0, 1, 5, 10, 50, 100):
            assert abs(kernel_normalization(N, 1e-10) - TWO_PI) <= 1e-9

    def test_against_simpson_oracle(self):
        adaptive = kernel_normalization(7, 1e-10)
        assert abs(adaptive - simpson_normalization(7)) < 1e-8

    def test_invalid_tolerance(self):
        with pytest.raises(ValueError):
            kernel_normalization(5, 0.0)
