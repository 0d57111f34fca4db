"""Distributional actions and Fourier partial sums.

The comb functional acts on a test function phi two ways that must agree:
the analytic route sums mode integrals c_0 + 2*sum Re(c_n) truncated at
order N, and the lattice route evaluates 2*pi*sum phi(2*pi*n) over the
finitely many lattice points inside the support.  Their agreement, and
the convergence of the windowed-kernel action to 2*pi*phi(0), are the two
numerical limit statements this module carries.

The first and second antiderivative partial sums are compared against
floor/ceiling closed forms.  The order-1 series converges only pointwise
(with persistent overshoot near the lattice), so comparisons there stay
clear of lattice points; the order-2 series converges absolutely with
tail below 2/N, so it is compared everywhere.

Long sums are evaluated in fixed-size chunks with exact (fsum) reduction
in a fixed order, so results are deterministic and effectively free of
accumulation error; odd sums are computed on |x| and sign-flipped so
antisymmetry holds bit-for-bit.
"""

import math
from dataclasses import dataclass

import numpy as np

from .kernels import _windowed_compact
from .quad import integrate_adaptive
from .testfn import TestFunction

__all__ = [
    "ConvergenceRow",
    "FOURIER_N_CAP",
    "delta0_partial_action",
    "delta0_comb_action",
    "deltaN_action",
    "fourier_partial_delta1",
    "fourier_partial_delta2",
    "delta1_closed",
    "delta2_closed",
]

_TWO_PI = 2.0 * math.pi
_CHUNK = 1 << 19

# Runtime guard for the partial sums; far beyond every stated comparison.
FOURIER_N_CAP = 10_000_000


@dataclass(frozen=True)
class ConvergenceRow:
    """One (N, value) pair against its limit reference."""

    N: int
    value: float
    reference: float
    abs_error: float

    def __post_init__(self):
        expected = abs(self.value - self.reference)
        if self.abs_error != expected:
            raise ValueError(
                f"abs_error {self.abs_error!r} is not |value - reference| = {expected!r}"
            )

    @classmethod
    def make(cls, N: int, value: float, reference: float) -> "ConvergenceRow":
        return cls(N=N, value=value, reference=reference, abs_error=abs(value - reference))


def _cosine_mode(phi: TestFunction, n: int, tol: float) -> float:
    """Re(c_n) = integral of cos(n*x)*phi(x) over the support of phi."""
    lo, hi = phi.support
    if n == 0:
        return integrate_adaptive(phi.evaluator, lo, hi, tol).value
    f = phi.evaluator
    return integrate_adaptive(
        lambda x: math.cos(n * x) * f(x), lo, hi, tol, osc_freq=float(n)
    ).value


def delta0_partial_action(phi: TestFunction, N: int, tol: float) -> float:
    """Symmetric partial action: c_0 + 2*sum_{n=1}^{N} Re(c_n).

    Each mode integral runs at tol/(2N+1) so the stacked quadrature error
    stays below tol; mode contributions are reduced with an exact sum.
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    if not tol > 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    mode_tol = tol / (2 * N + 1)
    parts = [_cosine_mode(phi, 0, mode_tol)]
    for n in range(1, N + 1):
        parts.append(2.0 * _cosine_mode(phi, n, mode_tol))
    return math.fsum(parts)


def delta0_comb_action(phi: TestFunction) -> float:
    """Lattice route: 2*pi * sum of phi(2*pi*n) over 2*pi*n in support(phi)."""
    lo, hi = phi.support
    n_lo = math.ceil(lo / _TWO_PI)
    n_hi = math.floor(hi / _TWO_PI)
    if n_lo > n_hi:
        return 0.0
    return _TWO_PI * math.fsum(phi(_TWO_PI * n) for n in range(n_lo, n_hi + 1))


def deltaN_action(phi: TestFunction, N: int, tol: float) -> float:
    """Action of the order-N windowed kernel: integral of delta_N * phi.

    Integrates over [-pi, pi] clipped to the support, with the oscillation
    hint N + 1/2; converges to 2*pi*phi(0) as N grows.
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    if not tol > 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    lo = max(-math.pi, phi.support[0])
    hi = min(math.pi, phi.support[1])
    if not lo < hi:
        return 0.0
    f = phi.evaluator
    return integrate_adaptive(
        lambda x: _windowed_compact(N, x) * f(x), lo, hi, tol, osc_freq=N + 0.5
    ).value


def _validate_fourier_n(N: int) -> None:
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    if N > FOURIER_N_CAP:
        raise ValueError(f"N={N} exceeds the cap {FOURIER_N_CAP}")


def _chunked_fsum(N: int, chunk_values) -> float:
    """Exact sum of chunk_values(n0, n1) over n = 1..N, fixed chunk order."""
    parts = []
    n0 = 1
    while n0 <= N:
        n1 = min(N, n0 + _CHUNK - 1)
        parts.append(math.fsum(chunk_values(n0, n1).tolist()))
        n0 = n1 + 1
    return math.fsum(parts)


def fourier_partial_delta1(N: int, x: float) -> float:
    """x + 2*sum_{n=1}^{N} sin(n*x)/n.

    Odd in x by construction: the positive-axis value is computed and the
    sign flipped, so f(-x) == -f(x) to the last bit.
    """
    _validate_fourier_n(N)
    if x == 0.0:
        return 0.0
    r = abs(x)

    def chunk(n0: int, n1: int):
        n = np.arange(n0, n1 + 1, dtype=np.float64)
        return 2.0 * np.sin(n * r) / n

    core = math.fsum((r, _chunked_fsum(N, chunk)))
    return core if x > 0 else -core


def fourier_partial_delta2(N: int, x: float) -> float:
    """x**2/2 - 2*sum_{n=1}^{N} cos(n*x)/n**2, even in x bit-for-bit."""
    _validate_fourier_n(N)
    r = abs(x)

    def chunk(n0: int, n1: int):
        n = np.arange(n0, n1 + 1, dtype=np.float64)
        return np.cos(n * r) / (n * n)

    return math.fsum((0.5 * r * r, -2.0 * _chunked_fsum(N, chunk)))


def delta1_closed(x: float) -> float:
    """pi * (floor(x/2pi) + ceil(x/2pi)).

    Equals pi*sign(x) off the lattice within (-2pi, 2pi); at a lattice
    point 2*pi*n the floor and ceiling agree and the formula itself
    yields 2*pi*n, no special-casing.
    """
    u = x / _TWO_PI
    return math.pi * (math.floor(u) + math.ceil(u))


def delta2_closed(x: float) -> float:
    """pi*x*(floor(u)+ceil(u)) - 2*pi**2*ceil(u)*floor(u) - pi**2/3, u = x/2pi.

    Continuous everywhere, piecewise affine between lattice points.
    """
    u = x / _TWO_PI
    fl = math.floor(u)
    ce = math.ceil(u)
    return math.pi * x * (fl + ce) - 2.0 * math.pi**2 * (ce * fl) - math.pi**2 / 3.0
