"""The truncated kernel delta_N on (-pi, pi): sum form, compact form,
sampling, and normalization.

delta_N is the symmetric exponential sum cut off at order N and windowed
to |x| < pi, so it evaluates as 1 + 2*sum_{n=1}^{N} cos(n*x) inside the
window and 0 at and beyond |x| = pi.  Summing the geometric series gives
the equivalent compact form sin((N+1/2)*x) / sin(x/2); the two are
computed by entirely separate code paths so that agreement between them
is evidence, not tautology.

The sum form is the accuracy reference: cosine-only evaluation on |x|
makes it even to the last bit, and Kahan compensation keeps the peak
value 2N+1 exact even for N in the tens of thousands.  The compact form
is the O(1) workhorse but loses digits to sin(x/2) cancellation near 0,
where it falls back to the sum form below a fixed threshold.
"""

import math
from dataclasses import dataclass

from .quad import integrate_adaptive

__all__ = [
    "EPS_SING",
    "SampleTable",
    "dirichlet_sum",
    "dirichlet_compact",
    "kernel_samples",
    "kernel_normalization",
]

# Below this, relative error of the compact form grows like (N*x)^2 * eps
# while the sum form stays exact; above it, both carry full precision.
EPS_SING = 1e-6


@dataclass(frozen=True)
class SampleTable:
    """Columns of values over a strictly increasing x grid."""

    column_names: tuple[str, ...]
    rows: tuple[tuple[float, tuple[float, ...]], ...]

    def __post_init__(self):
        width = len(self.column_names) - 1
        prev = None
        for x, values in self.rows:
            if len(values) != width:
                raise ValueError(
                    f"row at x={x} has {len(values)} values, expected {width}"
                )
            if prev is not None and not x > prev:
                raise ValueError(f"x grid not strictly increasing at {x}")
            prev = x


def _validate_order(N: int) -> None:
    if not isinstance(N, int) or N < 0:
        raise ValueError(f"kernel order must be a non-negative integer, got {N!r}")


def dirichlet_sum(N: int, x: float) -> float:
    """1 + 2*sum_{n=1}^{N} cos(n*x) for |x| < pi, else 0 (window boundary).

    Kahan-compensated, evaluated on |x| so the result is even bit-for-bit.
    """
    _validate_order(N)
    r = abs(x)
    if r >= math.pi:
        return 0.0
    total = 1.0
    comp = 0.0
    for n in range(1, N + 1):
        term = 2.0 * math.cos(n * r) - comp
        t = total + term
        comp = (t - total) - term
        total = t
    return total


def dirichlet_compact(N: int, x: float) -> float:
    """sin((N+1/2)*x) / sin(x/2), valid on |x| < pi.

    The singularity at x=0 is removable; below EPS_SING the exact sum form
    is returned instead of fighting the 0/0 cancellation.
    """
    _validate_order(N)
    r = abs(x)
    if r >= math.pi:
        raise ValueError(f"compact form is defined on |x| < pi, got x={x}")
    if r < EPS_SING:
        return dirichlet_sum(N, r)
    return math.sin((N + 0.5) * r) / math.sin(0.5 * r)


def _windowed_compact(N: int, x: float) -> float:
    # The kernel as a plain function on all of R: 0 at and beyond |x|=pi.
    r = abs(x)
    if r >= math.pi:
        return 0.0
    if r < EPS_SING:
        return dirichlet_sum(N, r)
    return math.sin((N + 0.5) * r) / math.sin(0.5 * r)


def kernel_samples(N: int, count: int, xmin: float = -math.pi, xmax: float = math.pi) -> SampleTable:
    """Uniform grid table with columns x, sum-form value, compact-form value.

    The range must sit inside [-pi, pi].  At |x| >= pi both columns carry
    the windowed value 0.  A symmetric range (xmax == -xmin) produces a
    grid that is antisymmetric to the last bit, so table symmetry can be
    asserted exactly rather than approximately.
    """
    _validate_order(N)
    if count < 2:
        raise ValueError(f"need at least 2 sample points, got {count}")
    if not xmin < xmax:
        raise ValueError(f"need xmin < xmax, got [{xmin}, {xmax}]")
    if xmin < -math.pi or xmax > math.pi:
        raise ValueError(f"range [{xmin}, {xmax}] must lie inside [-pi, pi]")

    step = (xmax - xmin) / (count - 1)
    xs = [xmin + i * step for i in range(count - 1)] + [xmax]
    if xmax == -xmin:
        xs = [0.5 * (a - b) for a, b in zip(xs, reversed(xs))]

    rows = []
    for x in xs:
        s = dirichlet_sum(N, x)
        c = _windowed_compact(N, x)
        rows.append((x, (s, c)))
    return SampleTable(
        column_names=("x", "sum_form", "compact_form"),
        rows=tuple(rows),
    )


def kernel_normalization(N: int, tol: float, max_panels: int | None = None) -> float:
    """Integral of delta_N over [-pi, pi]; equals 2*pi for every N.

    Every Fourier mode but n=0 has zero mean over the full window, so the
    constant term alone survives.  Integrates the O(1) compact form with
    the oscillation hint N + 1/2.  Quadrature failure propagates.
    """
    _validate_order(N)
    kwargs = {} if max_panels is None else {"max_panels": max_panels}
    result = integrate_adaptive(
        lambda x: _windowed_compact(N, x),
        -math.pi,
        math.pi,
        tol,
        osc_freq=N + 0.5,
        **kwargs,
    )
    return result.value
