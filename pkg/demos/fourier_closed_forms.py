"""Watch Fourier partial sums settle onto their piecewise closed forms.

Integrating the kernel expansion termwise once gives a sawtooth-like
odd function; twice gives a continuous even parabola-by-parts.  Both
limits have exact floor/ceiling expressions.  The once-integrated sum
overshoots stubbornly near the jumps; the twice-integrated sum
converges uniformly with error below 2/N.
"""

import math

from zetacomb import (
    delta1_closed,
    delta2_closed,
    fourier_partial_delta1,
    fourier_partial_delta2,
)

print("Once-integrated series at x = 2.0 (closed form is constant pi there):")
for n in (10, 100, 1000, 10000):
    s = fourier_partial_delta1(n, 2.0)
    print(f"  N={n:>5}:  partial = {s:.10f}   error = {abs(s - delta1_closed(2.0)):.3e}")

print()
print("Same series just left of the jump at 2*pi (overshoot persists):")
x = 2.0 * math.pi - 0.05
print(f"  closed form value: {delta1_closed(x):.10f}")
for n in (10, 100, 1000):
    s = fourier_partial_delta1(n, x)
    print(f"  N={n:>5}:  partial = {s:.10f}   excess = {s - delta1_closed(x):+.4f}")

print()
print("Twice-integrated series, worst error over [-2*pi, 2*pi]:")
xs = [-2.0 * math.pi + k * (4.0 * math.pi / 200) for k in range(201)]
for n in (10, 100, 1000):
    worst = max(abs(fourier_partial_delta2(n, x) - delta2_closed(x)) for x in xs)
    print(f"  N={n:>5}:  sup error = {worst:.6e}   bound 2/N = {2.0 / n:.6e}")

print()
print("Closed-form spot checks:")
for x in (0.0, 1.0, math.pi, 2.0 * math.pi):
    print(f"  x={x:8.5f}:  order1 = {delta1_closed(x):+10.6f}   order2 = {delta2_closed(x):+10.6f}")
