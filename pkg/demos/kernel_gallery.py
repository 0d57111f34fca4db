"""Sample the windowed Dirichlet kernel and check its two invariants.

The order-N kernel peaks at 2N+1 at the origin, oscillates with
near-unit period 2*pi/(N + 1/2), and integrates to 2*pi over the
window regardless of N.  Both the explicit cosine sum and the
sin ratio form are sampled; they agree to rounding error.
"""

import math

from zetacomb import (
    dirichlet_compact,
    dirichlet_sum,
    kernel_normalization,
    kernel_samples,
)

N = 8

print(f"Order-{N} kernel on a coarse symmetric grid:")
table = kernel_samples(N, 21, -math.pi, math.pi)
print(f"  columns: {table.column_names}")
for x, values in table.rows:
    bar = "#" * int(round(max(0.0, values[0])))
    print(f"  {x:+9.5f}  {values[0]:+10.5f}  {bar}")

print()
print("Peak values are exactly 2N+1:")
for n in (1, 5, 25, 125):
    print(f"  N={n:>4}:  kernel(0) = {dirichlet_sum(n, 0.0):.1f}   (2N+1 = {2 * n + 1})")

print()
print("Sum form vs sin-ratio form at a few points:")
for x in (0.3, 1.7, 3.0):
    s = dirichlet_sum(N, x)
    c = dirichlet_compact(N, x)
    print(f"  x={x:.1f}:  sum={s:+.15f}  ratio={c:+.15f}  diff={abs(s - c):.2e}")

print()
print("Window integral stays at 2*pi while the peak grows:")
for n in (0, 4, 16, 64):
    total = kernel_normalization(n, 1e-10)
    print(f"  N={n:>3}:  integral = {total:.12f}   error vs 2*pi = {abs(total - 2 * math.pi):.2e}")
