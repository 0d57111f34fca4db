"""Show the windowed kernels acting like a delta sequence on smooth bumps.

Pairing the order-N kernel with a compactly supported test function
drives the integral toward 2*pi times the value at the origin.  Three
situations are shown: a plateau bump that is exactly 1 near zero, a
narrow bump centered at zero, and a bump shifted away from the origin
whose pairing decays to nothing.
"""

import math

from zetacomb import bump_plateau, deltaN_action, gaussian_bump

TWO_PI = 2.0 * math.pi
ORDERS = (5, 20, 80, 320)

print("Plateau bump, flat and equal to 1 on [-pi, pi]:")
phi = bump_plateau(math.pi, 1.25 * math.pi)
print(f"  target 2*pi*phi(0) = {TWO_PI:.12f}")
for n in ORDERS:
    v = deltaN_action(phi, n, 1e-10)
    print(f"  N={n:>4}:  action = {v:.12f}   error = {abs(v - TWO_PI):.3e}")

print()
print("Narrow bump at the origin, phi(0) = 1/e:")
phi = gaussian_bump(0.0, 1.0)
target = TWO_PI * phi(0.0)
print(f"  target 2*pi*phi(0) = {target:.12f}")
for n in ORDERS:
    v = deltaN_action(phi, n, 1e-10)
    print(f"  N={n:>4}:  action = {v:.12f}   error = {abs(v - target):.3e}")

print()
print("Bump centered at 2.5, origin outside the support:")
phi = gaussian_bump(2.5, 1.0)
for n in ORDERS:
    v = deltaN_action(phi, n, 1e-10)
    print(f"  N={n:>4}:  action = {v:+.3e}")
print("  the target here is 0; the oscillation averages itself away")
