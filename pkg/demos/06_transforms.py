"""Idempotent calculus: integrals, convolution, Legendre, Hopf-Lax.

Run:  python3 demos/06_transforms.py
"""

import numpy as np

from tropikit import (
    SampledFunction,
    convolution,
    hopf_lax_evolve,
    idempotent_integral,
    legendre,
    pointwise_add,
    scalar_mul,
)

# In max-plus analysis "integral" means supremum: measure theory becomes
# optimization.  Functions live on uniform grids (dyadic step, so grid
# points like 0, 1, 2 are hit exactly).
step = 1.0 / 128
xs = (np.arange(1281) - 640) * step
phi = SampledFunction(xs[0], step, -((xs - 1.0) ** 2), "maxplus")
print("integral (sup) of -(x-1)^2:", idempotent_integral(phi))

# The integral is linear over (max, +): sup of a max is the max of sups.
psi = SampledFunction(xs[0], step, -np.abs(xs), "maxplus")
lhs = idempotent_integral(pointwise_add(scalar_mul(2.0, phi), scalar_mul(-1.0, psi)))
rhs = max(2.0 + idempotent_integral(phi), -1.0 + idempotent_integral(psi))
print("linearity of the integral:", lhs == rhs)

# Convolution becomes sup-convolution: (phi * psi)(z) = sup_x phi(x) + psi(z-x).
a = SampledFunction(0.0, 1.0, np.array([0.0, 2.0]), "maxplus")
b = SampledFunction(0.0, 1.0, np.array([1.0, 0.0, 5.0]), "maxplus")
print("sup-convolution values:", [float(v) for v in convolution(a, b).values])

# The Legendre transform sup_x (xi*x + phi(x)) plays the role of the
# Fourier transform: it turns sup-convolution into pointwise +, and maps
# the concave parabola -x^2/2 to the convex one xi^2/2.
par = SampledFunction(xs[0], step, -(xs * xs) / 2.0, "maxplus")
out = legendre(par, -3.0, 0.5, 13)
print("\nxi      transform    xi^2/2")
for xi, v in zip(out.grid(), out.values):
    print(f"{xi:+.1f}   {v + 0.0:9.5f}   {xi * xi / 2.0:9.5f}")

# The same machinery solves a Hamilton-Jacobi equation: the Hopf-Lax
# formula S(x,t) = min_y (S0(y) + (x-y)^2 / 2t) is min-plus linear, so
# superpositions of initial data evolve term by term.
s0 = SampledFunction(xs[0], step, (xs * xs) / 2.0, "minplus")
s1 = hopf_lax_evolve(s0, 1.0)
idx = np.searchsorted(xs, [0.0, 1.0, 2.0])
print("\nS(x, 1) for quadratic data (analytic answer x^2/4):")
for i in idx:
    print(f"  x = {xs[i]:+.2f}   S = {s1.values[i]:.5f}")
