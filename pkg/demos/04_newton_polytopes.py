"""Newton sets: what a polynomial looks like after the log-log limit.

Run:  python3 demos/04_newton_polytopes.py
"""

from tropikit import (
    GenPolynomial,
    dequantize_limit,
    eval_dequantized,
    newton_set,
    poly_add,
    poly_mul,
    polytope_add,
    polytope_mul,
)

# f(z1, z2) = 1 + 3 z1^2 z2 + 5 z1 z2^2, a positive Laurent polynomial.
f = GenPolynomial(2, ((1.0, (0, 0)), (3.0, (2, 1)), (5.0, (1, 2))))

# Substituting z_i = exp(x_i / h) and reading off h * log f gives a smooth
# function that converges, as h -> 0, to the piecewise-linear support
# function max_i <d_i, x> of the exponents.
x = (1.0, -0.5)
print("f-hat_h(x) for shrinking h, against the h = 0 limit:")
for h in (1.0, 0.1, 0.01, 0.001):
    print(f"  h = {h:<6g} value = {eval_dequantized(f, x, h):.6f}")
print(f"  limit        value = {dequantize_limit(f, x):.6f}")

# The limit only remembers the convex hull of the exponent vectors: the
# Newton set, here a triangle, in exact rational arithmetic.
P = newton_set(f)
print("\nNewton set vertices:", [tuple(map(str, v)) for v in P.vertices])

# Polynomial product/sum become Minkowski sum/convex hull of unions: the
# Newton map is a semiring homomorphism onto convex bodies.
g = GenPolynomial(2, ((2.0, (1, 0)), (1.0, (0, 3))))
assert newton_set(poly_mul(f, g)) == polytope_mul(newton_set(f), newton_set(g))
assert newton_set(poly_add(f, g)) == polytope_add(newton_set(f), newton_set(g))
print("N(f*g) = N(f) . N(g) and N(f+g) = N(f) (+) N(g): verified exactly.")

print("\nN(f*g) vertices:", [tuple(map(str, v)) for v in newton_set(poly_mul(f, g)).vertices])
