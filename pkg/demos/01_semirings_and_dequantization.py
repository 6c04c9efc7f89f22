"""Tour of the semiring instances and the deformation that links them.

Run:  python3 demos/01_semirings_and_dequantization.py
"""

import math

from tropikit import MAXPLUS, MINPLUS, add, check_axioms, deformed_add, get_semiring, leq, mul

# The max-plus semiring replaces + with max and * with +.  Its "zero" is
# -inf (neutral for max) and its "one" is 0.0 (neutral for +).
print("maxplus:  2 (+) 5 =", add(2.0, 5.0, MAXPLUS))
print("maxplus:  2 (.) 5 =", mul(2.0, 5.0, MAXPLUS))
print("minplus:  2 (+) 5 =", add(2.0, 5.0, MINPLUS))
print("zero, one:", MAXPLUS.zero, MAXPLUS.one)

# Addition being idempotent (x (+) x = x) induces a partial order
# a <= b iff a (+) b = b.  In minplus the order runs against the numbers:
# +inf is the least element.
print("\nstandard order: leq(3, 7) in maxplus:", leq(3.0, 7.0, MAXPLUS))
print("standard order: leq(3, 7) in minplus:", leq(3.0, 7.0, MINPLUS))

# Every instance can be audited against the semiring laws on random triples.
for name in ("bool", "maxplus", "minplus", "maxmin", "nonneg", "deformed:0.5"):
    results = check_axioms(get_semiring(name), trials=2000, seed=0)
    bad = [law for law, ok in results.items() if not ok]
    print(f"{name:14s} laws: {'all pass' if not bad else 'fails ' + ', '.join(bad)}")

# The deformed addition u (+)_h v = h*ln(exp(u/h) + exp(v/h)) interpolates
# between ordinary + (through the exp/log change of variables) and max.
# The gap to max is at most h*ln 2 and shrinks linearly with h.
print("\nh        0 (+)_h 0          gap bound h*ln2")
for h in (1.0, 0.5, 0.1, 0.01, 0.001):
    print(f"{h:<8g} {deformed_add(0.0, 0.0, h):<18.12g} {h * math.log(2):.12g}")

# At h -> 0 the smooth operation freezes onto max: dequantization.
print("\ndeformed_add(1, 3, 0.001) =", deformed_add(1.0, 3.0, 0.001), "~ max(1, 3)")
