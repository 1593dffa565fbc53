"""Fuzzy numbers as level-cut envelopes: arithmetic, the Hukuhara
difference, and the sup metric.

A fuzzy number here is the pair of endpoint functions of its level sets,
(lower(r), upper(r)) for membership levels r in [0, 1]. Both branches are
affine in r, so everything below is exact arithmetic.
"""

from fuzzybvp import FuzzyNumber, RFun, add, h_difference, hausdorff, scale, triangular

# A triangular number is just the affine envelope through (left, center, right).
u = triangular(1, 2, 3)
print("triangular(1, 2, 3):")
for r in (0.0, 0.5, 1.0):
    print(f"  level r={r:3.1f}: [{u.lower(r):g}, {u.upper(r):g}]")

# Branch-wise addition and scalar multiplication. A negative factor swaps
# the branches so the result is still a valid envelope.
v = FuzzyNumber(RFun(4, 1), RFun(6, -1))        # (4+r, 6-r)
s = add(u, v)
print("\n(1+r, 3-r) + (4+r, 6-r) =", f"({s.lower.c0:g}+{s.lower.c1:g}r,",
      f"{s.upper.c0:g}{s.upper.c1:+g}r)")
n = scale(-1, u)
print("-1 * (1+r, 3-r)          =", f"({n.lower.c0:g}+{n.lower.c1:g}r,",
      f"{n.upper.c0:g}{n.upper.c1:+g}r)")

# The Hukuhara difference inverts addition when it exists: z with y + z = x.
# It often does not exist; that is a regular outcome, reported as None.
z = h_difference(s, v)
print("\nH-difference (5+2r, 9-2r) minus (4+r, 6-r):",
      f"({z.lower.c0:g}+{z.lower.c1:g}r, {z.upper.c0:g}{z.upper.c1:+g}r)")
print("H-difference the other way round:", h_difference(u, s))

# The metric takes the worst endpoint gap over all levels. For affine
# branches the sup sits at r = 0 or r = 1, so it is computed exactly.
print("\ndistance((1+r, 3-r), (4+r, 6-r)) =", hausdorff(u, v))
w = triangular(-5, -2, 8)
print("translation invariance: d(u+w, v+w) =", hausdorff(add(u, w), add(v, w)))
print("scaling: d(3u, 3v) =", hausdorff(scale(3, u), scale(3, v)), "= 3 * d(u, v)")
