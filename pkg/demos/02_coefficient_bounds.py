"""The largest k-th Taylor coefficient over the unit ball of H^p(D), and
its multiplicative extension to Dirichlet coefficients.

For p >= 1 the answer is trivially 1; below p = 1 the first coefficient has
a closed form with an explicit extremal family, higher coefficients are
bracketed between an ascent oracle and a one-dimensional minimization, and
the Dirichlet-side functional at n multiplies the one-variable answers over
the prime powers of n.

Run:  python3 demos/02_coefficient_bounds.py
"""

import math

from dirichlet_hardy.extremals import (
    c1_closed_form,
    c_multiplicative,
    ck_oracle,
    ck_upper_lemma,
    extremal_c1,
    growth_profile,
)
from dirichlet_hardy.norms import disc_norm

print("closed form C(1, p) and its extremal:")
for p in (0.25, 0.5, 0.75, 1.0):
    print(f"  C(1, {p}) = {c1_closed_form(p):.6f}")

c = extremal_c1(0.5, "c")
print("\nextremal for p = 1/2: (sqrt(3)/2 + z/2)^4, coefficients", list(c))
print("its quasi-norm:", disc_norm(c, 0.5), " first coefficient:", c[1])

print("\nbrackets for higher coefficients at p = 1/2:")
for k in (1, 2, 3, 4):
    lo = ck_oracle(k, 0.5, degree=k + 2, restarts=8, seed=0)
    hi = ck_upper_lemma(k, 0.5)
    print(f"  C({k}, 1/2) in [{lo:.5f}, {hi:.5f}]")

print("\nmultiplicative assembly at n = 12 = 2^2 * 3, p = 1/2:")
mb = c_multiplicative(12, 0.5, restarts=8, seed=0)
print(f"  lower {mb.lower:.5f}  upper {mb.upper:.5f}")

print("\nnormalized growth along primorials (square-free maximizers):")
for row in growth_profile(0.5, kmax=5):
    print(f"  n = {row['n']:>5}  statistic = {row['statistic_lower']:.4f}"
          f"   (limit log C(1,1/2) = {math.log(c1_closed_form(0.5)):.4f})")
