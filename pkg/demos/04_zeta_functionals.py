"""Fractional primitives of the shifted zeta function as linear functionals:
membership scans, duality ratios, and the disc-side analogue.

The coefficient sequence 1/(sqrt(n) (log n)^beta) defines a functional whose
membership in H^p (p >= 2) flips at beta = p/4, while its boundedness on
H^p (p <= 2) flips at beta = 1/p: the exponent pairs (p, 4/p) mirror each
other where classical duality would pair p with p/(p-1).

Run:  python3 demos/04_zeta_functionals.py
"""

from dirichlet_hardy.functionals import (
    dual_ratio_scan,
    halfplane_functional_check,
    pair_h2,
    phi_membership_scan,
    psi_beta_criteria,
)
from dirichlet_hardy.series import DirichletPolynomial

print("membership phase cells (divergent majorant = not in H^p):")
for p in (2.0, 3.0, 4.0):
    rows = phi_membership_scan([p], [p / 4 - 0.15, p / 4, p / 4 + 0.15],
                               n_max=1 << 20, first_log2=2.5)
    cells = [f"beta={r['beta']:.2f}:{r['label'][:4]}" for r in rows]
    print(f"  p={p}:  " + "  ".join(cells) + f"   (boundary at {p/4:.2f})")

print("\nduality ratio growth, pairing / quasi-norm of product test functions:")
res = dual_ratio_scan(1.0, 0.5, [100, 1000, 10**4, 10**5])
for r in res["rows"]:
    print(f"  N={r['N']:>6}  ratio {r['ratio']:.4f}")
print(f"  fitted slope vs loglog N: {res['slope']:.3f}"
      f"  (growth exponent 1/p - beta = 0.5)")

print("\nsame scan above the boundedness threshold, beta = 1.5:")
res2 = dual_ratio_scan(1.0, 1.5, [100, 1000, 10**4, 10**5])
print("  ratios:", ["%.4f" % r["ratio"] for r in res2["rows"]], "(bounded)")

print("\ndisc-side thresholds via the coefficient-criterion surrogate:")
for p in (4 / 3, 2.0, 4.0):
    below = psi_beta_criteria(p, max(1 / p - 0.25, 0.0))
    above = psi_beta_criteria(p, 1 / p + 0.25)
    print(f"  p={p:.3f}: beta={below['beta']:.3f} -> {below['label']},"
          f"  beta={above['beta']:.3f} -> {above['label']}"
          f"   (threshold 1/p = {1/p:.3f})")

print("\nthe pairing equals its half-plane integral representation:")
f = DirichletPolynomial({1: 0.5, 2: 1.0, 6: -2.0})
out = halfplane_functional_check(f, 1.0)
print(f"  coefficient sum: {out['pairing']:.10f}")
print(f"  integral form:   {out['integral']:.10f}   agree: {out['agree']}")
