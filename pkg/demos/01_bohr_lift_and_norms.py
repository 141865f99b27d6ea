"""Tour of the core objects: Dirichlet polynomials, the Bohr lift, and the
four ways to measure a quasi-norm.

Run:  python3 demos/01_bohr_lift_and_norms.py
"""

import math

from dirichlet_hardy import (
    DirichletPolynomial,
    QuadratureSpec,
    bohr_lift,
    norm_even,
    norm_l2,
    norm_qmc,
    norm_vertical,
)

# A Dirichlet polynomial is a sparse map n -> coefficient.
f = DirichletPolynomial({1: 1.0, 2: 2.0, 6: -0.5, 12: 1.0})
print("f(s) = 1 + 2*2^-s - 0.5*6^-s + 12^-s")
print("support:", f.support, " length:", f.length)
print("f(2) =", f.evaluate(2.0))

# The Bohr lift substitutes z_j for the j-th prime power p_j^-s; unique
# factorization makes this a ring isomorphism onto multivariate polynomials.
F = bohr_lift(f)
print("\nBohr lift terms (exponent vector -> coefficient):")
for key, c in F:
    print("  ", key, "->", c)

# Exact norms: p = 2 is the l2 norm of coefficients; p = 2k reduces to it.
print("\n||f||_2 =", norm_l2(f).value)
print("||f||_4 =", norm_even(f, 4).value)

# Quadrature on the polytorus: a tensor grid of roots of unity is exact for
# even p; a randomly shifted lattice gives error bars for any p > 0.
tensor = norm_qmc(f, 4, QuadratureSpec(scheme="tensor_grid"))
lattice = norm_qmc(f, 0.5, QuadratureSpec(scheme="randomized_lattice", seed=1))
print("\ntensor grid p=4:", tensor.value, "(error", tensor.error, ")")
print("lattice p=1/2:  ", lattice.value, "+-", lattice.error)

# The vertical-line average over [-T, T] recovers the same norm as T grows:
# the ergodic route to the definition.
for T in (1e2, 1e3, 1e4):
    v = norm_vertical(f, 2, T)
    print(f"vertical-line p=2, T={T:g}: {v.value**2:.6f}"
          f"  (l2 squared = {norm_l2(f).value**2:.6f})")
