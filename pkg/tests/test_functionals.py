import math

import numpy as np
import pytest
from scipy.integrate import quad

from conftest import random_poly, smooth_support
from dirichlet_hardy._util import spawn_rng
from dirichlet_hardy.arithmetic import FactorizationTable, d_alpha
from dirichlet_hardy.functionals import (
    PhiBetaTruncation,
    PsiBetaTruncation,
    dual_pairing_integral,
    dual_ratio_scan,
    dual_test_function,
    dual_test_norm,
    halfplane_functional_check,
    halfshift_window_integral,
    l_beta_integral,
    log_star,
    pair_h2,
    phi_membership_scan,
    psi_beta_criteria,
)
from dirichlet_hardy.series import DirichletPolynomial


class TestPhiBeta:
    def test_coefficients(self):
        t = PhiBetaTruncation(1.0, 10)
        assert t.coefficient(1) == 1.0
        assert t.coefficient(2) == pytest.approx(1 / (math.sqrt(2) * math.log(2)))
        assert t.coefficient(11) == 0.0

    def test_monotone_from_three(self):
        for beta in (0.3, 0.7, 1.0, 2.5):
            b = PhiBetaTruncation(beta, 5000).coefficients
            assert np.all(b[3:5000] > b[4:5001])
            assert np.all(b[1:] >= 0)

    def test_domain(self):
        with pytest.raises(ValueError):
            PhiBetaTruncation(0.0, 10)

    def test_polynomial_roundtrip(self):
        # pairing the truncation with itself sums the squared coefficients
        t = PhiBetaTruncation(0.5, 50)
        f = t.polynomial()
        assert pair_h2(f, 0.5).real == pytest.approx(
            1.0 + sum(t.coefficient(n) ** 2 for n in range(2, 51)), rel=1e-9)


class TestPairing:
    def test_constant(self):
        assert pair_h2(DirichletPolynomial({1: 1}), 1.0) == 1.0

    def test_single_term(self):
        f = DirichletPolynomial({2: 4.0})
        assert pair_h2(f, 1.0).real == pytest.approx(4 / (math.sqrt(2) * math.log(2)))

    def test_zeta_truncation_growth_matches_integral(self):
        # direct summation against the integral comparison for 1/(sqrt(n) log n)
        for N in (10**3, 10**4):
            f = DirichletPolynomial({n: 1.0 for n in range(1, N + 1)})
            s = pair_h2(f, 1.0).real - 1.0
            integral = quad(lambda x: 1 / (math.sqrt(x) * math.log(x)), 2, N,
                            limit=400)[0]
            assert 0.9 < s / integral < 1.15

    def test_log_star(self):
        assert log_star(1) == 1.0
        assert log_star(3) == math.log(3)


class TestMembershipScan:
    def test_acceptance_grid_flips(self):
        for p in (2.0, 3.0, 4.0):
            rows = phi_membership_scan([p], [p / 4 - 0.15, p / 4, p / 4 + 0.15],
                                       n_max=1 << 20, first_log2=2.5)
            rows.sort(key=lambda r: r["beta"])
            labels = [r["label"] for r in rows]
            assert labels[0] == "divergent"
            assert labels[-1] == "convergent"
            # monotone: once convergent, stays convergent
            seen_conv = False
            for lab in labels:
                if lab == "convergent":
                    seen_conv = True
                else:
                    assert not seen_conv

    def test_decay_monotone_in_beta(self):
        rows = phi_membership_scan([2.0], [0.35, 0.5, 0.65], n_max=1 << 20,
                                   first_log2=2.5)
        decays = [r["majorant_decay"] for r in sorted(rows, key=lambda r: r["beta"])]
        assert decays[0] > decays[1] > decays[2]

    def test_minorant_divergent_below_threshold(self):
        rows = phi_membership_scan([2.0], [0.35], n_max=1 << 20, first_log2=2.5)
        assert rows[0]["minorant_trend"] == "divergent"

    def test_p_domain(self):
        with pytest.raises(ValueError):
            phi_membership_scan([1.5], [0.5], n_max=1 << 16, first_log2=2.0)


class TestDualTestFunction:
    def test_p2_coefficients(self, small_table):
        f = dual_test_function(2.0, 5, degree=2, support_limit=100,
                               table=small_table)
        assert all(f[n] == pytest.approx(n**-0.5, rel=1e-12) for n in f.support)
        assert 8 not in f.support  # exponent cap
        assert 7 not in f.support  # smoothness cap
        assert {1, 2, 3, 4, 6, 9, 12, 18, 36} <= set(f.support)

    def test_p1_squared_coefficients(self, small_table):
        f = dual_test_function(1.0, 5, degree=2, support_limit=50,
                               table=small_table)
        for n in f.support:
            assert f[n] == pytest.approx(
                d_alpha(n, 2.0, small_table) / math.sqrt(n), rel=1e-10)

    def test_norm_closed_form(self, small_table):
        # Mertens-type product over primes up to 5
        expect = (2.0 * 1.5 * 1.25)
        assert dual_test_norm(1.0, 5, small_table) == pytest.approx(expect,
                                                                    rel=1e-12)
        assert dual_test_norm(2.0, 5, small_table) == pytest.approx(
            math.sqrt(expect), rel=1e-12)

    def test_norm_matches_materialized_product(self, small_table):
        # high-degree truncation of the squared Euler product: its exact
        # l2 norm squared approaches the closed form
        from dirichlet_hardy.norms import norm_l2
        from dirichlet_hardy.series import euler_product_power
        g = euler_product_power(5, lambda q: [q ** (-0.5 * j) for j in range(13)],
                                1.0, 12, table=small_table)
        assert norm_l2(g).value ** 2 == pytest.approx(
            dual_test_norm(1.0, 5, small_table), rel=1e-3)


class TestDualPairingIntegral:
    def test_matches_direct_smooth_sum(self, small_table):
        # primes {2, 3}: the full smooth support is enumerable
        p, beta, N = 1.0, 0.5, 3
        direct = 1.0
        for a in range(30):
            for b in range(20):
                n = 2**a * 3**b
                if n == 1:
                    continue
                coef = (a + 1) * (b + 1) / math.sqrt(n)  # d_2 on 2^a 3^b
                direct += coef / (math.sqrt(n) * math.log(n) ** beta)
        integral = dual_pairing_integral(p, beta, N, table=small_table)
        assert integral == pytest.approx(direct, rel=1e-6)

    def test_scan_slopes(self, table):
        res = dual_ratio_scan(1.0, 0.5, [100, 1000, 10**4, 10**5], table=table)
        assert 0.35 <= res["slope"] <= 0.65
        res2 = dual_ratio_scan(2.0, 0.5, [100, 1000, 10**4, 10**5], table=table)
        assert abs(res2["slope"]) < 0.1  # critical pair: flat
        res3 = dual_ratio_scan(1.0, 1.5, [100, 1000, 10**4, 10**5], table=table)
        ratios = [r["ratio"] for r in res3["rows"]]
        assert all(a >= b for a, b in zip(ratios, ratios[1:]))


class TestPsiBeta:
    def test_gamma_ratio_values(self):
        psi = PsiBetaTruncation(1.0, 10).coefficients
        assert np.allclose(psi, 1.0 / np.arange(1, 12))
        psi2 = PsiBetaTruncation(2.0, 5).coefficients
        j = np.arange(6)
        assert np.allclose(psi2, 1.0 / ((j + 1) * (j + 2)))

    def test_power_law_envelope(self):
        for beta in (0.5, 1.0, 2.0):
            psi = PsiBetaTruncation(beta, 10**4).coefficients
            ratio = psi * (np.arange(10**4 + 1) + 1.0) ** beta
            assert np.all(ratio > 0.3) and np.all(ratio < 1.7)
            assert abs(ratio[-1] - 1.0) < 1e-2

    def test_criteria_grid(self):
        assert psi_beta_criteria(2.0, 0.75)["label"] == "convergent"
        assert psi_beta_criteria(2.0, 0.25)["label"] == "divergent"
        assert psi_beta_criteria(2.0, 1.0)["label"] == "convergent"

    def test_criteria_threshold_ordering(self):
        for p in (4 / 3, 2.0, 4.0):
            below = psi_beta_criteria(p, max(1 / p - 0.25, 0.0))
            above = psi_beta_criteria(p, 1 / p + 0.25)
            assert below["label"] == "divergent"
            assert above["label"] == "convergent"

    def test_p_domain(self):
        with pytest.raises(ValueError):
            psi_beta_criteria(1.0, 0.5)


class TestBoundaryIntegral:
    def test_constant(self):
        for beta in (0.5, 1.0, 2.0):
            assert l_beta_integral([1.0], beta) == pytest.approx(
                1.0 / math.gamma(beta + 1.0))

    def test_monomials_beta_one(self):
        for j in (0, 1, 5):
            c = [0.0] * j + [1.0]
            assert l_beta_integral(c, 1.0) == pytest.approx(1.0 / (j + 1))

    def test_against_adaptive_quadrature(self, rng):
        for beta in (0.5, 1.0, 2.0):
            c = rng.standard_normal(8)
            poly = np.polynomial.Polynomial(c)
            val, _ = quad(lambda r: poly(r) * (1 - r) ** (beta - 1.0), 0, 1,
                          limit=400)
            val /= math.gamma(beta)
            assert l_beta_integral(c, beta).real == pytest.approx(val, abs=1e-8)

    def test_matches_psi_pairing(self, rng):
        c = rng.standard_normal(10) + 1j * rng.standard_normal(10)
        psi = PsiBetaTruncation(0.7, 9).coefficients
        assert l_beta_integral(c, 0.7) == pytest.approx(
            complex(np.sum(c * psi)), rel=1e-12)


class TestHalfplaneCheck:
    def test_constant_function(self):
        out = halfplane_functional_check(DirichletPolynomial({1: 1}), 1.0)
        assert out["integral"] == pytest.approx(1.0, abs=1e-10)
        assert out["agree"]

    def test_exponential_integral(self):
        out = halfplane_functional_check(DirichletPolynomial({2: 1.0}), 1.0)
        expect = 2**-0.5 / math.log(2)
        assert out["pairing"].real == pytest.approx(expect, rel=1e-12)
        assert out["integral"].real == pytest.approx(expect, rel=1e-9)

    def test_gamma_substitution(self):
        n = 7
        out = halfplane_functional_check(DirichletPolynomial({n: 1.0}), 0.5)
        expect = n**-0.5 * math.log(n) ** -0.5
        assert out["pairing"].real == pytest.approx(expect, rel=1e-12)
        assert out["agree"]

    def test_random_polynomials(self, table):
        rng = spawn_rng(31)
        for _ in range(10):
            f = random_poly(rng, smooth_support(30, 3, table))
            for beta in (0.5, 1.0, 2.0):
                assert halfplane_functional_check(f, beta)["agree"]

    def test_domain(self):
        with pytest.raises(ValueError):
            halfplane_functional_check(DirichletPolynomial({1: 1}), 0.0)


class TestWindowIntegral:
    def test_unit_function(self):
        # int_0^1 x^{1/p - 1} dx = p
        for p in (0.5, 1.0, 2.0):
            assert halfshift_window_integral(
                DirichletPolynomial({1: 1}), p) == pytest.approx(p, rel=1e-9)

    def test_against_adaptive(self):
        f = DirichletPolynomial({2: 1.0, 3: -0.5})
        p = 1.5
        val, _ = quad(lambda s: (2**-s - 0.5 * 3**-s) * (s - 0.5) ** (1 / p - 1),
                      0.5, 1.5, limit=400, points=[0.5])
        assert halfshift_window_integral(f, p) == pytest.approx(abs(val), rel=1e-6)
