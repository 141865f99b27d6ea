import math

import numpy as np
import pytest

from conftest import random_poly, smooth_support
from dirichlet_hardy._util import spawn_rng
from dirichlet_hardy.extremals import c1_closed_form
from dirichlet_hardy.norms import QuadratureSpec, disc_norm, norm_l2, norm_qmc
from dirichlet_hardy.operators import (
    bernstein_constant_search,
    bernstein_smallest_constant,
    dilate,
    extremal_fM,
    helson_probe,
    lower_bound_bigN,
    monomial_bernstein_constant,
    operator_norm_scan,
    random_dirichlet,
    shift_indices,
    shifted_gN,
    shifted_gN_certificate,
    weissler_check,
    weissler_violation_search,
)
from dirichlet_hardy.series import DirichletPolynomial, partial_sum

LATTICE = QuadratureSpec(scheme="randomized_lattice", total_points=2048,
                         replications=16, seed=3)


class TestPartialSum:
    def test_truncation(self):
        f = DirichletPolynomial({1: 1, 2: 1, 3: 1})
        assert partial_sum(f, 2).coefficients == {1: 1, 2: 1}
        assert partial_sum(f, 5) == f
        assert partial_sum(f, 1).coefficients == {1: 1}

    def test_linear_idempotent(self, rng, table):
        f = random_poly(rng, smooth_support(30, 3, table))
        g = random_poly(rng, smooth_support(30, 3, table))
        assert partial_sum(f + g, 12) == partial_sum(f, 12) + partial_sum(g, 12)
        assert partial_sum(partial_sum(f, 12), 12) == partial_sum(f, 12)

    def test_commutes_with_shift(self, rng, table):
        f = random_poly(rng, smooth_support(20, 3, table))
        m = 7
        assert partial_sum(shift_indices(f, m), m * 20) == shift_indices(
            partial_sum(f, 20), m)


class TestExtremalProduct:
    def test_single_factor_coefficients(self):
        f = extremal_fM(1, 0.5)
        assert f.support == [1, 2, 4, 8, 16]
        assert abs(f[2]) == pytest.approx(c1_closed_form(0.5), rel=1e-12)
        assert abs(f[16]) == pytest.approx(1 / 16, rel=1e-12)

    def test_primorial_coefficient(self):
        f = extremal_fM(2, 0.5)
        assert abs(f[6]) == pytest.approx(c1_closed_form(0.5) ** 2, rel=1e-12)
        assert abs(f[6]) == pytest.approx(1.6875, rel=1e-12)

    def test_unit_quasi_norm(self, table):
        for k in (1, 2, 3):
            f = extremal_fM(k, 0.5, table=table)
            est = norm_qmc(f, 0.5, LATTICE)
            assert est.value == pytest.approx(1.0, abs=max(3 * est.error, 5e-3))

    def test_needs_integer_exponent_or_degree(self):
        with pytest.raises(ValueError):
            extremal_fM(1, 0.6)
        f = extremal_fM(1, 0.6, degree=12)
        assert f.length == 2**12


class TestLowerBound:
    def test_meets_target(self, table):
        for k in (1, 2):
            res = lower_bound_bigN(k, 0.5, spec=LATTICE, table=table)
            assert res["best"] >= res["target"] - res["error"]
            assert res["target"] == pytest.approx(
                2.0**-2 * c1_closed_form(0.5) ** k, rel=1e-12)
            assert res["coefficient_at_M"] == pytest.approx(
                c1_closed_form(0.5) ** k, rel=1e-12)

    def test_p2_orthogonal_contraction(self, table):
        f = extremal_fM(1, 1.0, degree=2, table=table)
        assert norm_l2(partial_sum(f, 2)).value <= norm_l2(f).value + 1e-12


class TestShiftedConstruction:
    def test_example_N100(self):
        cert = shifted_gN_certificate(100)
        assert cert["n_J"] == 6
        assert cert["x_case1"] == 16
        assert cert["x_case2"] == 17
        assert cert["case1_certificate"] and cert["case2_certificate"]

    def test_exhaustive_small_range(self):
        for N in range(6, 5000):
            cert = shifted_gN_certificate(N)
            assert cert["case1_certificate"], N
            assert cert["case2_certificate"], N
            assert cert["case1_keeps_target"], N

    def test_domain(self):
        with pytest.raises(ValueError):
            shifted_gN_certificate(5)

    def test_identity_and_norm_preservation(self, table):
        g, cert = shifted_gN(100, 0.5, spec=LATTICE, table=table)
        assert cert["identity_holds"]
        # vertical translation preserves the quasi-norm
        est_g = norm_qmc(g, 0.5, LATTICE)
        assert est_g.value == pytest.approx(
            cert["norm_f"], abs=3 * (est_g.error + cert["error"]) + 5e-3)


class TestScans:
    def test_p2_never_expands(self):
        rows = operator_norm_scan(2.0, [8, 64], family="random", trials=5, seed=1,
                                  spec=LATTICE)
        for e in rows:
            assert e.ratio <= 1.0 + e.error + 1e-9

    def test_random_family_reaches_one(self):
        rows = operator_norm_scan(1.0, [64], family="random", trials=3, seed=2,
                                  spec=LATTICE)
        assert rows[0].ratio >= 1.0 - 1e-12

    def test_extremal_trend(self):
        rows = operator_norm_scan(0.5, [1, 2, 3], family="extremal_fM",
                                  spec=LATTICE)
        ratios = [e.ratio for e in rows]
        assert all(b > a for a, b in zip(ratios, ratios[1:]))
        assert all(e.extra["meets_target"] for e in rows)
        # normalized statistic exceeds the half-log lower-bound constant
        last = rows[-1]
        stat = math.log(last.ratio) * math.log(math.log(last.N)) / math.log(last.N)
        assert stat > 0.5 * math.log(c1_closed_form(0.5))

    def test_shifted_family(self):
        rows = operator_norm_scan(0.5, [50, 100], family="shifted_gN",
                                  spec=LATTICE)
        for e in rows:
            assert e.extra["identity_holds"]
            assert e.ratio > 1.0

    def test_user_family(self, rng, table):
        f = random_poly(rng, smooth_support(30, 3, table))
        rows = operator_norm_scan(2.0, [10], family="user", polynomials=[f],
                                  spec=LATTICE)
        assert len(rows) == 1
        with pytest.raises(ValueError):
            operator_norm_scan(2.0, [10], family="user")

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            operator_norm_scan(1.0, [4], family="bogus")


class TestHelsonProbe:
    def test_records_data(self):
        rows = helson_probe(16, [0.6, 0.8], trials=4, seed=0, spec=LATTICE)
        assert len(rows) == 2
        assert all(np.isfinite(r["scaled_max"]) and r["scaled_max"] > 0
                   for r in rows)

    def test_domain(self):
        with pytest.raises(ValueError):
            helson_probe(16, [1.5], trials=2, spec=LATTICE)


class TestWeissler:
    def test_example_values(self):
        out = weissler_check([1.0, 1.0], 2.0, 4.0, 1 / math.sqrt(2))
        assert out["lhs"] == pytest.approx(3.25**0.25, rel=1e-10)
        assert out["rhs"] == pytest.approx(math.sqrt(2), rel=1e-12)
        assert out["holds"]

    def test_r_zero_point_bound(self, rng):
        c = rng.standard_normal(7) + 1j * rng.standard_normal(7)
        out = weissler_check(c, 1.0, 2.0, 0.0)
        assert out["lhs"] == pytest.approx(abs(c[0]), rel=1e-9)
        assert out["holds"]

    def test_identity_dilation(self, rng):
        c = rng.standard_normal(5)
        out = weissler_check(c, 1.3, 1.3, 1.0)
        assert out["lhs"] == pytest.approx(out["rhs"], rel=1e-12)

    def test_no_violation_at_critical(self):
        rng = spawn_rng(23)
        for p, q in ((1.0, 2.0), (2.0, 4.0), (0.5, 1.0)):
            r = math.sqrt(p / q)
            for _ in range(100):
                c = rng.standard_normal(9) + 1j * rng.standard_normal(9)
                assert weissler_check(c, p, q, r)["holds"]

    def test_violation_beyond_critical(self):
        hit = weissler_violation_search(2.0, 4.0, math.sqrt(0.5) + 0.05, seed=0)
        assert hit["found"]
        assert hit["margin"] > 1e-4
        # confirm the witness with an independent exact computation: both
        # sides are even-exponent norms of an explicit polynomial
        c = hit["coefficients"]
        out = weissler_check(c, 2.0, 4.0, math.sqrt(0.5) + 0.05, points=1 << 14)
        assert out["lhs"] > out["rhs"]

    def test_search_clean_at_critical(self):
        miss = weissler_violation_search(2.0, 4.0, math.sqrt(0.5), samples=100,
                                         seed=0)
        assert not miss["found"]


class TestBernstein:
    def test_monomial_closed_form(self):
        for n, p in ((8, 0.5), (32, 1.0)):
            expect = monomial_bernstein_constant(n, p)
            got = bernstein_smallest_constant(
                np.eye(n + 1)[n], n, p)
            assert got == pytest.approx(expect, rel=1e-3)

    def test_constant_polynomial(self):
        # dilation-invariant: every feasible C works, so the floor returns
        val = bernstein_smallest_constant([2.0], 8, 0.5)
        assert val == pytest.approx(8**-0.5, rel=1e-6)

    def test_search_stability(self):
        a = bernstein_constant_search([8, 32], [0.5, 1.0], samples=12, seed=0)
        b = bernstein_constant_search([8, 32], [0.5, 1.0], samples=12, seed=77)
        for r1, r2 in zip(a, b):
            assert r1["empirical_C"] <= 2 * r2["empirical_C"]
            assert r2["empirical_C"] <= 2 * r1["empirical_C"]

    def test_monomial_dominates_random(self):
        rows = bernstein_constant_search([8], [0.5], samples=8, seed=0)
        assert rows[0]["empirical_C"] >= rows[0]["monomial_C"] - 1e-9


class TestDilate:
    def test_geometric_scaling(self):
        out = dilate([1.0, 2.0, 3.0], 0.5)
        assert np.allclose(out, [1.0, 1.0, 0.75])
