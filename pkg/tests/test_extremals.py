import math

import numpy as np
import pytest

from dirichlet_hardy.extremals import (
    CoeffBound,
    c1_closed_form,
    c_multiplicative,
    ck_oracle,
    ck_upper_endpoints,
    ck_upper_lemma,
    coeff_bound,
    extremal_c1,
    growth_profile,
    growth_statistic,
)
from dirichlet_hardy.norms import disc_norm


class TestClosedForm:
    def test_value_at_one_half(self):
        assert c1_closed_form(0.5) == pytest.approx(2 * (3 / 4) ** 1.5, rel=1e-14)
        assert c1_closed_form(0.5) == pytest.approx(1.299038105676658, rel=1e-12)

    def test_trivial_above_one(self):
        for p in (1.0, 1.5, 7.0):
            assert c1_closed_form(p) == 1.0

    def test_continuity_at_one(self):
        assert c1_closed_form(1 - 1e-9) == pytest.approx(1.0, abs=1e-6)

    def test_small_p_asymptotics(self):
        # sqrt(p) C(1,p) approaches sqrt(2/e) from above as p drops
        target = math.sqrt(2 / math.e)
        v01 = math.sqrt(0.1) * c1_closed_form(0.1)
        v001 = math.sqrt(0.01) * c1_closed_form(0.01)
        assert abs(v001 - target) / target < 0.05
        assert abs(v001 - target) < abs(v01 - target)

    def test_domain(self):
        with pytest.raises(ValueError):
            c1_closed_form(0.0)


class TestExtremalFamilies:
    def test_variant_c_half(self):
        c = extremal_c1(0.5, "c")
        expect = [math.comb(4, j) * (math.sqrt(3) / 2) ** (4 - j) * 0.5**j
                  for j in range(5)]
        assert np.allclose(c, expect)
        assert disc_norm(c, 0.5) == pytest.approx(1.0, rel=1e-12)
        assert c[1] == pytest.approx(1.299038105676658, rel=1e-9)

    def test_variant_c_achieves_bound(self):
        for p in (0.25, 0.5):  # 2/p integer: exact binomial
            c = extremal_c1(p, "c")
            ratio = abs(c[1]) / disc_norm(c, p)
            assert ratio == pytest.approx(c1_closed_form(p), abs=1e-6)

    def test_variant_c_truncated(self):
        c = extremal_c1(0.55, "c", degree=40)
        assert disc_norm(c, 0.55) == pytest.approx(1.0, abs=1e-8)

    def test_variant_b(self):
        for a in (0.0, 0.4, 1.0):
            c = extremal_c1(1.0, "b", a=a)
            assert c[1] == pytest.approx(1.0)
            assert disc_norm(c, 1.0, 8192) == pytest.approx(1.0, abs=1e-9)
        with pytest.raises(ValueError):
            extremal_c1(1.0, "b", a=1.5)

    def test_variant_a(self):
        c = extremal_c1(2.0, "a")
        assert list(c) == [0.0, 1.0]

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            extremal_c1(0.5, "z")


class TestUpperLemma:
    def test_left_endpoint_case(self):
        # at k = 1, p = 1/2 the minimum sits at the left endpoint x = p
        assert ck_upper_lemma(1, 0.5) == pytest.approx(math.sqrt(2), rel=1e-9)

    def test_exceeds_closed_form(self):
        for p in (0.25, 0.5, 0.75):
            assert ck_upper_lemma(1, p) > c1_closed_form(p)

    def test_monotone_in_k(self):
        vals = [ck_upper_lemma(k, 0.5) for k in (1, 2, 3, 4, 6)]
        assert all(b >= a for a, b in zip(vals, vals[1:]))

    def test_endpoints(self):
        eps = ck_upper_endpoints(1, 0.5)
        assert eps["at_p"] == pytest.approx(math.sqrt(2), rel=1e-12)
        assert eps["at_big"] == pytest.approx(math.sqrt(2), rel=1e-12)
        eps2 = ck_upper_endpoints(4, 0.5)
        assert eps2["at_big"] <= math.exp(0.5) * 4 ** (2 * (2 - 1)) * 1.01

    def test_interior_minimum(self):
        # for large k the interior beats both endpoints
        k, p = 6, 0.5
        val = ck_upper_lemma(k, p)
        eps = ck_upper_endpoints(k, p)
        assert val < min(eps["at_p"], eps["at_big"]) + 1e-12

    def test_domain(self):
        with pytest.raises(ValueError):
            ck_upper_lemma(1, 1.0)


class TestOracle:
    def test_k1_matches_closed_form(self):
        for p in (0.5, 0.75):
            v = ck_oracle(1, p, degree=6, restarts=6, seed=1)
            cf = c1_closed_form(p)
            assert cf - 1e-3 <= v <= cf + 1e-9

    def test_k0_constant(self):
        assert ck_oracle(0, 0.5, degree=3, restarts=3, seed=0) == pytest.approx(
            1.0, abs=1e-7)

    def test_trivial_above_one(self):
        v = ck_oracle(2, 2.0, degree=4, restarts=4, seed=0)
        assert v == pytest.approx(1.0, abs=1e-6)

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            ck_oracle(5, 0.5, degree=3)

    def test_deterministic(self):
        a = ck_oracle(2, 0.5, degree=4, restarts=3, seed=7)
        b = ck_oracle(2, 0.5, degree=4, restarts=3, seed=7)
        assert a == b


class TestMultiplicativeAssembly:
    def test_squarefree_closed_form(self, small_table):
        mb = c_multiplicative(6, 0.5, small_table)
        cf = c1_closed_form(0.5)
        assert mb.lower == pytest.approx(cf**2, rel=1e-12)
        assert mb.upper == pytest.approx(cf**2, rel=1e-12)

    def test_unit(self, small_table):
        mb = c_multiplicative(1, 0.5, small_table)
        assert mb.lower == mb.upper == 1.0

    def test_prime_square_assembly(self, small_table):
        mb = c_multiplicative(12, 0.5, small_table, restarts=2, seed=0)
        cb2 = coeff_bound(2, 0.5, restarts=2, seed=0)
        cf = c1_closed_form(0.5)
        assert mb.upper == pytest.approx(cb2.upper * cf, rel=1e-12)
        assert mb.lower == pytest.approx(cb2.lower * cf, rel=1e-12)
        assert mb.upper == pytest.approx(ck_upper_lemma(2, 0.5) * cf, rel=1e-9)

    def test_coprime_multiplicativity(self, small_table):
        m = c_multiplicative(4, 0.5, small_table, restarts=2, seed=0)
        n = c_multiplicative(9, 0.5, small_table, restarts=2, seed=0)
        mn = c_multiplicative(36, 0.5, small_table, restarts=2, seed=0)
        assert mn.lower == pytest.approx(m.lower * n.lower, rel=1e-12)
        assert mn.upper == pytest.approx(m.upper * n.upper, rel=1e-12)

    def test_p_above_one(self, small_table):
        mb = c_multiplicative(360, 1.5, small_table)
        assert mb.lower == mb.upper == 1.0

    def test_bracket_validation(self):
        with pytest.raises(ValueError):
            CoeffBound(2, 0.5, lower=2.0, upper=1.0,
                       lower_method="x", upper_method="y")


class TestGrowthProfile:
    def test_primorial_statistic(self):
        rows = growth_profile(0.5, kmax=5)
        ns = [r["n"] for r in rows]
        assert ns == [2, 6, 30, 210, 2310]
        stats = [r["statistic_lower"] for r in rows]
        assert all(b > a for a, b in zip(stats, stats[1:]))
        # finite-scale overshoot of the limit log C(1, 1/2) = 0.2617 stays mild
        limit = math.log(c1_closed_form(0.5))
        assert stats[-1] == pytest.approx(limit, rel=0.5)

    def test_single_factor(self):
        rows = growth_profile(0.5, kmax=1)
        expect = growth_statistic(2, math.log(c1_closed_form(0.5)))
        assert rows[0]["statistic_lower"] == pytest.approx(expect, rel=1e-12)

    def test_p_monotonicity(self):
        hi = growth_profile(0.5, kmax=5)[-1]["statistic_lower"]
        lo = growth_profile(0.9, kmax=5)[-1]["statistic_lower"]
        assert lo < hi

    def test_greedy_mode_runs(self):
        rows = growth_profile(0.5, kmax=4, mode="all", restarts=2, seed=0)
        assert len(rows) == 4
        ns = [r["n"] for r in rows]
        assert all(b > a for a, b in zip(ns, ns[1:]))
        assert all(r["log_c_lower"] <= r["log_c_upper"] + 1e-9 for r in rows)

    def test_mode_validation(self):
        with pytest.raises(ValueError):
            growth_profile(0.5, mode="bogus")
