import json
import math

import numpy as np
import pytest

from conftest import random_poly, smooth_support
from dirichlet_hardy._util import spawn_rng
from dirichlet_hardy.series import (
    DirichletPolynomial,
    MultivariatePolynomial,
    abschnitt,
    bohr_lift,
    bohr_unlift,
    euler_product_power,
    multi_index,
    multiply,
    partial_sum,
    power,
    series_pow,
)


class TestDirichletPolynomial:
    def test_zero_coefficients_dropped(self):
        f = DirichletPolynomial({1: 1.0, 2: 0.0, 5: 2.0})
        assert f.support == [1, 5]
        assert f.length == 5
        assert DirichletPolynomial({}).length == 0

    def test_bad_index(self):
        with pytest.raises(ValueError):
            DirichletPolynomial({0: 1.0})

    def test_arithmetic(self):
        f = DirichletPolynomial({1: 1, 2: 1})
        g = DirichletPolynomial({2: -1, 3: 2})
        assert (f + g).coefficients == {1: 1, 3: 2}
        assert (2j * f)[2] == 2j
        assert (f - f).length == 0

    def test_text_roundtrip(self, rng):
        f = random_poly(rng, [1, 2, 3, 4, 6, 12])
        assert DirichletPolynomial.from_text(f.to_text()) == f

    def test_text_parse_errors(self):
        with pytest.raises(ValueError, match="line 2"):
            DirichletPolynomial.from_text("1 1 0\nbogus\n")
        with pytest.raises(ValueError, match="line 1"):
            DirichletPolynomial.from_text("0 1 0\n")
        # comments and blank lines pass through
        f = DirichletPolynomial.from_text("# header\n\n2 1.5 -0.5\n")
        assert f[2] == 1.5 - 0.5j

    def test_json_roundtrip(self, rng):
        f = random_poly(rng, [1, 5, 30])
        assert DirichletPolynomial.from_json(f.to_json()) == f
        payload = json.loads(f.to_json())
        assert sorted(e["n"] for e in payload["coefficients"]) == [1, 5, 30]


class TestEvaluation:
    def test_halfplane_example(self):
        f = DirichletPolynomial({1: 1, 2: 1})
        assert f.evaluate(1.0) == pytest.approx(1.5)

    def test_zeta_truncation(self):
        f = DirichletPolynomial({n: 1.0 for n in range(1, 101)})
        # tail bound: integral of x^-2 beyond 100 is 0.01
        assert abs(f.evaluate(2.0) - math.pi**2 / 6) < 0.01

    def test_torus_evaluation(self):
        F = MultivariatePolynomial({(1, 1): 1.0})
        assert F.evaluate([1j, -1]) == pytest.approx(-1j)


class TestBohrLift:
    def test_multi_index_examples(self, table):
        assert multi_index(6, table) == (1, 1)
        assert multi_index(1, table) == ()
        assert multi_index(12, table) == (2, 1)

    def test_lift_examples(self, table):
        f = DirichletPolynomial({1: 1, 2: 2, 12: 1})
        F = bohr_lift(f, table)
        assert F[()] == 1
        assert F[(1,)] == 2
        assert F[(2, 1)] == 1
        assert F.dimension == 2

    def test_unlift_roundtrip(self, table, rng):
        for _ in range(20):
            f = random_poly(rng, smooth_support(60, 4, table))
            assert bohr_unlift(bohr_lift(f, table), table) == f

    def test_ring_isomorphism(self, table):
        # lift of a product equals product of lifts, coefficient-wise
        rng = spawn_rng(7)
        support = smooth_support(30, 3, table)
        for _ in range(200):
            f = random_poly(rng, support)
            g = random_poly(rng, support)
            lhs = bohr_lift(multiply(f, g), table)
            rhs = bohr_lift(f, table) * bohr_lift(g, table)
            keys = set(lhs.terms) | set(rhs.terms)
            for k in keys:
                assert lhs[k] == pytest.approx(rhs[k], rel=1e-12, abs=1e-12)

    def test_lift_beyond_sieve(self):
        from dirichlet_hardy.arithmetic import FactorizationTable
        tiny = FactorizationTable(10)
        with pytest.raises(ValueError):
            bohr_lift(DirichletPolynomial({11: 1.0}), tiny)


class TestAbschnitt:
    def test_drop_higher_variables(self):
        F = MultivariatePolynomial({(): 1, (1,): 2, (2, 1): 1})
        A1 = abschnitt(F, 1)
        assert A1.terms == {(): 1, (1,): 2}

    def test_identity_and_constant(self):
        F = MultivariatePolynomial({(): 1, (1,): 2, (2, 1): 1})
        assert abschnitt(F, F.dimension) == F
        assert abschnitt(F, 0).terms == {(): 1}

    def test_idempotence_composition(self, table, rng):
        f = random_poly(rng, smooth_support(100, 4, table))
        F = bohr_lift(f, table)
        for m in range(4):
            assert abschnitt(abschnitt(F, 3), m) == abschnitt(F, min(m, 3))


class TestMultiply:
    def test_square(self):
        f = DirichletPolynomial({1: 1, 2: 1})
        assert power(f, 2).coefficients == {1: 1, 2: 2, 4: 1}

    def test_identity(self, rng):
        one = DirichletPolynomial({1: 1})
        f = random_poly(rng, [1, 3, 9, 10])
        assert multiply(f, one) == f

    def test_index_limit(self):
        f = DirichletPolynomial({100: 1.0})
        with pytest.raises(ValueError):
            multiply(f, f, limit=5000)

    def test_power_validation(self):
        with pytest.raises(ValueError):
            power(DirichletPolynomial({1: 1}), 0)


class TestSeriesPow:
    def test_integer_power_matches_binomial(self):
        out = series_pow([1.0, 1.0], 4, 4)
        assert np.allclose(out, [1, 4, 6, 4, 1])

    def test_fractional_power_oracle(self):
        # (1+x)^0.5 Taylor coefficients via explicit binomial series
        out = series_pow([1.0, 1.0], 0.5, 6)
        binom = [1.0]
        for j in range(1, 7):
            binom.append(binom[-1] * (0.5 - (j - 1)) / j)
        assert np.allclose(out, binom)

    def test_needs_constant_term(self):
        with pytest.raises(ValueError):
            series_pow([0.0, 1.0], 2.0, 3)


class TestEulerProduct:
    def test_halfshift_zeta_factors(self):
        f = euler_product_power(3, lambda p: [1.0, p**-0.5, 1.0 / p], 1.0, 2)
        assert f.support == [1, 2, 3, 4, 6, 9, 12, 18, 36]
        for n in f.support:
            assert f[n] == pytest.approx(n**-0.5, rel=1e-12)

    def test_exponent_one_is_plain_product(self):
        base = euler_product_power(3, lambda p: [1.0, 0.5], 1.0, 1)
        assert base.coefficients == pytest.approx(
            {1: 1.0, 2: 0.5, 3: 0.5, 6: 0.25})

    def test_extremal_factor_constant_term(self):
        # two factors (sqrt(1-p/2) + q^{-s} sqrt(p/2))^4 at p = 1/2
        a = math.sqrt(0.75)
        b = math.sqrt(0.25)
        f = euler_product_power(3, lambda q: [a, b], 4, 4)
        assert f[1] == pytest.approx((0.75) ** 2 * (0.75) ** 2, rel=1e-12)
        assert f.length == 16 * 81

    def test_support_limit(self):
        f = euler_product_power(3, lambda p: [1.0, 1.0], 1.0, 3,
                                support_limit=10)
        assert f.length <= 10
