import numpy as np
import pytest

from dirichlet_hardy._util import spawn_rng
from dirichlet_hardy.arithmetic import FactorizationTable
from dirichlet_hardy.series import DirichletPolynomial


@pytest.fixture(scope="session")
def table():
    return FactorizationTable(10**6)


@pytest.fixture(scope="session")
def small_table():
    return FactorizationTable(10**4)


def smooth_support(limit, prime_count, table):
    allowed = set(int(q) for q in table.primes[:prime_count])
    return [n for n in range(1, limit + 1)
            if all(q in allowed for q, _ in table.factorize(n))]


def random_poly(rng, support):
    c = rng.standard_normal(len(support)) + 1j * rng.standard_normal(len(support))
    return DirichletPolynomial(dict(zip(support, c)))


@pytest.fixture
def rng():
    return spawn_rng(20240817)
