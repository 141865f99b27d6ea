"""Dirichlet polynomials and their Bohr lifts to the finite polytorus.

A Dirichlet polynomial f(s) = sum a_n n^{-s} is stored as a sparse map from
the index n to the complex coefficient a_n.  The Bohr lift substitutes
z_j = p_j^{-s} (p_j the j-th prime), turning f into a multivariate polynomial
sum a_n z^kappa(n) where kappa(n) is the exponent vector of n.  Both sides
are immutable value types; all operations return new objects.
"""

from __future__ import annotations

import cmath
import json
import math
from typing import Iterable, Mapping, Sequence

import numpy as np

from .arithmetic import FactorizationTable, default_table

_ZERO_TOL = 0.0  # stored coefficients are dropped only when exactly zero


class DirichletPolynomial:
    """Finite Dirichlet series sum_{n} a_n n^{-s} with sparse coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Mapping[int, complex] | Iterable[tuple[int, complex]] = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        coeffs: dict[int, complex] = {}
        for n, c in items:
            n = int(n)
            if n < 1:
                raise ValueError(f"index {n} is not a positive integer")
            c = complex(c)
            if c != 0:
                coeffs[n] = coeffs.get(n, 0) + c
                if coeffs[n] == 0:
                    del coeffs[n]
        self._coeffs = dict(sorted(coeffs.items()))

    @property
    def coefficients(self) -> dict[int, complex]:
        return dict(self._coeffs)

    @property
    def support(self) -> list[int]:
        return list(self._coeffs)

    @property
    def length(self) -> int:
        """Largest index with a nonzero coefficient (0 for the zero polynomial)."""
        return max(self._coeffs, default=0)

    def __getitem__(self, n: int) -> complex:
        return self._coeffs.get(int(n), 0j)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, DirichletPolynomial) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __repr__(self):
        terms = ", ".join(f"{n}: {c:.6g}" for n, c in list(self._coeffs.items())[:6])
        more = ", ..." if len(self._coeffs) > 6 else ""
        return f"DirichletPolynomial({{{terms}{more}}})"

    def __add__(self, other: "DirichletPolynomial") -> "DirichletPolynomial":
        out = dict(self._coeffs)
        for n, c in other._coeffs.items():
            out[n] = out.get(n, 0) + c
        return DirichletPolynomial(out)

    def __sub__(self, other: "DirichletPolynomial") -> "DirichletPolynomial":
        return self + (-1) * other

    def __rmul__(self, scalar: complex) -> "DirichletPolynomial":
        return DirichletPolynomial({n: scalar * c for n, c in self._coeffs.items()})

    def __mul__(self, other) -> "DirichletPolynomial":
        if isinstance(other, DirichletPolynomial):
            return multiply(self, other)
        return DirichletPolynomial({n: other * c for n, c in self._coeffs.items()})

    def evaluate(self, s: complex) -> complex:
        """Exact finite sum of a_n n^{-s}."""
        return sum(c * cmath.exp(-s * math.log(n)) for n, c in self._coeffs.items())

    def l2_norm(self) -> float:
        return math.sqrt(math.fsum(abs(c) ** 2 for c in self._coeffs.values()))

    def to_text(self) -> str:
        """One 'n re im' triple per line, sorted by index."""
        lines = [f"{n} {c.real!r} {c.imag!r}" for n, c in self._coeffs.items()]
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str) -> "DirichletPolynomial":
        coeffs = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'n re im', got {raw!r}")
            try:
                n = int(parts[0])
                re, im = float(parts[1]), float(parts[2])
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
            if n < 1:
                raise ValueError(f"line {lineno}: index must be positive, got {n}")
            coeffs[n] = coeffs.get(n, 0) + complex(re, im)
        return cls(coeffs)

    def to_json(self) -> str:
        entries = [{"n": n, "re": c.real, "im": c.imag} for n, c in self._coeffs.items()]
        return json.dumps({"coefficients": entries}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "DirichletPolynomial":
        data = json.loads(text)
        return cls({e["n"]: complex(e["re"], e["im"]) for e in data["coefficients"]})


def multiply(f: DirichletPolynomial, g: DirichletPolynomial,
             limit: int | None = None) -> DirichletPolynomial:
    """Dirichlet convolution: the coefficient at k is sum over mn=k of a_m b_n."""
    out: dict[int, complex] = {}
    for m, a in f:
        for n, b in g:
            k = m * n
            if limit is not None and k > limit:
                raise ValueError(f"product index {k} exceeds limit {limit}")
            out[k] = out.get(k, 0) + a * b
    return DirichletPolynomial(out)


def power(f: DirichletPolynomial, k: int, limit: int | None = None) -> DirichletPolynomial:
    """k-th convolution power, k a positive integer."""
    if k < 1:
        raise ValueError("exponent must be a positive integer")
    out = f
    for _ in range(k - 1):
        out = multiply(out, f, limit=limit)
    return out


def partial_sum(f: DirichletPolynomial, N: int) -> DirichletPolynomial:
    """Keep exactly the coefficients with index <= N."""
    return DirichletPolynomial({n: c for n, c in f if n <= N})


def evaluate_halfplane(f: DirichletPolynomial, s: complex) -> complex:
    return f.evaluate(s)


class MultivariatePolynomial:
    """Sparse polynomial sum c_kappa z^kappa over finitely many variables.

    Keys are exponent tuples with trailing zeros trimmed, so the constant
    term has key ().
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], complex] | Iterable[tuple[Sequence[int], complex]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[tuple[int, ...], complex] = {}
        for key, c in items:
            key = _trim(tuple(int(e) for e in key))
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {key}")
            c = complex(c)
            if c != 0:
                out[key] = out.get(key, 0) + c
                if out[key] == 0:
                    del out[key]
        self._terms = dict(sorted(out.items()))

    @property
    def terms(self) -> dict[tuple[int, ...], complex]:
        return dict(self._terms)

    @property
    def dimension(self) -> int:
        """Number of variables actually used."""
        return max((len(k) for k in self._terms), default=0)

    def degrees(self) -> list[int]:
        """Maximal exponent per variable, length = dimension."""
        d = [0] * self.dimension
        for key in self._terms:
            for j, e in enumerate(key):
                d[j] = max(d[j], e)
        return d

    def __getitem__(self, key: Sequence[int]) -> complex:
        return self._terms.get(_trim(tuple(key)), 0j)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other):
        return isinstance(other, MultivariatePolynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        entries = ", ".join(f"{k}: {c:.6g}" for k, c in list(self._terms.items())[:6])
        more = ", ..." if len(self._terms) > 6 else ""
        return f"MultivariatePolynomial({{{entries}{more}}})"

    def __add__(self, other: "MultivariatePolynomial") -> "MultivariatePolynomial":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return MultivariatePolynomial(out)

    def __rmul__(self, scalar: complex) -> "MultivariatePolynomial":
        return MultivariatePolynomial({k: scalar * c for k, c in self._terms.items()})

    def __mul__(self, other) -> "MultivariatePolynomial":
        if not isinstance(other, MultivariatePolynomial):
            return other * self
        out: dict[tuple[int, ...], complex] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = _add_keys(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2
        return MultivariatePolynomial(out)

    def evaluate(self, z: Sequence[complex]) -> complex:
        """Exact sum of c_kappa * prod z_j^kappa_j; z must cover all variables."""
        if len(z) < self.dimension:
            raise ValueError(f"need {self.dimension} coordinates, got {len(z)}")
        total = 0j
        for key, c in self._terms.items():
            term = c
            for j, e in enumerate(key):
                if e:
                    term *= z[j] ** e
            total += term
        return total

    def coefficient_array(self) -> np.ndarray:
        """Dense coefficient tensor of shape (deg_1+1, ..., deg_m+1)."""
        degs = self.degrees()
        arr = np.zeros([d + 1 for d in degs] or [1], dtype=complex)
        for key, c in self._terms.items():
            idx = tuple(key) + (0,) * (len(degs) - len(key))
            arr[idx] = c
        return arr


def _trim(key: tuple[int, ...]) -> tuple[int, ...]:
    while key and key[-1] == 0:
        key = key[:-1]
    return key


def _add_keys(k1: tuple[int, ...], k2: tuple[int, ...]) -> tuple[int, ...]:
    if len(k1) < len(k2):
        k1, k2 = k2, k1
    return _trim(tuple(a + (k2[i] if i < len(k2) else 0) for i, a in enumerate(k1)))


def multi_index(n: int, table: FactorizationTable | None = None) -> tuple[int, ...]:
    """Exponent vector kappa(n) over the prime sequence, trailing zeros trimmed."""
    table = table or default_table(n)
    if n == 1:
        return ()
    facts = table.factorize(n)
    last = table.prime_index(facts[-1][0])
    key = [0] * (last + 1)
    for p, e in facts:
        key[table.prime_index(p)] = e
    return tuple(key)


def index_of_multi_index(key: Sequence[int], table: FactorizationTable | None = None) -> int:
    """Inverse of multi_index: the integer with the given exponent vector."""
    table = table or default_table(2)
    key = tuple(key)
    while len(table.primes) < len(key):
        table = default_table(table.limit * 4)
    n = 1
    for j, e in enumerate(key):
        n *= int(table.primes[j]) ** int(e)
    return n


def bohr_lift(f: DirichletPolynomial, table: FactorizationTable | None = None) -> MultivariatePolynomial:
    """Substitute p_j^{-s} -> z_j; the coefficient of z^kappa(n) is a_n."""
    table = table or default_table(max(f.length, 2))
    if f.length > table.limit:
        raise ValueError(f"index {f.length} beyond sieve limit {table.limit}")
    return MultivariatePolynomial({multi_index(n, table): c for n, c in f})


def bohr_unlift(F: MultivariatePolynomial, table: FactorizationTable | None = None) -> DirichletPolynomial:
    """Inverse Bohr lift; exact on any finite multivariate polynomial."""
    return DirichletPolynomial({index_of_multi_index(k, table): c for k, c in F})


def abschnitt(F: MultivariatePolynomial, m: int) -> MultivariatePolynomial:
    """Restriction to the first m variables: set z_{m+1} = z_{m+2} = ... = 0."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return MultivariatePolynomial({k: c for k, c in F if len(k) <= m})


def series_pow(coeffs: Sequence[complex], exponent: float, degree: int) -> list[complex]:
    """Power series (sum a_k x^k)^exponent truncated at the given degree.

    Requires a nonzero constant term.  Uses the standard recurrence
    n a_0 b_n = sum_{k=1..n} (k(e+1) - n) a_k b_{n-k}.
    """
    a = list(coeffs) + [0] * max(0, degree + 1 - len(coeffs))
    a = a[: degree + 1]
    if a[0] == 0:
        raise ValueError("series_pow needs a nonzero constant term")
    if float(exponent).is_integer() and exponent >= 1 and a[0] == 1:
        pass  # recurrence handles this case exactly as well
    b = [complex(a[0]) ** exponent] + [0j] * degree
    for n in range(1, degree + 1):
        acc = 0j
        for k in range(1, n + 1):
            acc += (k * (exponent + 1) - n) * a[k] * b[n - k]
        b[n] = acc / (n * a[0])
    return b


def euler_product_power(
    prime_limit: int,
    local_factor,
    exponent: float = 1.0,
    degree: int = 2,
    support_limit: int | None = None,
    table: FactorizationTable | None = None,
) -> DirichletPolynomial:
    """Coefficients of prod_{p <= prime_limit} g_p(p^{-s})^exponent.

    ``local_factor(p)`` returns the power series coefficients of g_p in the
    variable x = p^{-s}; each factor is raised to ``exponent`` and truncated
    at ``degree``, then the factors are combined by Dirichlet convolution.
    ``support_limit`` drops product indices beyond the bound (None keeps all).
    """
    table = table or default_table(max(prime_limit, 2))
    primes = [int(p) for p in table.primes if p <= prime_limit]
    result = DirichletPolynomial({1: 1.0})
    for p in primes:
        base = [complex(c) for c in local_factor(p)]
        powered = series_pow(base, exponent, degree)
        factor = DirichletPolynomial({p**k: c for k, c in enumerate(powered) if c != 0})
        result = multiply(result, factor)
        if support_limit is not None:
            result = partial_sum(result, support_limit)
    return result
