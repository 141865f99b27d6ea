"""Sieve-backed multiplicative number theory.

Everything here is driven by a smallest-prime-factor sieve, so that any
multiplicative function of n evaluates in O(number of prime factors) after
one O(N log log N) setup pass.  Weight functions follow the generalized
divisor function d_alpha (coefficients of zeta^alpha) and its completely
multiplicative interpolation phi_alpha.
"""

from __future__ import annotations

import math
import os
from functools import lru_cache

import numpy as np

DEFAULT_SIEVE_LIMIT = 1 << 24
SIEVE_LIMIT_ENV = "HD_SIEVE_LIMIT"


class FactorizationTable:
    """Smallest-prime-factor table for all integers up to ``limit``.

    Read-only after construction; safe to share across threads.
    """

    def __init__(self, limit: int):
        if limit < 2:
            raise ValueError("sieve limit must be at least 2")
        self.limit = int(limit)
        self.smallest_prime_factor = _spf_sieve(self.limit)
        spf = self.smallest_prime_factor
        idx = np.arange(self.limit + 1, dtype=spf.dtype)
        self.primes = np.nonzero((spf == idx) & (idx >= 2))[0]

    def __repr__(self):
        return f"FactorizationTable(limit={self.limit})"

    def _check(self, n: int) -> int:
        n = int(n)
        if n < 1 or n > self.limit:
            raise ValueError(f"n={n} outside table range [1, {self.limit}]")
        return n

    def factorize(self, n: int) -> list[tuple[int, int]]:
        """Prime factorization of n as [(p, e), ...] with p strictly increasing."""
        n = self._check(n)
        out = []
        spf = self.smallest_prime_factor
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out

    def big_omega(self, n: int) -> int:
        """Number of prime factors of n counted with multiplicity."""
        n = self._check(n)
        spf = self.smallest_prime_factor
        count = 0
        while n > 1:
            n //= int(spf[n])
            count += 1
        return count

    def small_omega(self, n: int) -> int:
        """Number of distinct prime factors of n."""
        return len(self.factorize(n))

    def moebius(self, n: int) -> int:
        """Moebius function: 1 at n=1, (-1)^Omega(n) on square-free n, else 0."""
        n = self._check(n)
        spf = self.smallest_prime_factor
        count = 0
        while n > 1:
            p = int(spf[n])
            n //= p
            if n % p == 0:
                return 0
            count += 1
        return -1 if count % 2 else 1

    def is_squarefree(self, n: int) -> bool:
        return self.moebius(n) != 0

    def prime_index(self, p: int) -> int:
        """0-based position of the prime p in the increasing prime sequence."""
        i = int(np.searchsorted(self.primes, p))
        if i >= len(self.primes) or self.primes[i] != p:
            raise ValueError(f"{p} is not a prime in the table")
        return i


def _spf_sieve(limit: int) -> np.ndarray:
    """Vectorized smallest-prime-factor sieve; spf[p] = p at primes, spf[1] = 1."""
    dtype = np.int32 if limit < 2**31 - 1 else np.int64
    spf = np.zeros(limit + 1, dtype=dtype)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            view = spf[p * p :: p]
            view[view == 0] = p
    unset = spf == 0
    spf[unset] = np.arange(limit + 1, dtype=dtype)[unset]
    spf[0] = 0
    if limit >= 1:
        spf[1] = 1
    return spf


_default_table: FactorizationTable | None = None


def default_table(min_limit: int = 2) -> FactorizationTable:
    """Shared table, built lazily; HD_SIEVE_LIMIT overrides the default size.

    Grows (by rebuild) if a caller needs indices beyond the current limit.
    """
    global _default_table
    if _default_table is None or _default_table.limit < min_limit:
        env = os.environ.get(SIEVE_LIMIT_ENV)
        limit = int(env) if env else DEFAULT_SIEVE_LIMIT
        _default_table = FactorizationTable(max(limit, min_limit))
    return _default_table


def factorize(n: int, table: FactorizationTable | None = None) -> list[tuple[int, int]]:
    table = table or default_table(n)
    return table.factorize(n)


def big_omega(n: int, table: FactorizationTable | None = None) -> int:
    table = table or default_table(n)
    return table.big_omega(n)


def small_omega(n: int, table: FactorizationTable | None = None) -> int:
    table = table or default_table(n)
    return table.small_omega(n)


def moebius(n: int, table: FactorizationTable | None = None) -> int:
    table = table or default_table(n)
    return table.moebius(n)


def primorial(k: int) -> int:
    """Product of the first k primes."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    table = default_table(100)
    while len(table.primes) < k:
        table = default_table(table.limit * 4)
    out = 1
    for p in table.primes[:k]:
        out *= int(p)
    return out


@lru_cache(maxsize=None)
def _log_binom_prime_power(e: int, alpha: float) -> float:
    """log of binom(e + alpha - 1, e), the d_alpha value at a prime power p^e."""
    return (
        math.lgamma(e + alpha)
        - math.lgamma(alpha)
        - math.lgamma(e + 1)
    )


def log_d_alpha(n: int, alpha: float, table: FactorizationTable | None = None) -> float:
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    table = table or default_table(n)
    return sum(_log_binom_prime_power(e, alpha) for _, e in table.factorize(n))


def d_alpha(n: int, alpha: float, table: FactorizationTable | None = None) -> float:
    """Generalized divisor function: multiplicative, binom(e+alpha-1, e) at p^e.

    Accumulated in log space so large-Omega arguments do not overflow.
    """
    return math.exp(log_d_alpha(n, alpha, table))


def log_phi_alpha(n: int, alpha: float, table: FactorizationTable | None = None) -> float:
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    table = table or default_table(n)
    fl = math.floor(alpha)
    facts = table.factorize(n)
    log_d = sum(_log_binom_prime_power(e, fl) for _, e in facts)
    omega_big = sum(e for _, e in facts)
    return log_d + omega_big * (math.log(alpha) - math.log(fl))


def phi_alpha(n: int, alpha: float, table: FactorizationTable | None = None) -> float:
    """Completely multiplicative interpolation d_floor(alpha)(n) * (alpha/floor(alpha))^Omega(n)."""
    return math.exp(log_phi_alpha(n, alpha, table))


WEIGHT_KINDS = ("d", "phi", "mu_d")


def weight_array(x: int, alpha: float, kind: str = "d") -> np.ndarray:
    """Values w(1..x) of the selected weight, computed by sieving log-increments.

    kind "d" gives d_alpha, "phi" gives phi_alpha, and "mu_d" gives the
    square-free restriction |mu(n)| d_alpha(n) = |mu(n)| alpha^Omega(n).
    Index 0 of the returned array is unused (set to 0).
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    if kind not in WEIGHT_KINDS:
        raise ValueError(f"kind must be one of {WEIGHT_KINDS}")
    x = int(x)
    if x < 1:
        raise ValueError("x must be >= 1")
    primes = FactorizationTable(max(x, 2)).primes if x > 2 else np.array([2])
    primes = primes[primes <= x]
    logw = np.zeros(x + 1)

    if kind == "mu_d":
        la = math.log(alpha)
        for p in primes:
            logw[p::p] += la
        squarefree = np.ones(x + 1, dtype=bool)
        for p in primes:
            if p * p > x:
                break
            squarefree[p * p :: p * p] = False
        w = np.exp(logw)
        w[~squarefree] = 0.0
        w[0] = 0.0
        return w

    base = math.floor(alpha) if kind == "phi" else alpha
    for p in primes:
        q = int(p)
        e = 1
        while q <= x:
            # adding the increment at every multiple of p^e accumulates
            # log binom(v_p(n)+base-1, v_p(n)) for the true valuation v_p(n)
            delta = _log_binom_prime_power(e, base) - _log_binom_prime_power(e - 1, base)
            logw[q::q] += delta
            e += 1
            if q > x // p:
                break
            q *= p
    if kind == "phi":
        ratio = math.log(alpha) - math.log(math.floor(alpha))
        if ratio != 0.0:
            for p in primes:
                q = int(p)
                while q <= x:
                    logw[q::q] += ratio
                    if q > x // p:
                        break
                    q *= p
    w = np.exp(logw)
    w[0] = 0.0
    return w


def weight_partial_sum(x: float, alpha: float, kind: str = "d") -> float:
    """Compensated sum of w(n)/n for n <= x, w selected by ``kind``."""
    if x < 1:
        raise ValueError("x must be >= 1")
    xi = int(math.floor(x))
    w = weight_array(xi, alpha, kind)
    terms = w[1:] / np.arange(1, xi + 1, dtype=float)
    return float(math.fsum(terms.tolist()))


def max_divisor_statistic(limit: int, table: FactorizationTable | None = None) -> float:
    """max over n <= limit of log d(n), normalized by log(limit)/loglog(limit).

    The normalized quantity tends to log 2 along the maximal order of the
    divisor function; at desk scale it is reported as a measurement only.
    """
    if limit < 3:
        raise ValueError("limit must be >= 3")
    w = weight_array(limit, 2.0, "d")
    max_log_d = float(np.max(np.log(w[2:])))
    return max_log_d * math.log(math.log(limit)) / math.log(limit)
