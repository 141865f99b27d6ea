"""Coefficient functionals on the disc and their multiplicative extension.

C(k, p) is the supremum of the k-th Taylor coefficient over the unit ball
of H^p(D).  The k = 1 case has a closed form with explicit extremal
families; k >= 2 is bracketed between a multi-start ascent oracle (lower
bound) and a one-dimensional minimization upper bound.  The Dirichlet-side
functional at index n multiplies the one-variable bounds over the prime
powers in n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._util import spawn_rng
from .arithmetic import FactorizationTable, default_table
from .norms import disc_norm, disc_norms_batch

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def c1_closed_form(p: float) -> float:
    """Largest first coefficient over the unit ball of H^p(D).

    1 for p >= 1, and sqrt(2/p) (1 - p/2)^(1/p - 1/2) for 0 < p < 1;
    the two branches agree at p = 1.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    if p >= 1:
        return 1.0
    return math.sqrt(2.0 / p) * (1.0 - p / 2.0) ** (1.0 / p - 0.5)


def extremal_c1(p: float, variant: str, a: float | None = None,
                degree: int = 40) -> np.ndarray:
    """Taylor coefficients of an extremal function for the first coefficient.

    variant "a": f(z) = z (p > 1).
    variant "b": f_a(z) = (a + sqrt(1-a^2) z)(sqrt(1-a^2) + a z), p = 1,
                 parameter 0 <= a <= 1.
    variant "c": (sqrt(1-p/2) + z sqrt(p/2))^(2/p) for 0 < p < 1; exact
                 binomial expansion when 2/p is an integer, else the series
                 truncated at ``degree``.
    """
    if variant == "a":
        return np.array([0.0, 1.0])
    if variant == "b":
        if a is None or not 0.0 <= a <= 1.0:
            raise ValueError("variant b needs a parameter a in [0, 1]")
        b = math.sqrt(1.0 - a * a)
        return np.array([a * b, 1.0, a * b])
    if variant == "c":
        if not 0 < p < 1:
            raise ValueError("variant c is the 0 < p < 1 family")
        alpha = math.sqrt(1.0 - p / 2.0)
        beta = math.sqrt(p / 2.0)
        e = 2.0 / p
        if float(e).is_integer():
            m = int(e)
            return np.array(
                [math.comb(m, j) * alpha ** (m - j) * beta**j for j in range(m + 1)]
            )
        coeffs = [alpha**e]
        binom = 1.0
        for j in range(1, degree + 1):
            binom *= (e - (j - 1)) / j
            coeffs.append(binom * alpha ** (e - j) * beta**j)
        return np.array(coeffs)
    raise ValueError(f"unknown variant {variant!r}")


def _lemma_objective_log(x: float, k: int, p: float) -> float:
    return -0.5 * k * math.log(x) + (1.0 / x - 1.0 / p) * math.log1p(-x)


def ck_upper_lemma(k: int, p: float, grid: int = 512, tol: float = 1e-12) -> float:
    """Upper bound min over x in [p, 1) of x^{-k/2} (1-x)^{1/x - 1/p}.

    Coarse grid scan to bracket the leftmost global minimum of the
    log-objective, then golden-section refinement.
    """
    if not 0 < p < 1:
        raise ValueError("the bound applies for 0 < p < 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    lo, hi = p, 1.0 - 1e-12
    xs = np.linspace(lo, hi, grid)
    vals = [_lemma_objective_log(x, k, p) for x in xs]
    i = int(np.argmin(vals))  # argmin takes the first (leftmost) minimizer
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, grid - 1)]
    # golden-section on [a, b]
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc, fd = _lemma_objective_log(c, k, p), _lemma_objective_log(d, k, p)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = _lemma_objective_log(c, k, p)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = _lemma_objective_log(d, k, p)
    x = 0.5 * (a + b)
    return math.exp(_lemma_objective_log(x, k, p))


def ck_upper_endpoints(k: int, p: float) -> dict[str, float]:
    """The two plug-in evaluations of the upper-bound objective.

    'at_p' is the left endpoint x = p (value p^{-k/2}); 'at_big' is
    x = 1 - (1-p)/k, the choice suited to large exponents.
    """
    if not 0 < p < 1:
        raise ValueError("the bound applies for 0 < p < 1")
    at_p = math.exp(_lemma_objective_log(p, k, p))
    x_big = 1.0 - (1.0 - p) / k
    at_big = math.exp(_lemma_objective_log(x_big, k, p)) if x_big < 1 else at_p
    return {"at_p": at_p, "at_big": at_big}


def _gauge(c: np.ndarray, k: int) -> np.ndarray:
    """Rotate phases so that c_0 >= 0 and c_k >= 0 are real."""
    out = c.copy()
    if k > 0 and out[k] != 0:
        theta2 = -np.angle(out[k]) / k if out[0] == 0 else (
            (np.angle(out[0]) - np.angle(out[k])) / k
        )
        out *= np.exp(1j * theta2 * np.arange(len(out)))
    if out[0] != 0:
        out *= np.exp(-1j * np.angle(out[0]))
    elif k > 0 and out[k] != 0:
        out *= np.exp(-1j * np.angle(out[k]))
    return out


def _ascend(c: np.ndarray, k: int, p: float, points: int,
            rel_tol: float = 1e-8, min_step: float = 1e-7,
            max_moves_per_level: int = 60) -> float:
    """Steepest coordinate ascent on |c_k| / ||f_c||_p with step halving.

    At each step size the best single-coordinate move is applied while it
    improves the ratio by more than ``rel_tol`` relatively (bounded number
    of moves per level); the step is then halved.  Near the optimum the
    gain per move scales like step^2, so min_step 1e-7 resolves the value
    far below the 1e-6 targets used by the callers.
    """
    c = _gauge(c.astype(complex), k)
    norm = disc_norm(c, p, points)
    value = abs(c[k]) / norm
    step = 0.25 * float(np.max(np.abs(c))) + 1e-3
    dim = len(c)
    eye = np.eye(dim)
    while step > min_step:
        for _ in range(max_moves_per_level):
            moves = np.concatenate([step * eye, -step * eye,
                                    1j * step * eye, -1j * step * eye])
            cand = c[None, :] + moves
            norms = disc_norms_batch(cand, p, points)
            ratios = np.abs(cand[:, k]) / norms
            j = int(np.argmax(ratios))
            if ratios[j] > value * (1.0 + rel_tol):
                c = _gauge(cand[j], k)
                value = ratios[j]
            else:
                break
        step *= 0.5
    return float(value)


def ck_oracle(k: int, p: float, degree: int | None = None, restarts: int = 32,
              seed: int = 0, points: int = 1024) -> float:
    """Lower bound for C(k, p) by multi-start projected coordinate ascent.

    Maximizes the k-th coefficient over polynomials of the given degree with
    unit quasi-norm (circle quadrature with ``points`` nodes).  Deterministic
    under a fixed seed: restart streams are spawned per index, and ties
    within 1e-12 resolve to the lowest restart index.
    """
    if degree is None:
        degree = max(k + 2, 6)
    if degree < k:
        raise ValueError(f"degree {degree} cannot carry coefficient {k}")
    if p <= 0:
        raise ValueError("p must be positive")
    best = -math.inf
    for r in range(restarts):
        rng = spawn_rng(seed, r)
        c = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
        # bias one start per batch of four toward the known extremal shape
        if r % 4 == 0 and 0 < p < 1:
            c = extremal_c1(p, "c", degree=degree)[: degree + 1].astype(complex)
            c = c + 0.05 * r / max(restarts, 1) * (
                rng.standard_normal(len(c)) + 1j * rng.standard_normal(len(c))
            )
            if len(c) < degree + 1:
                c = np.concatenate([c, np.zeros(degree + 1 - len(c), dtype=complex)])
        value = _ascend(c, k, p, points)
        if value > best + 1e-12:
            best = value
    return best


@dataclass(frozen=True)
class CoeffBound:
    """Two-sided bracket for C(k, p) with method tags per side."""

    k: int
    p: float
    lower: float
    upper: float
    lower_method: str
    upper_method: str

    def __post_init__(self):
        if self.lower > self.upper + 1e-9:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")


_coeff_bound_cache: dict[tuple, CoeffBound] = {}


def coeff_bound(k: int, p: float, degree: int | None = None, restarts: int = 8,
                seed: int = 0) -> CoeffBound:
    """Bracket for C(k, p): closed form at k <= 1 or p >= 1, oracle/lemma else."""
    key = (k, p, degree, restarts, seed)
    if key in _coeff_bound_cache:
        return _coeff_bound_cache[key]
    if k == 0:
        out = CoeffBound(0, p, 1.0, 1.0, "closed_form", "closed_form")
    elif p >= 1:
        out = CoeffBound(k, p, 1.0, 1.0, "closed_form", "closed_form")
    elif k == 1:
        v = c1_closed_form(p)
        out = CoeffBound(1, p, v, v, "closed_form", "closed_form")
    else:
        lower = ck_oracle(k, p, degree=degree, restarts=restarts, seed=seed)
        upper = ck_upper_lemma(k, p)
        lower = min(lower, upper)  # quadrature jitter must not break the bracket
        out = CoeffBound(k, p, lower, upper, "oracle", "lemma_min")
    _coeff_bound_cache[key] = out
    return out


def coeff_bound_table(k_max: int, p_list, restarts: int = 8,
                      seed: int = 0) -> list[CoeffBound]:
    """Brackets for every (k, p) cell with k from 0 to k_max."""
    return [coeff_bound(k, p, restarts=restarts, seed=seed)
            for p in p_list for k in range(0, k_max + 1)]


@dataclass(frozen=True)
class MultiplicativeBound:
    """Bracket for the Dirichlet coefficient functional at index n."""

    n: int
    p: float
    lower: float
    upper: float
    factors: tuple


def c_multiplicative(n: int, p: float, table: FactorizationTable | None = None,
                     restarts: int = 8, seed: int = 0) -> MultiplicativeBound:
    """Assemble the bound at n as the product of prime-power coefficient bounds."""
    table = table or default_table(max(n, 2))
    lower = upper = 1.0
    factors = []
    for prime, k in table.factorize(n):
        cb = coeff_bound(k, p, restarts=restarts, seed=seed)
        lower *= cb.lower
        upper *= cb.upper
        factors.append((prime, k, cb))
    return MultiplicativeBound(n=n, p=p, lower=lower, upper=upper, factors=tuple(factors))


def growth_statistic(n: int, log_c: float) -> float:
    """log C * loglog n / log n, the maximal-order normalization."""
    if n < 3:
        # loglog is negative or undefined below e; still defined for n = 2
        return log_c * math.log(math.log(n)) / math.log(n) if n > 1 else 0.0
    return log_c * math.log(math.log(n)) / math.log(n)


def growth_profile(p: float, kmax: int = 5, mode: str = "square_free_primorials",
                   restarts: int = 4, seed: int = 0) -> list[dict]:
    """Normalized growth of the coefficient functional along structured n.

    Mode "square_free_primorials" walks the primorials, where the bound is
    exactly C(1, p)^k.  Mode "all" runs a greedy search over smooth numbers,
    at each step appending the prime power that maximizes the gain of the
    certified lower bound per unit log n.
    """
    if mode not in ("square_free_primorials", "all"):
        raise ValueError(f"unknown mode {mode!r}")
    table = default_table(1000)
    rows = []
    if mode == "square_free_primorials":
        n = 1
        log_c1 = math.log(c1_closed_form(p))
        for k in range(1, kmax + 1):
            n *= int(table.primes[k - 1])
            log_c = k * log_c1
            rows.append({
                "mode": mode, "p": p, "k": k, "n": n,
                "log_c_lower": log_c, "log_c_upper": log_c,
                "statistic_lower": growth_statistic(n, log_c),
                "statistic_upper": growth_statistic(n, log_c),
            })
        return rows
    # greedy smooth-number walk using certified lower bounds
    exponents: dict[int, int] = {}
    log_n = 0.0
    log_lower = 0.0
    log_upper = 0.0
    for step in range(1, kmax + 1):
        candidates = []
        used = sorted(exponents)
        primes = [int(q) for q in table.primes[: len(used) + 1]]
        for q in primes:
            k_new = exponents.get(q, 0) + 1
            cb_new = coeff_bound(k_new, p, restarts=restarts, seed=seed)
            cb_old = coeff_bound(k_new - 1, p, restarts=restarts, seed=seed)
            gain = math.log(max(cb_new.lower, 1e-300)) - math.log(max(cb_old.lower, 1e-300))
            candidates.append((gain / math.log(q), q, k_new, cb_new, cb_old))
        candidates.sort(key=lambda t: (-t[0], t[1]))
        _, q, k_new, cb_new, cb_old = candidates[0]
        exponents[q] = k_new
        log_n += math.log(q)
        log_lower += math.log(cb_new.lower) - math.log(cb_old.lower)
        log_upper += math.log(cb_new.upper) - math.log(cb_old.upper)
        n = 1
        for q2, e in exponents.items():
            n *= q2**e
        rows.append({
            "mode": mode, "p": p, "k": step, "n": n,
            "log_c_lower": log_lower, "log_c_upper": log_upper,
            "statistic_lower": growth_statistic(n, log_lower),
            "statistic_upper": growth_statistic(n, log_upper),
        })
    return rows
