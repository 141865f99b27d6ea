"""Fractional-primitive functionals of the shifted zeta function.

The Dirichlet-side object has coefficients 1/(sqrt(n) (log n)^beta); its
pairing with a polynomial is an exact finite sum, and an equivalent integral
representation over the half-plane is used as an independent cross-check.
Membership and duality questions are probed at finite scale through
weighted partial sums and their growth across logarithmically dyadic
blocks, plus the disc-side analogue with Gamma-ratio coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.integrate import quad

from .arithmetic import FactorizationTable, default_table, weight_array
from .series import DirichletPolynomial

DECAY_THRESHOLD = 0.9


def log_star(n: int) -> float:
    """log n for n > 1 and 1 at n = 1, avoiding the singular reciprocal."""
    return math.log(n) if n > 1 else 1.0


@dataclass(frozen=True)
class PhiBetaTruncation:
    """Coefficients b_1 = 1, b_n = 1/(sqrt(n) (log n)^beta) for 2 <= n <= N."""

    beta: float
    N: int

    def __post_init__(self):
        if self.beta <= 0:
            raise ValueError("beta must be positive")
        if self.N < 1:
            raise ValueError("N must be >= 1")

    def coefficient(self, n: int) -> float:
        if n < 1 or n > self.N:
            return 0.0
        if n == 1:
            return 1.0
        return 1.0 / (math.sqrt(n) * math.log(n) ** self.beta)

    @cached_property
    def coefficients(self) -> np.ndarray:
        """Array indexed 1..N (slot 0 unused)."""
        n = np.arange(self.N + 1, dtype=float)
        out = np.zeros(self.N + 1)
        if self.N >= 1:
            out[1] = 1.0
        if self.N >= 2:
            out[2:] = 1.0 / (np.sqrt(n[2:]) * np.log(n[2:]) ** self.beta)
        return out

    def polynomial(self) -> DirichletPolynomial:
        return DirichletPolynomial({n: self.coefficient(n) for n in range(1, self.N + 1)})


@dataclass(frozen=True)
class PsiBetaTruncation:
    """Disc-side coefficients Gamma(j+1)/Gamma(j+1+beta) for 0 <= j <= J.

    beta = 0 is allowed as the degenerate endpoint (all coefficients 1).
    """

    beta: float
    J: int

    def __post_init__(self):
        if self.beta < 0:
            raise ValueError("beta must be nonnegative")
        if self.J < 0:
            raise ValueError("J must be >= 0")

    @cached_property
    def coefficients(self) -> np.ndarray:
        j = np.arange(self.J + 1, dtype=float)
        from scipy.special import gammaln

        return np.exp(gammaln(j + 1.0) - gammaln(j + 1.0 + self.beta))


def pair_h2(f: DirichletPolynomial, beta: float) -> complex:
    """a_1 + sum over n >= 2 of a_n / (sqrt(n) (log n)^beta); exact finite sum."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    total = 0j
    for n, c in f:
        if n == 1:
            total += c
        else:
            total += c / (math.sqrt(n) * math.log(n) ** beta)
    return total


def _log_dyadic_nodes(n_max: int, first_log2: float = 2.5) -> list[int]:
    """Cutoffs 2^(first_log2 * 2^j) up to n_max: dyadic in log n.

    The first node shrinks when n_max is small, so four nodes always fit;
    larger n_max pushes the blocks into the asymptotic regime.
    """
    first = min(first_log2, math.log2(n_max) / 8.0)
    if first < 1.0:
        raise ValueError(f"n_max={n_max} too small for four log-dyadic blocks")
    nodes = []
    L = first
    while 2.0**L <= n_max:
        nodes.append(int(round(2.0**L)))
        L *= 2.0
    return nodes


def _trend_from_increments(increments: list[float]) -> tuple[str, float]:
    """Label a positive series by the decay of consecutive block increments.

    Convergent-trend when the final block-to-block increment ratio is at
    most DECAY_THRESHOLD; the final ratio is the least contaminated by
    small-argument corrections and is returned as the score.
    """
    ratios = [increments[i + 1] / increments[i] for i in range(len(increments) - 1)]
    score = ratios[-1]
    label = "convergent" if score <= DECAY_THRESHOLD else "divergent"
    return label, score


def phi_membership_scan(p_list, beta_list, n_max: int = 1 << 22,
                        first_log2: float = 2.75) -> list[dict]:
    """Finite-scale membership probe for the fractional primitives.

    For each exponent p the majorant series sums Phi_{p/2}(n)/(n (log n)^{2 beta})
    and the square-free minorant sums |mu(n)| d_{p floor(p)/2}(n) /
    (n (log n)^{2 floor(p) beta}); both are accumulated to cutoffs that are
    dyadic in log n, and the decay of block increments classifies each
    (p, beta) cell.  The cell label follows the majorant; the minorant trend
    is reported alongside.
    """
    nodes = _log_dyadic_nodes(n_max, first_log2)
    ns = np.arange(n_max + 1, dtype=float)
    logn = np.ones(n_max + 1)
    logn[2:] = np.log(ns[2:])
    rows = []
    for p in p_list:
        if p < 2:
            raise ValueError("membership scan applies to p >= 2")
        maj_w = weight_array(n_max, p / 2.0, "phi")
        k = math.floor(p)
        min_w = weight_array(n_max, p * k / 2.0, "mu_d")
        maj_base = np.zeros(n_max + 1)
        min_base = np.zeros(n_max + 1)
        maj_base[2:] = maj_w[2:] / ns[2:]
        min_base[2:] = min_w[2:] / ns[2:]
        for beta in beta_list:
            maj_terms = maj_base[2:] * logn[2:] ** (-2.0 * beta)
            min_terms = min_base[2:] * logn[2:] ** (-2.0 * k * beta)
            maj_cum = np.cumsum(maj_terms)
            min_cum = np.cumsum(min_terms)
            maj_sums = [float(maj_cum[x - 2]) for x in nodes]
            min_sums = [float(min_cum[x - 2]) for x in nodes]
            maj_inc = [b - a for a, b in zip(maj_sums, maj_sums[1:])]
            min_inc = [b - a for a, b in zip(min_sums, min_sums[1:])]
            maj_label, maj_score = _trend_from_increments(maj_inc)
            min_label, min_score = _trend_from_increments(min_inc)
            rows.append({
                "p": float(p), "beta": float(beta), "n_max": n_max,
                "label": maj_label,
                "majorant_trend": maj_label, "majorant_decay": maj_score,
                "minorant_trend": min_label, "minorant_decay": min_score,
                "majorant_sums": maj_sums, "minorant_sums": min_sums,
            })
    return rows


def dual_test_function(p: float, N: int, degree: int = 2,
                       support_limit: int | None = None,
                       table: FactorizationTable | None = None) -> DirichletPolynomial:
    """Euler-product test function with coefficients d_{2/p}(n)/sqrt(n).

    The support is the set of integers up to ``support_limit`` (default N)
    all of whose prime factors are at most N with exponents at most
    ``degree``; on that set the coefficients agree with the untruncated
    product.
    """
    if not 0 < p <= 2:
        raise ValueError("the test function targets 0 < p <= 2")
    support_limit = N if support_limit is None else support_limit
    table = table or default_table(max(support_limit, 2))
    alpha = 2.0 / p
    coeffs = {1: 1.0}
    for n in range(2, support_limit + 1):
        facts = table.factorize(n)
        if facts[-1][0] > N or any(e > degree for _, e in facts):
            continue
        log_c = 0.0
        for q, e in facts:
            log_c += (
                math.lgamma(e + alpha) - math.lgamma(alpha) - math.lgamma(e + 1)
                - 0.5 * e * math.log(q)
            )
        coeffs[n] = math.exp(log_c)
    return DirichletPolynomial(coeffs)


def dual_test_norm(p: float, N: int, table: FactorizationTable | None = None) -> float:
    """Closed-form quasi-norm of the full product test function.

    The p-th power of the norm equals the squared l^2 norm of the
    half-shifted zeta Euler product over primes up to N, a Mertens-type
    product prod (1 - 1/q)^{-1}.
    """
    table = table or default_table(max(N, 2))
    log_sq = 0.0
    for q in table.primes[table.primes <= N]:
        log_sq += -math.log1p(-1.0 / float(q))
    return math.exp(log_sq / p)


def dual_pairing_integral(p: float, beta: float, N: int,
                          table: FactorizationTable | None = None,
                          x_cut: float = 60.0) -> float:
    """Exact pairing of the full Euler-product test function, by quadrature.

    The test function's pairing sum over its entire (infinite) smooth
    support equals a_1 plus the integral of (f(sigma) - a_1) against
    (sigma - 1/2)^{beta-1} / Gamma(beta), and on the half-line the product
    f(sigma) = prod_{q <= N} (1 - q^{-1/2-sigma})^{-2/p} evaluates in
    O(pi(N)) per node, so no coefficient expansion is needed.
    """
    table = table or default_table(max(N, 2))
    primes = table.primes[table.primes <= N].astype(float)

    def f_minus_1(x: float) -> float:
        log_f = -(2.0 / p) * float(np.sum(np.log1p(-primes ** (-1.0 - x))))
        return math.expm1(log_f)

    head = quad(f_minus_1, 0.0, 1.0, weight="alg", wvar=(beta - 1.0, 0.0),
                limit=200)[0]
    tail = quad(lambda x: f_minus_1(x) * x ** (beta - 1.0), 1.0, x_cut,
                limit=200)[0]
    return 1.0 + (head + tail) / math.gamma(beta)


def dual_ratio_scan(p: float, beta: float, N_list,
                    table: FactorizationTable | None = None) -> dict:
    """Pairing-to-norm ratios of the test functions against the functional.

    The pairing uses the integral representation of the full product test
    function and the norm its closed Mertens-type form.  Emits one row per
    cutoff N and a least-squares fit of log(ratio) against loglog N; the
    fitted slope estimates the duality growth exponent 1/p - beta.
    """
    N_list = sorted(int(N) for N in N_list)
    table = table or default_table(max(N_list))
    rows = []
    for N in N_list:
        pairing = dual_pairing_integral(p, beta, N, table=table)
        norm = dual_test_norm(p, N, table=table)
        ratio = pairing / norm
        rows.append({
            "p": p, "beta": beta, "N": N,
            "pairing": pairing, "norm": norm, "ratio": ratio,
            "log_ratio": math.log(ratio), "loglogN": math.log(math.log(N)),
        })
    x = np.array([r["loglogN"] for r in rows])
    y = np.array([r["log_ratio"] for r in rows])
    slope, intercept = np.polyfit(x, y, 1)
    for r in rows:
        r["slope"] = float(slope)
        r["intercept"] = float(intercept)
    return {"rows": rows, "slope": float(slope), "intercept": float(intercept)}


def psi_beta_criteria(p: float, beta: float, J: int = 1 << 14) -> dict:
    """Disc-side membership surrogate at the conjugate exponent.

    Evaluates the Hardy-Littlewood surrogate sums of the Gamma-ratio
    coefficients at q = p/(p-1) across dyadic cutoffs and classifies the
    trend; the threshold behavior tracks beta relative to 1/p.
    """
    if p <= 1:
        raise ValueError("the surrogate path needs p > 1; use the boundary "
                         "integral checks for p <= 1")
    q = p / (p - 1.0)
    psi = PsiBetaTruncation(beta, J).coefficients
    j = np.arange(1, J + 2, dtype=float)  # (j+1) for j = 0..J
    terms = j ** (q - 2.0) * psi**q
    cum = np.cumsum(terms)
    cutoffs = [2**e for e in range(4, int(math.log2(J)) + 1)]
    sums = [float(cum[c]) for c in cutoffs]
    inc = [b - a for a, b in zip(sums, sums[1:])]
    label, score = _trend_from_increments(inc)
    return {
        "p": p, "beta": beta, "q": q, "J": J,
        "label": label, "decay": score,
        "critical_beta": 1.0 / p,
        "surrogate_sums": sums,
    }


def l_beta_integral(coefficients, beta: float) -> complex:
    """Boundary integral int_0^1 f(r) (1-r)^{beta-1} dr / Gamma(beta).

    Exact term-by-term Beta integral: the monomial z^j contributes
    Gamma(j+1)/Gamma(j+1+beta) times its coefficient, so the value equals
    the coefficient pairing with the Gamma-ratio sequence.
    """
    if beta <= 0:
        raise ValueError("beta must be positive")
    c = np.asarray(coefficients, dtype=complex)
    psi = PsiBetaTruncation(beta, len(c) - 1).coefficients if len(c) else np.array([])
    return complex(np.sum(c * psi))


def halfplane_functional_check(f: DirichletPolynomial, beta: float,
                               rtol: float = 1e-8) -> dict:
    """Cross-check the coefficient pairing against its integral form.

    Numerically evaluates a_1 + int_{1/2}^inf (f(sigma) - a_1)
    (sigma - 1/2)^{beta-1} dsigma / Gamma(beta) with adaptive quadrature
    (algebraic endpoint weight on (0,1), plain on (1, inf)) and compares to
    the exact finite pairing sum.
    """
    if beta <= 0:
        raise ValueError("beta must be positive: the weight exponent "
                         f"beta - 1 = {beta - 1.0} is not integrable")
    a1 = f[1]
    tail = DirichletPolynomial({n: c for n, c in f if n > 1})

    def g(x: float) -> complex:
        return tail.evaluate(x + 0.5)

    def piece(func, weighted: bool):
        if weighted:
            re = quad(lambda x: func(x).real, 0.0, 1.0, weight="alg",
                      wvar=(beta - 1.0, 0.0), limit=200)[0]
            im = quad(lambda x: func(x).imag, 0.0, 1.0, weight="alg",
                      wvar=(beta - 1.0, 0.0), limit=200)[0]
        else:
            re = quad(lambda x: func(x).real * x ** (beta - 1.0), 1.0, np.inf,
                      limit=200)[0]
            im = quad(lambda x: func(x).imag * x ** (beta - 1.0), 1.0, np.inf,
                      limit=200)[0]
        return complex(re, im)

    integral = (piece(g, True) + piece(g, False)) / math.gamma(beta)
    value = a1 + integral
    pairing = pair_h2(f, beta)
    scale = max(abs(pairing), 1.0)
    return {
        "integral": value,
        "pairing": pairing,
        "agree": abs(value - pairing) <= rtol * scale,
        "abs_difference": abs(value - pairing),
    }


def halfshift_window_integral(f: DirichletPolynomial, p: float,
                              n_points: int = 4096) -> float:
    """|int_{1/2}^{3/2} f(sigma) (sigma - 1/2)^{1/p-1} dsigma| by graded mesh.

    The substitution u = (sigma - 1/2)^{1/p} flattens the endpoint weight
    exactly (singular at sigma = 1/2 for p > 1), leaving a uniform midpoint
    rule in u.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    exponent = 1.0 / p - 1.0
    if exponent <= -1.0:
        raise ValueError("nonintegrable endpoint singularity")
    du = 1.0 / n_points
    u = (np.arange(n_points) + 0.5) * du
    sigma = 0.5 + u ** p
    vals = np.zeros(len(sigma), dtype=complex)
    for n, c in f:
        vals += c * np.exp(-sigma * math.log(n)) if n > 1 else c
    total = p * du * np.sum(vals)
    return float(abs(total))
