"""The partial sum operator and its empirical operator-norm experiments.

Cutting a Dirichlet series at index N is an orthogonal projection for p = 2
but not for other exponents; the experiments here measure ratios
||S_N f|| / ||f|| for structured extremal products, vertically translated
shifts of them, and random draws, and report the best observed ratio as a
certified lower bound on the operator norm.  Dilation-based auxiliary
checks (the contractive dilation inequality and the two-point dilation
comparison for polynomials on the disc) share the same quadrature backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._util import spawn_rng
from .arithmetic import FactorizationTable, default_table, primorial
from .extremals import c1_closed_form
from .norms import QuadratureSpec, disc_norm, norm_l2, norm_qmc
from .series import (
    DirichletPolynomial,
    bohr_lift,
    euler_product_power,
    multiply,
    partial_sum,
)


@dataclass(frozen=True)
class PartialSumExperiment:
    """One measured ratio ||S_N f||_p / ||f||_p with its estimator error."""

    N: int
    p: float
    family: str
    construction: str
    ratio: float
    error: float
    trial: int = 0
    extra: dict = field(default_factory=dict)

    def csv_row(self) -> str:
        return (f"{self.N},{self.p!r},{self.family},{self.construction},"
                f"{self.ratio!r},{self.error!r},{self.trial}")


CSV_HEADER = "N,p,family,construction,ratio,error,trial"


def extremal_fM(k: int, p: float, degree: int | None = None,
                table: FactorizationTable | None = None) -> DirichletPolynomial:
    """Product of first-coefficient extremals in the first k prime variables.

    Each factor is (sqrt(1-p/2) + q^{-s} sqrt(p/2))^(2/p); the product has
    unit quasi-norm and its coefficient at the k-th primorial M equals
    C(1,p)^k.  2/p must be an integer unless a truncation degree is given.
    """
    if not 0 < p < 2:
        raise ValueError("the construction lives in 0 < p < 2")
    e = 2.0 / p
    if degree is None:
        if not float(e).is_integer():
            raise ValueError("need a truncation degree when 2/p is not an integer")
        degree = int(e)
    if k < 1:
        raise ValueError("k must be >= 1")
    table = table or default_table(1000)
    P = int(table.primes[k - 1])
    a = math.sqrt(1.0 - p / 2.0)
    b = math.sqrt(p / 2.0)
    return euler_product_power(P, lambda q: [a, b], e, degree, table=table)


def lower_bound_bigN(k: int, p: float, spec: QuadratureSpec | None = None,
                     table: FactorizationTable | None = None) -> dict:
    """Two-truncation lower bound at the k-th primorial M.

    Computes ||S_{M-1} f_M||_p and ||S_M f_M||_p by quadrature; the
    quasi-triangle inequality forces their max to be at least
    2^{-1/p} C(1,p)^k, which is returned as the target.
    """
    spec = spec or QuadratureSpec(scheme="randomized_lattice")
    table = table or default_table(10**6)
    M = primorial(k)
    f = extremal_fM(k, p, table=table)
    left = norm_qmc(partial_sum(f, M - 1), p, spec)
    right = norm_qmc(partial_sum(f, M), p, spec)
    target = 2.0 ** (-1.0 / p) * c1_closed_form(p) ** k
    best = max(left.value, right.value)
    err = max(left.error, right.error)
    return {
        "k": k, "p": p, "M": M,
        "norm_SM_minus_1": left.value, "error_SM_minus_1": left.error,
        "norm_SM": right.value, "error_SM": right.error,
        "best": best, "error": err,
        "target": target,
        "meets_target": best >= target - err,
        "coefficient_at_M": abs(f[M]),
    }


def shift_indices(f: DirichletPolynomial, m: int) -> DirichletPolynomial:
    """Vertical translation m^{-s} f: every index is multiplied by m."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    return DirichletPolynomial({m * n: c for n, c in f})


def shifted_gN_certificate(N: int) -> dict:
    """Integer arithmetic behind the shifted construction at cutoff N.

    J is the largest j with N/n_j >= n_j + 1 over primorials n_j; the two
    candidate shifts are x = floor(N/n_J) (case 1, certificate
    x (n_J + 1) > N) and x = ceil(N/n_J) (case 2, certificate
    x (n_J - 1) < N).  Both certificates are checked exactly.
    """
    if N < 6:
        raise ValueError("N must be at least 6 for the construction")
    n = 2
    j = 1
    table = default_table(1000)
    while True:
        nxt = n * int(table.primes[j])
        if N // nxt >= nxt + 1:
            n, j = nxt, j + 1
        else:
            break
    n_J, J = n, j
    x1 = N // n_J
    x2 = -(-N // n_J)
    return {
        "N": N, "J": J, "n_J": n_J,
        "x_case1": x1, "x_case2": x2,
        "case1_certificate": x1 * (n_J + 1) > N,
        "case1_keeps_target": x1 * n_J <= N,
        "case2_certificate": x2 * (n_J - 1) < N,
        "case2_drops_target": x2 * n_J > N,
    }


def shifted_gN(N: int, p: float, spec: QuadratureSpec | None = None,
               table: FactorizationTable | None = None) -> tuple[DirichletPolynomial, dict]:
    """Vertically shifted extremal adapted to an arbitrary cutoff N.

    Builds f at the primorial n_J picked by the certificate arithmetic,
    compares its two truncation quasi-norms, shifts by the matching x so
    that S_N picks out exactly the large truncation, and verifies the
    claimed identity coefficient-by-coefficient.
    """
    cert = shifted_gN_certificate(N)
    n_J, J = cert["n_J"], cert["J"]
    spec = spec or QuadratureSpec(scheme="randomized_lattice")
    table = table or default_table(10**6)
    f = extremal_fM(J, p, table=table)
    norm_full = norm_qmc(f, p, spec)
    upper = norm_qmc(partial_sum(f, n_J), p, spec)
    lower = norm_qmc(partial_sum(f, n_J - 1), p, spec)
    case = 1 if upper.value >= lower.value else 2
    if case == 2 and not cert["case2_drops_target"]:
        # n_J divides N: both shifts coincide and the cutoff keeps the
        # primorial term, so only the case-1 identity can hold
        case = 1
    x = cert["x_case1"] if case == 1 else cert["x_case2"]
    g = shift_indices(f, x)
    kept = n_J if case == 1 else n_J - 1
    kept_norm = upper if case == 1 else lower
    target = shift_indices(partial_sum(f, kept), x)
    identity_holds = partial_sum(g, N) == target
    cert.update({
        "case": case, "x": x,
        "norm_f": norm_full.value,
        "norm_S_nJ": upper.value, "norm_S_nJ_minus_1": lower.value,
        "identity_holds": identity_holds,
        "ratio": kept_norm.value / norm_full.value,
        "error": max(kept_norm.error, norm_full.error),
    })
    return g, cert


def random_dirichlet(length: int, rng: np.random.Generator,
                     prime_count: int = 3,
                     table: FactorizationTable | None = None) -> DirichletPolynomial:
    """Unit-l2 polynomial with iid complex Gaussian coefficients.

    Support restricted to indices composed of the first ``prime_count``
    primes so the Bohr lift stays low-dimensional for quadrature.
    """
    table = table or default_table(max(length, 2))
    allowed = [int(q) for q in table.primes[:prime_count]]
    support = [n for n in range(1, length + 1)
               if all(q in allowed for q, _ in table.factorize(n))]
    c = rng.standard_normal(len(support)) + 1j * rng.standard_normal(len(support))
    c /= np.linalg.norm(c)
    return DirichletPolynomial(dict(zip(support, c)))


def operator_norm_scan(p: float, N_list, family: str = "extremal_fM",
                       trials: int = 10, seed: int = 0,
                       spec: QuadratureSpec | None = None,
                       polynomials=None) -> list[PartialSumExperiment]:
    """Best observed ||S_N f||_p / ||f||_p per cutoff for the chosen family.

    Families: "extremal_fM" (cutoffs are treated as primorial indices k),
    "shifted_gN" (arbitrary cutoffs), "random" (seeded Gaussian draws), and
    "user" (explicit polynomials).  Ratios are certified lower bounds on
    the operator norm, never upper estimates.
    """
    spec = spec or QuadratureSpec(scheme="randomized_lattice")
    out: list[PartialSumExperiment] = []
    if family == "extremal_fM":
        for k in N_list:
            res = lower_bound_bigN(int(k), p, spec=spec)
            out.append(PartialSumExperiment(
                N=res["M"], p=p, family=family, construction="extremal_fM",
                ratio=res["best"], error=res["error"],
                extra={"k": int(k), "target": res["target"],
                       "meets_target": res["meets_target"]},
            ))
    elif family == "shifted_gN":
        for N in N_list:
            _, cert = shifted_gN(int(N), p, spec=spec)
            out.append(PartialSumExperiment(
                N=int(N), p=p, family=family,
                construction=f"shifted_case{cert['case']}",
                ratio=cert["ratio"], error=cert["error"],
                extra={"n_J": cert["n_J"], "x": cert["x"],
                       "identity_holds": cert["identity_holds"]},
            ))
    elif family == "random":
        for N in N_list:
            # any polynomial supported below the cutoff certifies ratio 1
            best = PartialSumExperiment(
                N=int(N), p=p, family=family, construction="truncated_support",
                ratio=1.0, error=0.0, trial=-1)
            for t in range(trials):
                rng = spawn_rng(seed, int(N), t)
                f = random_dirichlet(2 * int(N), rng)
                denom = norm_qmc(f, p, spec)
                numer = norm_qmc(partial_sum(f, int(N)), p, spec)
                ratio = numer.value / denom.value if denom.value > 0 else 0.0
                err = numer.error + denom.error
                if ratio > best.ratio:
                    best = PartialSumExperiment(
                        N=int(N), p=p, family=family, construction="random",
                        ratio=ratio, error=err, trial=t)
            out.append(best)
    elif family == "user":
        if not polynomials:
            raise ValueError("family 'user' needs polynomials")
        for N in N_list:
            for t, f in enumerate(polynomials):
                denom = norm_qmc(f, p, spec)
                numer = norm_qmc(partial_sum(f, int(N)), p, spec)
                out.append(PartialSumExperiment(
                    N=int(N), p=p, family=family, construction="user",
                    ratio=numer.value / denom.value, error=numer.error + denom.error,
                    trial=t))
    else:
        raise ValueError(f"unknown family {family!r}")
    return out


def helson_probe(N: int, p_list, trials: int = 20, seed: int = 0,
                 spec: QuadratureSpec | None = None) -> list[dict]:
    """Record (1-p)-scaled partial-sum ratios against the H^1 norm.

    For p below 1 the truncation norm admits a bound A/(1-p) times the H^1
    norm; the probe stores the empirical maximum of
    ||S_N f||_p (1-p) / ||f||_1 per p as data, asserting nothing about A.
    """
    spec = spec or QuadratureSpec(scheme="randomized_lattice")
    rows = []
    for p in p_list:
        if not 0 < p < 1:
            raise ValueError("the probe applies to 0 < p < 1")
        worst = 0.0
        for t in range(trials):
            rng = spawn_rng(seed, int(100 * p), t)
            f = random_dirichlet(2 * N, rng)
            denom = norm_qmc(f, 1.0, spec)
            numer = norm_qmc(partial_sum(f, N), p, spec)
            if denom.value > 0:
                worst = max(worst, numer.value * (1.0 - p) / denom.value)
        rows.append({"N": N, "p": p, "scaled_max": worst, "trials": trials})
    return rows


def dilate(coefficients, r: float) -> np.ndarray:
    """Coefficients of f(rz): the j-th coefficient is scaled by r^j."""
    c = np.asarray(coefficients, dtype=complex)
    return c * (float(r) ** np.arange(len(c)))


def weissler_check(coefficients, p: float, q: float, r: float,
                   points: int = 4096, rtol: float = 1e-7) -> dict:
    """Compare ||f_r||_{H^q} against ||f||_{H^p} for the dilation f_r.

    The contraction holds for every f exactly when r <= sqrt(p/q); the
    check reports both sides, computed by circle quadrature, and whether
    the inequality holds within the relative tolerance.
    """
    if q < p:
        raise ValueError("need q >= p")
    if not 0.0 <= r <= 1.0:
        raise ValueError("r must lie in [0, 1]")
    c = np.asarray(coefficients, dtype=complex)
    lhs = disc_norm(dilate(c, r), q, points)
    rhs = disc_norm(c, p, points)
    return {
        "lhs": lhs, "rhs": rhs, "r": r, "p": p, "q": q,
        "critical_r": math.sqrt(p / q),
        "holds": lhs <= rhs * (1.0 + rtol) + 1e-15,
    }


def weissler_violation_search(p: float, q: float, r: float, degree: int = 8,
                              samples: int = 200, seed: int = 0,
                              points: int = 4096) -> dict:
    """Search for a polynomial violating the dilation contraction at r.

    Sweeps the one-parameter family (1 + lam z)-type and truncated
    exponentials exp(lam z) where the contraction is tight, plus seeded
    random draws; a violation exists exactly when r > sqrt(p/q).
    """
    best = {"found": False, "margin": -math.inf, "coefficients": None}

    def consider(c):
        out = weissler_check(c, p, q, r, points)
        margin = out["lhs"] / out["rhs"] - 1.0
        if margin > best["margin"]:
            best.update(margin=margin, coefficients=np.asarray(c, dtype=complex),
                        found=margin > 1e-9)

    lams = np.linspace(0.05, 2.0, 40)
    for lam in lams:
        consider([1.0, lam])
        consider([lam**j / math.factorial(j) for j in range(degree + 1)])
    rng = spawn_rng(seed, 0)
    for _ in range(samples):
        c = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
        consider(c)
    return best


def bernstein_smallest_constant(coefficients, n: int, p: float,
                                points: int = 4096,
                                c_max: float = 1e6) -> float:
    """Smallest C with ||Q||_p^p <= 2 ||Q_r||_p^p at 1 - r = C^{-1/p}/n.

    ||Q_r||_p increases in r, so the condition is monotone in C and a
    bisection applies.  Returns infinity when even C = c_max fails and the
    lower feasibility bound n^{-p} when every C works (dilation-invariant
    polynomials such as constants).
    """
    c = np.asarray(coefficients, dtype=complex)
    lhs = disc_norm(c, p, points) ** p

    def satisfied(C: float) -> bool:
        rr = 1.0 - C ** (-1.0 / p) / n
        if rr <= 0.0:
            return False
        return lhs <= 2.0 * disc_norm(dilate(c, rr), p, points) ** p * (1 + 1e-12)

    lo = n ** (-p) * (1.0 + 1e-9)
    if satisfied(lo):
        return lo
    hi = max(2.0 * lo, 1.0)
    while not satisfied(hi):
        hi *= 2.0
        if hi > c_max:
            return math.inf
    while hi / lo > 1.0 + 1e-6:
        mid = math.sqrt(lo * hi)
        if satisfied(mid):
            hi = mid
        else:
            lo = mid
    return hi


def monomial_bernstein_constant(n: int, p: float) -> float:
    """Closed form of the smallest constant for Q = z^n.

    The condition r^{np} >= 1/2 solves to C = (n (1 - 2^{-1/(np)}))^{-p}.
    """
    return (n * (1.0 - 2.0 ** (-1.0 / (n * p)))) ** -p


def bernstein_constant_search(n_list, p_list, samples: int = 32, seed: int = 0,
                              points: int = 4096) -> list[dict]:
    """Empirical smallest uniform constant per (degree, exponent) cell.

    Monomials (closed form), truncated exponentials, and random draws are
    scanned; the reported value is the largest per-polynomial smallest
    constant, a lower estimate of the true absolute constant.
    """
    rows = []
    for n in n_list:
        for p in p_list:
            worst = monomial_bernstein_constant(n, p)
            worst_family = "monomial"
            candidates = []
            for lam in (0.5, 1.0, 2.0):
                candidates.append(("exp", [lam**j / math.factorial(j)
                                           for j in range(n + 1)]))
            rng = spawn_rng(seed, n, int(1000 * p))
            for t in range(samples):
                c = rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)
                candidates.append((f"random_{t}", c))
            for name, c in candidates:
                val = bernstein_smallest_constant(c, n, p, points)
                if val > worst:
                    worst, worst_family = val, name
            rows.append({"n": n, "p": p, "samples": samples,
                         "empirical_C": worst, "witness": worst_family,
                         "monomial_C": monomial_bernstein_constant(n, p)})
    return rows
