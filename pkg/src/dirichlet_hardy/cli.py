"""Batch command-line front end.

Subcommands: ``norm`` (quasi-norm of a polynomial file), ``verify`` (named
invariant suites with a JSON report and meaningful exit code), ``scan``
(parameter sweeps written as CSV), and ``build`` (construct named
polynomials to files).  All randomness flows from a single --seed through
counter-based per-task streams, so identical invocations give byte-identical
outputs.  Exit codes: 0 success, 1 assertion failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .extremals import coeff_bound_table, growth_profile
from .functionals import (
    PhiBetaTruncation,
    dual_ratio_scan,
    dual_test_function,
    phi_membership_scan,
    psi_beta_criteria,
)
from .norms import CSV_HEADER as NORM_CSV_HEADER
from .norms import QuadratureSpec, norm_even, norm_l2, norm_qmc, norm_vertical
from .operators import (
    CSV_HEADER as PS_CSV_HEADER,
    bernstein_constant_search,
    extremal_fM,
    operator_norm_scan,
)
from .series import DirichletPolynomial, euler_product_power
from .verification import SCALES, run_suite

SCAN_SCHEMAS = {
    "dual-ratio": "p,beta,N,pairing,norm,ratio,log_ratio,loglogN,slope,intercept",
    "membership": "p,beta,n_max,label,majorant_decay,minorant_trend,minorant_decay",
    "partial-sum": PS_CSV_HEADER + ",target,meets_target",
    "growth": "mode,p,k,n,log_c_lower,log_c_upper,statistic_lower,statistic_upper",
    "bernstein": "n,p,samples,empirical_C,witness,monomial_C",
    "coeff": "k,p,lower,upper,lower_method,upper_method",
    "psi-threshold": "p,beta,q,label,decay,critical_beta",
}


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _write_lines(path: str | None, lines: list[str]) -> None:
    text = "\n".join(lines) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read_polynomial(path: str) -> DirichletPolynomial:
    text = Path(path).read_text()
    if path.endswith(".json"):
        return DirichletPolynomial.from_json(text)
    return DirichletPolynomial.from_text(text)


def _cmd_norm(args) -> int:
    try:
        f = _read_polynomial(args.input)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error reading {args.input}: {exc}", file=sys.stderr)
        return 2
    if args.method == "exact_l2":
        est = norm_l2(f)
    elif args.method == "exact_even":
        est = norm_even(f, args.p)
    elif args.method == "qmc":
        spec = QuadratureSpec(scheme=args.scheme, total_points=args.points,
                              replications=args.replications, seed=args.seed)
        est = norm_qmc(f, args.p, spec)
    else:  # vertical
        est = norm_vertical(f, args.p, args.T, args.step)
    if args.format == "json":
        payload = {"value": est.value, "p": est.p, "method": est.method,
                   "error": est.error, "samples": est.samples, "seed": est.seed}
        lines = [json.dumps(payload, sort_keys=True)]
    else:
        lines = [NORM_CSV_HEADER, est.csv_row()]
    _write_lines(args.output, lines)
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, scale=args.scale, seed=args.seed,
                       trials=args.trials)
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text)
        total = sum(len(s["checks"]) for s in report["suites"])
        failed = sum(1 for s in report["suites"] for c in s["checks"]
                     if not c["passed"])
        print(f"{args.suite}: {total - failed}/{total} checks passed "
              f"(scale={args.scale}, seed={args.seed})")
    else:
        sys.stdout.write(text)
    return 0 if report["passed"] else 1


def _scan_rows(args) -> list[dict]:
    """Collect one scan's results as ordered row dictionaries."""
    if args.name == "dual-ratio":
        beta = args.beta[0] if args.beta else 0.5
        res = dual_ratio_scan(args.p, beta, args.N)
        return [{k: r[k] for k in SCAN_SCHEMAS["dual-ratio"].split(",")}
                for r in res["rows"]]
    if args.name == "membership":
        def cell(p):
            grid = args.beta if args.beta else [p / 4 - 0.15, p / 4, p / 4 + 0.15]
            return phi_membership_scan([p], grid, n_max=args.nmax)

        with ThreadPoolExecutor(max_workers=max(args.workers, 1)) as pool:
            blocks = list(pool.map(cell, args.p_list))
        keys = SCAN_SCHEMAS["membership"].split(",")
        return [{k: r[k] for k in keys} for block in blocks for r in block]
    if args.name == "partial-sum":
        N_list = args.N if args.family != "extremal_fM" else list(
            range(1, args.kmax + 1))
        spec = QuadratureSpec(scheme="randomized_lattice",
                              total_points=args.points,
                              replications=args.replications, seed=args.seed)
        rows = operator_norm_scan(args.p, N_list, family=args.family,
                                  trials=args.trials, seed=args.seed, spec=spec)
        return [{
            "N": e.N, "p": e.p, "family": e.family,
            "construction": e.construction, "ratio": e.ratio,
            "error": e.error, "trial": e.trial,
            "target": e.extra.get("target"),
            "meets_target": e.extra.get("meets_target"),
        } for e in rows]
    if args.name == "growth":
        rows = growth_profile(args.p, kmax=args.kmax, mode=args.mode,
                              seed=args.seed)
        keys = SCAN_SCHEMAS["growth"].split(",")
        return [{k: r[k] for k in keys} for r in rows]
    if args.name == "bernstein":
        rows = bernstein_constant_search(args.degrees, args.p_list,
                                         samples=args.trials, seed=args.seed)
        keys = SCAN_SCHEMAS["bernstein"].split(",")
        return [{k: r[k] for k in keys} for r in rows]
    if args.name == "coeff":
        bounds = coeff_bound_table(args.kmax, args.p_list,
                                   restarts=max(args.trials // 4, 2),
                                   seed=args.seed)
        return [{"k": b.k, "p": b.p, "lower": b.lower, "upper": b.upper,
                 "lower_method": b.lower_method,
                 "upper_method": b.upper_method} for b in bounds]
    # psi-threshold
    rows = []
    for p in args.p_list:
        grid = args.beta if args.beta else [max(1 / p - 0.25, 0.0),
                                            1 / p, 1 / p + 0.25]
        for beta in grid:
            out = psi_beta_criteria(p, beta)
            rows.append({k: out[k] for k in SCAN_SCHEMAS["psi-threshold"].split(",")})
    return rows


def _cmd_scan(args) -> int:
    rows = _scan_rows(args)
    if args.format == "json":
        text = json.dumps(rows, sort_keys=True, indent=2) + "\n"
        if args.output and args.output != "-":
            Path(args.output).write_text(text)
        else:
            sys.stdout.write(text)
        return 0
    keys = SCAN_SCHEMAS[args.name].split(",")
    lines = [SCAN_SCHEMAS[args.name]]
    for r in rows:
        lines.append(",".join(
            _fmt(r[k]) if r[k] is not None else "" for k in keys))
    _write_lines(args.output, lines)
    return 0


def _cmd_build(args) -> int:
    if args.name == "extremal-fm":
        f = extremal_fM(args.k, args.p, degree=args.degree)
    elif args.name == "euler-product":
        f = euler_product_power(
            args.prime_limit,
            lambda q: [1.0, -(q ** -0.5)],
            exponent=-args.exponent,
            degree=args.degree if args.degree else 2,
        )
    elif args.name == "phi-beta":
        f = PhiBetaTruncation(args.beta, args.N).polynomial()
    else:  # dual-test
        f = dual_test_function(args.p, args.N,
                               degree=args.degree if args.degree else 2)
    text = f.to_json() + "\n" if args.format == "json" else f.to_text()
    if args.output and args.output != "-":
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dhardy",
        description="Numerical toolkit for Hardy spaces of Dirichlet series.",
        epilog="The factorization sieve defaults to 2^24 entries; set "
               "HD_SIEVE_LIMIT to override.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_norm = sub.add_parser(
        "norm", help="quasi-norm of a polynomial file",
        description="Compute one quasi-norm of a Dirichlet polynomial read "
                    "from a text file with one 'n re im' triple per line "
                    "(or a .json file).",
        epilog=f"CSV columns: {NORM_CSV_HEADER}")
    p_norm.add_argument("input")
    p_norm.add_argument("--p", type=float, default=2.0)
    p_norm.add_argument("--method", choices=["exact_l2", "exact_even", "qmc",
                                             "vertical"], default="exact_l2")
    p_norm.add_argument("--scheme", choices=["tensor_grid", "randomized_lattice"],
                        default="tensor_grid")
    p_norm.add_argument("--points", type=int, default=2048,
                        help="lattice size for scheme randomized_lattice")
    p_norm.add_argument("--replications", type=int, default=16)
    p_norm.add_argument("--seed", type=int, default=0)
    p_norm.add_argument("--T", type=float, default=1e4,
                        help="half-length of the vertical segment")
    p_norm.add_argument("--step", type=float, default=None)
    p_norm.add_argument("--format", choices=["csv", "json"], default="csv")
    p_norm.add_argument("--output", default=None)
    p_norm.set_defaults(func=_cmd_norm)

    p_verify = sub.add_parser(
        "verify", help="run a named invariant suite",
        description="Run a verification suite; exit code 0 means every "
                    "check passed, 1 means at least one failed.")
    p_verify.add_argument("suite", choices=["arithmetic", "norms",
                                            "hl-inequalities", "weissler",
                                            "coeff", "partial-sum",
                                            "functionals", "all"])
    p_verify.add_argument("--scale", choices=sorted(SCALES), default="default")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--trials", type=int, default=None,
                          help="override the scale's randomized-draw count")
    p_verify.add_argument("--output", default=None,
                          help="write the JSON report here instead of stdout")
    p_verify.set_defaults(func=_cmd_verify)

    def float_list(text):
        return [float(tok) for tok in text.split(",") if tok]

    def int_list(text):
        return [int(tok) for tok in text.split(",") if tok]

    p_scan = sub.add_parser(
        "scan", help="parameter sweeps written as CSV",
        description="Run a named scan over a parameter grid and emit one "
                    "CSV table with a fixed header row.",
        epilog="Schemas: " + "; ".join(f"{k}: {v}" for k, v in SCAN_SCHEMAS.items()))
    p_scan.add_argument("name", choices=sorted(SCAN_SCHEMAS))
    p_scan.add_argument("--p", type=float, default=1.0,
                        help="exponent (dual-ratio, partial-sum, growth)")
    p_scan.add_argument("--p-list", type=float_list, default=[2.0, 3.0, 4.0],
                        dest="p_list",
                        help="comma-separated exponents (membership, bernstein)")
    p_scan.add_argument("--beta", type=float_list, default=[],
                        help="beta grid (membership) or single beta (dual-ratio)")
    p_scan.add_argument("--N", type=int_list, default=[100, 1000, 10000],
                        help="comma-separated cutoffs")
    p_scan.add_argument("--nmax", type=int, default=1 << 22,
                        help="membership summation limit")
    p_scan.add_argument("--kmax", type=int, default=3)
    p_scan.add_argument("--mode", choices=["square_free_primorials", "all"],
                        default="square_free_primorials")
    p_scan.add_argument("--family", choices=["extremal_fM", "shifted_gN",
                                             "random", "user"],
                        default="extremal_fM")
    p_scan.add_argument("--degrees", type=int_list, default=[8, 32],
                        help="polynomial degrees (bernstein)")
    p_scan.add_argument("--trials", type=int, default=16)
    p_scan.add_argument("--points", type=int, default=2048)
    p_scan.add_argument("--replications", type=int, default=16)
    p_scan.add_argument("--seed", type=int, default=0)
    p_scan.add_argument("--workers", type=int, default=1,
                        help="worker threads for independent grid cells")
    p_scan.add_argument("--format", choices=["csv", "json"], default="csv")
    p_scan.add_argument("--output", default=None)
    p_scan.set_defaults(func=_cmd_scan)

    p_build = sub.add_parser(
        "build", help="construct named polynomials to files",
        description="Materialize a named construction as a polynomial file "
                    "in the text or JSON format accepted by 'norm'.")
    p_build.add_argument("name", choices=["extremal-fm", "euler-product",
                                          "phi-beta", "dual-test"])
    p_build.add_argument("--p", type=float, default=0.5)
    p_build.add_argument("--k", type=int, default=2)
    p_build.add_argument("--beta", type=float, default=1.0)
    p_build.add_argument("--N", type=int, default=100)
    p_build.add_argument("--prime-limit", type=int, default=5, dest="prime_limit")
    p_build.add_argument("--exponent", type=float, default=1.0,
                        help="the product is raised to minus this exponent")
    p_build.add_argument("--degree", type=int, default=None)
    p_build.add_argument("--format", choices=["text", "json"], default="text")
    p_build.add_argument("--output", default=None)
    p_build.set_defaults(func=_cmd_build)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
