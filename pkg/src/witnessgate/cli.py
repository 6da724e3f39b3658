"""Command-line front end: classify matrix files, sweep the operator
families, and expose the polynomial decision procedures for debugging.

Exit codes: 0 success, 2 malformed input, 3 non-Hermitian matrix.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .bipartite import BipartiteHermitian, HermiticityError
from .families import build_family
from .groebner import GroebnerOptions, sufficient_block_positive
from .oracle import estimate_mu
from .quditqubit import necessary_block_positive
from .scalars import Q, format_gauss, format_rational, parse_rational
from .unipoly import (Interval, UniPoly, count_roots, eval_alternative,
                      eval_alternative_all_reals, nonneg)
from .witness2x2 import VerdictKind, classify

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_NOT_HERMITIAN = 3


def _fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _certificate_dict(cert) -> dict:
    return {
        "v": [format_gauss(z) for z in cert.v],
        "w": [format_gauss(z) for z in cert.w],
        "value": format_rational(cert.value),
    }


def _groebner_options(args) -> GroebnerOptions:
    return GroebnerOptions(max_pairs=args.groebner_max_pairs,
                           max_terms=args.groebner_max_terms)


def _check_report(X: BipartiteHermitian, args) -> dict:
    report: dict = {"dA": X.dA, "dB": X.dB}
    if (X.dA, X.dB) == (2, 2):
        verdict = classify(X)
        report["verdict"] = verdict.kind.value
        if verdict.certificate is not None:
            report["certificate"] = _certificate_dict(verdict.certificate)
        if verdict.weakly_optimal_possible is not None:
            report["weakly_optimal_possible"] = verdict.weakly_optimal_possible
    else:
        nec = necessary_block_positive(X)
        report["necessary"] = nec.verdict
        if nec.fails:
            if isinstance(nec.violated, str):
                report["violated"] = nec.violated
            else:
                report["violated"] = {"l": nec.violated.l, "k": nec.violated.k}
            if nec.certificate is not None:
                report["certificate"] = _certificate_dict(nec.certificate)
            report["sufficient"] = "Inconclusive"
        else:
            suff = sufficient_block_positive(X.swap_factors(), _groebner_options(args))
            report["sufficient"] = suff.verdict
            report["sufficient_details"] = list(suff.details)
    if args.restarts:
        est = estimate_mu(X, restarts=args.restarts, tol=args.tol, seed=args.seed)
        report["mu_hat"] = est.mu_hat
    return report


def cmd_check(args) -> int:
    try:
        X = BipartiteHermitian.load(args.path)
    except HermiticityError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_NOT_HERMITIAN
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": f"malformed input: {exc}"}), file=sys.stderr)
        return EXIT_MALFORMED
    if X.dB != 2:
        if X.dA == 2:
            X = X.swap_factors()
        else:
            print(json.dumps({"error": "only d x 2 shapes are supported"}),
                  file=sys.stderr)
            return EXIT_MALFORMED
    print(json.dumps(_check_report(X, args), indent=1))
    return EXIT_OK


def sweep_row(payload) -> dict:
    family, a_str, restarts, tol, seed, max_pairs, max_terms = payload
    a = Q(a_str)
    X = build_family(family, a)
    lam_min = float(np.linalg.eigvalsh(np.array(X.to_complex_rows())).min())
    est = estimate_mu(X, restarts=restarts, tol=tol, seed=seed)
    row = {
        "a": format_rational(a),
        "lambda_min": _fmt_float(lam_min),
        "mu_hat": _fmt_float(est.mu_hat),
        "verdict_exact": "",
        "necessary_verdict": "",
        "sufficient_verdict": "",
    }
    options = GroebnerOptions(max_pairs=max_pairs, max_terms=max_terms)
    if (X.dA, X.dB) == (2, 2):
        row["verdict_exact"] = classify(X).kind.value
    nec = necessary_block_positive(X)
    row["necessary_verdict"] = nec.verdict
    if nec.fails:
        row["sufficient_verdict"] = "Inconclusive"
    else:
        row["sufficient_verdict"] = sufficient_block_positive(
            X.swap_factors(), options).verdict
    return row


def cmd_sweep(args) -> int:
    try:
        start = parse_rational(args.start)
        stop = parse_rational(args.stop)
        step = parse_rational(args.step)
    except ValueError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_MALFORMED
    if step <= 0:
        print(json.dumps({"error": "step must be positive"}), file=sys.stderr)
        return EXIT_MALFORMED
    if args.family.upper() not in ("E", "F"):
        print(json.dumps({"error": f"unknown family: {args.family}"}), file=sys.stderr)
        return EXIT_MALFORMED
    grid = []
    a = start
    while a <= stop:
        grid.append(a)
        a = a + step
    payloads = [(args.family, str(a), args.restarts, args.tol, args.seed,
                 args.groebner_max_pairs, args.groebner_max_terms) for a in grid]
    threads = int(os.environ.get("WITNESSGATE_THREADS", "1"))
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(sweep_row, payloads))
    else:
        rows = [sweep_row(p) for p in payloads]
    fields = ["a", "lambda_min", "mu_hat", "verdict_exact",
              "necessary_verdict", "sufficient_verdict"]
    writer = csv.DictWriter(sys.stdout, fieldnames=fields)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return EXIT_OK


def _parse_poly(text: str) -> UniPoly:
    coeffs = [parse_rational(c) for c in text.split(",") if c.strip()]
    return UniPoly(coeffs)


def _parse_interval(args) -> Interval | None:
    if args.lo is None and args.hi is None:
        return None
    if args.lo is None or args.hi is None:
        raise ValueError("provide both --lo and --hi, or neither")
    return Interval(parse_rational(args.lo), parse_rational(args.hi))


def cmd_poly(args) -> int:
    try:
        if args.poly_command == "count-roots":
            f = _parse_poly(args.coeffs)
            print(json.dumps({"count": count_roots(f, _parse_interval(args))}))
        elif args.poly_command == "nonneg":
            f = _parse_poly(args.coeffs)
            print(json.dumps({"nonneg": nonneg(f, _parse_interval(args))}))
        else:
            g1 = _parse_poly(args.g1)
            g2 = _parse_poly(args.g2)
            iv = _parse_interval(args)
            res = (eval_alternative_all_reals(g1, g2) if iv is None
                   else eval_alternative(g1, g2, iv.lo, iv.hi))
            out = {"holds": res.holds}
            if res.witness is not None:
                out["witness"] = format_rational(res.witness)
            print(json.dumps(out))
    except ValueError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_MALFORMED
    return EXIT_OK


def _add_common(parser) -> None:
    parser.add_argument("--restarts", type=int, default=0,
                        help="see-saw restarts for the numeric estimate (0 = skip)")
    parser.add_argument("--tol", type=float, default=1e-12)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--groebner.max-pairs", dest="groebner_max_pairs",
                        type=int, default=GroebnerOptions.max_pairs)
    parser.add_argument("--groebner.max-terms", dest="groebner_max_terms",
                        type=int, default=GroebnerOptions.max_terms)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="witnessgate",
        description="Exact block-positivity and entanglement-witness tests")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="classify a matrix file (JSON)")
    p_check.add_argument("path")
    _add_common(p_check)
    p_check.set_defaults(func=cmd_check)

    p_sweep = sub.add_parser("sweep", help="sweep a one-parameter family, CSV out")
    p_sweep.add_argument("--family", required=True, choices=["E", "F", "e", "f"])
    p_sweep.add_argument("--from", dest="start", required=True)
    p_sweep.add_argument("--to", dest="stop", required=True)
    p_sweep.add_argument("--step", required=True)
    _add_common(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep, restarts=32)

    p_poly = sub.add_parser("poly", help="polynomial decision procedures")
    poly_sub = p_poly.add_subparsers(dest="poly_command", required=True)
    for name in ("count-roots", "nonneg"):
        pp = poly_sub.add_parser(name)
        pp.add_argument("--coeffs", required=True,
                        help="comma-separated rationals, lowest degree first")
        pp.add_argument("--lo")
        pp.add_argument("--hi")
        pp.set_defaults(func=cmd_poly)
    pa = poly_sub.add_parser("alternative")
    pa.add_argument("--g1", required=True)
    pa.add_argument("--g2", required=True)
    pa.add_argument("--lo")
    pa.add_argument("--hi")
    pa.set_defaults(func=cmd_poly)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
