"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import eigensolve, quotient, spectra
from .characters import mn_character
from .errors import SizeLimitError, VerificationError
from .permutations import cayley_adjacency, enumerate_class_cycles, symmetric_group
from .young import format_partition, parse_partition


def _bracket(lam) -> str:
    return "[" + format_partition(lam) + "]"


def cmd_spectrum(args) -> int:
    entries = spectra.full_spectrum(args.n, args.k, threads=args.threads)
    if args.format == "json":
        print(spectra.spectrum_to_json(args.n, args.k, entries))
    elif args.format == "csv":
        print(spectra.spectrum_to_csv(entries), end="")
    else:
        c = spectra.class_size(args.n, args.k)
        print(f"Cay(Sym({args.n}), {args.n - args.k}-cycles): valency {c}")
        width = max(len(format_partition(e.partition)) for e in entries)
        print(f"{'partition':<{width + 2}}{'eigenvalue':>14}  multiplicity")
        for e in entries:
            print(f"{format_partition(e.partition):<{width + 2}}{e.eigenvalue:>14}  {e.multiplicity}")
    return 0


def cmd_lambda2(args) -> int:
    result = spectra.lambda2(args.n, args.k)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "k": args.k,
                    "lambda2": str(result.value),
                    "witnesses": [format_partition(w) for w in result.witnesses],
                }
            )
        )
    else:
        print(f"{result.value}  witnesses: " + " ".join(_bracket(w) for w in result.witnesses))
    return 0


def cmd_conjecture(args) -> int:
    records = spectra.conjecture_check(args.n_max, threads=args.threads)
    failed = [r for r in records if not r.ok]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n_max": args.n_max,
                    "records": [
                        {
                            "n": r.n,
                            "k": r.k,
                            "lambda2": str(r.value),
                            "expected": str(r.expected),
                            "witnesses": [format_partition(w) for w in r.witnesses],
                            "pass": r.ok,
                        }
                        for r in records
                    ],
                    "pass": not failed,
                }
            )
        )
    else:
        for r in records:
            status = "PASS" if r.ok else "FAIL"
            print(
                f"n={r.n} k={r.k}: lambda2={r.value} expected={r.expected} "
                f"witnesses={' '.join(_bracket(w) for w in r.witnesses)} {status}"
            )
        print(f"checked {len(records)} pairs: {len(records) - len(failed)} pass, {len(failed)} fail")
    return 1 if failed else 0


def cmd_table1(args) -> int:
    rows = []
    for shape_id, rule in spectra.TABLE1_SHAPES.items():
        if args.n < rule.min_n:
            rows.append((shape_id, None, None))
            continue
        lam = spectra.concrete_shape(shape_id, args.n)
        rows.append((shape_id, lam, spectra.closed_form_table1(shape_id, args.n, args.k)))
    asserted = spectra.in_asserted_regime(args.n, args.k)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "k": args.k,
                    "asserted_regime": asserted,
                    "rows": [
                        {
                            "shape": shape_id,
                            "partition": None if lam is None else format_partition(lam),
                            "eigenvalue": None if value is None else str(value),
                        }
                        for shape_id, lam, value in rows
                    ],
                }
            )
        )
    else:
        regime = "asserted (3k+1 < n or k <= 1)" if asserted else "reported only (outside proven regime)"
        print(f"closed forms at n={args.n}, k={args.k}: {regime}")
        for shape_id, lam, value in rows:
            if lam is None:
                print(f"{shape_id:<14} (needs n >= {spectra.TABLE1_SHAPES[shape_id].min_n})")
            else:
                print(f"{shape_id:<14} {format_partition(lam):<20} {value}")
    return 0


def cmd_quotient(args) -> int:
    q = quotient.quotient_matrix_gamma(args.n, args.k)
    top, second = quotient.quotient_eigenvalues_gamma(args.n, args.k)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "k": args.k,
                    "order": q.order,
                    "diagonal": str(q.diagonal),
                    "off_diagonal": str(q.off_diagonal),
                    "eigenvalues": {"top": str(top), "second": str(second)},
                    "second_multiplicity": q.order - 1,
                }
            )
        )
    elif args.format == "csv":
        print(q.to_csv(), end="")
    else:
        print(q.provenance)
        print(q.to_csv(), end="")
        print(f"eigenvalues: {top} (x1), {second} (x{q.order - 1})")
    return 0


def cmd_char(args) -> int:
    lam = parse_partition(args.partition)
    tau = parse_partition(args.type)
    print(mn_character(lam, tau))
    return 0


def cmd_bruteforce(args) -> int:
    if args.n > 6:
        raise ValueError(f"brute force is capped at n <= 6, got n = {args.n}")
    op = cayley_adjacency(
        symmetric_group(args.n), enumerate_class_cycles(args.n, args.n - args.k)
    )
    dense = eigensolve.dense_spectrum(op, assume_integral=True)
    expanded: list[int] = []
    for entry in spectra.full_spectrum(args.n, args.k):
        expanded.extend([entry.eigenvalue] * entry.multiplicity)
    expanded.sort(reverse=True)
    deviation = float(np.abs(dense.values - np.array(expanded, dtype=np.float64)).max())
    if list(dense.integers) == expanded and deviation <= 1e-8:
        print(f"MATCH: {len(expanded)} eigenvalues agree (max deviation {deviation:.2e})")
        return 0
    print(f"MISMATCH: adjacency spectrum deviates from character spectrum by {deviation:.2e}")
    return 1


def cmd_verify(args) -> int:
    try:
        report = eigensolve.verify_recursive_5cycles(tol=args.tol, seed=args.seed)
    except VerificationError as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(report.to_json())
    else:
        print(" k  valency  lambda1       lambda2       rhs_exact  status")
        for row in report.rows:
            print(
                f"{row.k:>2}  {row.valency:>7}  {row.lambda1_numeric:<12.6f}  "
                f"{row.lambda2_numeric:<12.6f}  {row.rhs_exact:>9}  "
                f"{'PASS' if row.passed else 'FAIL'}"
            )
        print(f"certified second-eigenvalue formula for the 5-cycle class (n >= 7): {report.lambda2_formula}")
    return 0 if report.passed else 1


def cmd_hypothesis(args) -> int:
    flags = spectra.hypothesis_check(args.n, args.k)
    payload = {
        "in_main_theorem_range": flags.in_main_theorem_range,
        "unique_rimhook_range": flags.unique_rimhook_range,
        "sqrtkfact_bound_holds": flags.sqrtkfact_bound_holds,
    }
    if args.format == "json":
        print(json.dumps({"n": args.n, "k": args.k} | payload))
    else:
        for name, value in payload.items():
            print(f"{name}: {str(value).lower()}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayley-spectra",
        description="Exact spectra of the (n-k)-cycle Cayley graphs of Sym(n), "
        "with quotient, brute-force, and Lanczos certification pipelines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_threads = os.cpu_count() or 1

    def add_nk(p, k_required=True):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=k_required)

    p = sub.add_parser("spectrum", help="full eigenvalue/multiplicity table")
    add_nk(p)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--threads", type=int, default=default_threads)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("lambda2", help="largest eigenvalue strictly below the valency")
    add_nk(p)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_lambda2)

    p = sub.add_parser("conjecture", help="sweep lambda2 against (k-1)/(n-1) * valency")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--threads", type=int, default=default_threads)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("table1", help="closed forms for the fourteen low-dimension shapes")
    add_nk(p)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("quotient", help="point-stabilizer coset quotient matrix")
    add_nk(p)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("char", help="one character value by the hook-removal recursion")
    p.add_argument("--partition", required=True, help='shape, e.g. "3,2"')
    p.add_argument("--type", required=True, help='cycle type, e.g. "3,1,1"')
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("bruteforce", help="dense adjacency spectrum vs character spectrum (n <= 6)")
    add_nk(p)
    p.set_defaults(func=cmd_bruteforce)

    p = sub.add_parser(
        "verify-recursive-5cycles",
        help="certify the filtered 5-cycle graphs on Alt(8) by Lanczos + coset counts",
    )
    p.add_argument("--tol", type=float, default=eigensolve.DEFAULT_TOL)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=eigensolve.DEFAULT_SEED)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hypothesis", help="range predicates for a pair (n, k)")
    add_nk(p)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_hypothesis)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
