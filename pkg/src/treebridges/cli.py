"""Command line front end.

Four subcommands: exact sequence tables (CSV or JSON), consistency
batteries, high precision constants, and the Monte Carlo estimator.
Exit codes follow the usual contract: 0 clean, 1 a check failed,
2 bad usage such as a table past its cap.

Large integers are emitted as decimal strings in JSON because several
sequences outgrow 64 bits long before the caps bite.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

from . import bridges, constants, graphseq, series, trees, verify, walks_mc

# residue DP tables for the N and N' columns are quadratic in n per row
_DIVISIBLE_AREA_CAP = bridges.RESIDUE_DP_CAP

_TABLE_CHOICES = ("T", "B", "M", "N", "Nprime", "G", "irreducible")


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _table_rows(which: str, n_max: int):
    """Header and rows for one table; raises ValueError past a cap."""
    if which == "G" and n_max > graphseq.COUNT_CAP:
        raise ValueError(
            f"table G is capped at n = {graphseq.COUNT_CAP} (enumeration cost), got {n_max}"
        )
    if which in ("N", "Nprime") and n_max > _DIVISIBLE_AREA_CAP:
        raise ValueError(
            f"table {which} is capped at n = {_DIVISIBLE_AREA_CAP} (residue DP cost), got {n_max}"
        )
    if which == "B":
        vals = bridges.graphical_bridge_counts(n_max)
        return ("n", "value"), [(n, vals[n]) for n in range(n_max + 1)]
    if which == "T":
        return ("n", "value"), [(n, trees.plane_tree_count(n)) for n in range(1, n_max + 1)]
    if which == "M":
        rows = [
            (n, k, trees.zero_sum_multisets(n, k))
            for n in range(1, n_max + 1)
            for k in range(n + 1)
        ]
        return ("n", "k", "value"), rows
    if which == "N":
        return ("n", "value"), [
            (n, trees.count_paths_area_divisible(n)) for n in range(1, n_max + 1)
        ]
    if which == "Nprime":
        return ("n", "value"), [
            (n, bridges.count_bridges_area_divisible(n)) for n in range(1, n_max + 1)
        ]
    if which == "G":
        return ("n", "value"), [
            (n, graphseq.count_graphical_sequences(n)) for n in range(1, n_max + 1)
        ]
    if which == "irreducible":
        irr = series.irreducible_bridge_counts(list(bridges.graphical_bridge_counts(n_max)))
        return ("n", "value"), [(n, irr[n]) for n in range(1, n_max + 1)]
    raise ValueError(f"unknown table {which!r}")


def cmd_tables(args) -> int:
    if args.n_max < 0 or (args.which != "B" and args.n_max < 1):
        return _usage_error(f"n-max too small for table {args.which}: {args.n_max}")
    try:
        header, rows = _table_rows(args.which, args.n_max)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    else:
        payload = {
            "command": "tables",
            "which": args.which,
            "n_max": args.n_max,
            "rows": [
                {key: (str(v) if key == "value" else v) for key, v in zip(header, row)}
                for row in rows
            ],
        }
        print(json.dumps(payload, indent=2))
    return 0


def cmd_verify(args) -> int:
    try:
        results = verify.run_suite(args.suite, args.n_max)
    except ValueError as exc:
        return _usage_error(str(exc))
    failed = 0
    for name, passed, detail in results:
        mark = "ok  " if passed else "FAIL"
        print(f"{mark} {name} ({detail})")
        failed += not passed
    print(f"{len(results) - failed} of {len(results)} checks passed")
    return 1 if failed else 0


def cmd_constants(args) -> int:
    if not 1 <= args.digits <= 12:
        return _usage_error(f"digits must be between 1 and 12, got {args.digits}")
    xi = constants.tree_series()
    c = constants.count_growth_constant()
    rho = constants.exact_zero_area_prob()
    g34 = constants.gamma_three_quarters()
    # rounding the value can move it by half an ulp, fold that into the bound
    slop = 0.5 * 10.0 ** (-args.digits)
    payload = {
        "xi": round(xi.value, args.digits),
        "C": round(c.value, args.digits),
        "rho": round(rho.value, args.digits),
        "gamma34": round(g34.value, args.digits),
        "bounds": {
            "xi": xi.error_bound + slop,
            "C": c.error_bound + slop,
            "rho": rho.error_bound + slop,
            "gamma34": g34.error_bound + slop,
        },
    }
    print(json.dumps(payload, indent=2))
    return 0


def cmd_rho_mc(args) -> int:
    if args.samples < 1:
        return _usage_error(f"samples must be >= 1, got {args.samples}")
    if args.horizon < 1:
        return _usage_error(f"horizon must be >= 1, got {args.horizon}")
    if args.workers < 1:
        return _usage_error(f"workers must be >= 1, got {args.workers}")
    est = walks_mc.estimate_zero_area_prob(args.samples, args.horizon, args.seed, args.workers)
    payload = {
        "estimate": None if math.isnan(est.estimate) else est.estimate,
        "samples": est.samples,
        "std_error": None if math.isnan(est.std_error) else est.std_error,
        "capped_fraction": est.capped_fraction,
        "seed": est.seed,
    }
    print(json.dumps(payload, indent=2))
    return 0


def _default_workers() -> int:
    raw = os.environ.get("TREEBRIDGES_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treebridges",
        description="Exact combinatorics of plane trees, graphical bridges and degree sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tables = sub.add_parser("tables", help="print one exact integer table")
    p_tables.add_argument("--which", required=True, choices=_TABLE_CHOICES)
    p_tables.add_argument("--n-max", type=int, required=True, dest="n_max")
    p_tables.add_argument("--format", choices=("csv", "json"), default="csv")
    p_tables.set_defaults(func=cmd_tables)

    p_verify = sub.add_parser("verify", help="run a consistency battery")
    p_verify.add_argument(
        "--suite", required=True, choices=(*sorted(verify.SUITES), "all")
    )
    p_verify.add_argument("--n-max", type=int, default=None, dest="n_max")
    p_verify.set_defaults(func=cmd_verify)

    p_const = sub.add_parser("constants", help="print the limit constants as JSON")
    p_const.add_argument("--digits", type=int, default=12)
    p_const.set_defaults(func=cmd_constants)

    p_mc = sub.add_parser("rho-mc", help="Monte Carlo stopping probability estimate")
    p_mc.add_argument("--samples", type=int, default=100_000)
    p_mc.add_argument("--horizon", type=int, default=1_000_000)
    p_mc.add_argument("--seed", type=int, default=0)
    p_mc.add_argument("--workers", type=int, default=_default_workers())
    p_mc.set_defaults(func=cmd_rho_mc)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
