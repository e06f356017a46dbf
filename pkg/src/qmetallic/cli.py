"""Command-line front end.

Subcommands: series (Taylor coefficients), hfrac (the periodic fraction),
hankel (determinant tables with dual-route cross check), verify (theorem
suites), modp (prime-field cycle analysis), scan (exploratory windows
beyond the proved shift range).

Output is deterministic: the same invocation produces byte-identical
text, JSON (sorted keys, no timestamps), or CSV. Exit codes: 0 success
or inconclusive report, 1 failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .hfrac import expected_hfraction, hfraction_of_shift
from .qseries import metallic_series
from .verify import (
    SUITES,
    is_prime,
    conjecture_scan,
    hankel_sequence,
    modp_analysis,
    run_suite,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

DEFAULT_PRECISION = 24


class UsageError(Exception):
    pass


def _default_precision() -> int:
    raw = os.environ.get("HM_DEFAULT_PRECISION")
    if raw is None:
        return DEFAULT_PRECISION
    try:
        prec = int(raw)
    except ValueError:
        raise UsageError(f"HM_DEFAULT_PRECISION must be an integer, got {raw!r}")
    if prec < 1:
        raise UsageError("HM_DEFAULT_PRECISION must be >= 1")
    return prec


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _csv_cell(v) -> str:
    # negative numbers are quoted so spreadsheet importers keep them as text
    s = str(v)
    return f'"{s}"' if isinstance(v, int) and v < 0 else s


def _csv_table(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_csv_cell(c) for c in row))
    return "\n".join(lines) + "\n"


def _parse_n_range(text: str) -> list:
    """n values from '3', '1..6', or a comma list of both forms."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, _, hi = chunk.partition("..")
            try:
                lo, hi = int(lo), int(hi)
            except ValueError:
                raise UsageError(f"bad range {chunk!r}: expected like 1..6")
            if lo > hi:
                raise UsageError(f"empty range {chunk!r}")
            out.extend(range(lo, hi + 1))
        else:
            try:
                out.append(int(chunk))
            except ValueError:
                raise UsageError(f"bad value {chunk!r} in --n")
    if not out or any(n < 1 for n in out):
        raise UsageError("--n values must be >= 1")
    return out


# ---------------------------------------------------------------------------
# Subcommands: each returns (exit_code, output_text)


def _cmd_series(args) -> tuple:
    prec = args.prec if args.prec is not None else _default_precision()
    if args.n < 1 or prec < 1:
        raise UsageError("series needs --n >= 1 and --prec >= 1")
    f = metallic_series(args.n, prec)
    if args.format == "json":
        payload = {
            "command": "series",
            "n": args.n,
            "prec": prec,
            "coefficients": [int(c) for c in f.coeffs],
        }
        return EXIT_OK, _dump_json(payload)
    if args.format == "csv":
        rows = [(args.n, j, int(c)) for j, c in enumerate(f.coeffs)]
        return EXIT_OK, _csv_table(("n", "j", "coefficient"), rows)
    return EXIT_OK, f"{f}\n"


def _cmd_hfrac(args) -> tuple:
    n, ell = args.n, args.ell
    if n < 1:
        raise UsageError("hfrac needs --n >= 1")
    if not 0 <= ell <= n + 1:
        raise UsageError(
            f"the fraction is available for --ell 0..{n + 1} (got {ell}); "
            "larger shifts have no known periodic form"
        )
    hf = expected_hfraction(n) if ell == 0 else hfraction_of_shift(n, ell)
    offset = 1 + len(hf.preamble)
    if args.format == "json":
        payload = hf.to_json_dict()
        payload.update(
            {
                "command": "hfrac",
                "n": n,
                "ell": ell,
                "period": len(hf.cycle),
                "offset": offset,
            }
        )
        return EXIT_OK, _dump_json(payload)
    if args.format == "csv":
        rows = []
        for i, t in enumerate(hf.stream(hf.n_stored_terms())):
            part = "head" if i == 0 else ("preamble" if i < offset else "cycle")
            rows.append((n, ell, i, part, t.k, int(t.v), str(t.d)))
        return EXIT_OK, _csv_table(("n", "ell", "index", "part", "k", "v", "den"), rows)
    rendered = hf.to_cfterms()
    lines = [f"n={n} ell={ell} period={len(hf.cycle)} offset={offset}"]
    head = rendered.terms[0]
    lines.append(f"head: ({head.num})/({head.den})")
    for i, t in enumerate(hf.preamble):
        ct = rendered.terms[1 + i]
        lines.append(f"  [{1 + i}] ({ct.num})/({ct.den})")
    if hf.cycle:
        lines.append(f"cycle of {len(hf.cycle)} terms, repeating from index {offset}:")
        for i, ct in enumerate(rendered.cycle):
            lines.append(f"  [{offset + i}] ({ct.num})/({ct.den})")
    if hf.terminated:
        lines.append("terminating fraction (rational series)")
    return EXIT_OK, "\n".join(lines) + "\n"


def _cmd_hankel(args) -> tuple:
    n, ell = args.n, args.ell
    if n < 1 or ell < 0:
        raise UsageError("hankel needs --n >= 1 and --ell >= 0")
    horizon = args.horizon if args.horizon is not None else 4 * n * (n + 1)
    if horizon < 0:
        raise UsageError("--horizon must be >= 0")
    source = {"brute": "brute_force"}.get(args.source, args.source)
    if source != "brute_force" and ell > n + 1:
        raise UsageError(
            f"--source {args.source} needs --ell <= {n + 1}; "
            "only brute force reaches larger shifts"
        )
    report = hankel_sequence(n, ell, horizon, source)
    code = EXIT_OK if report.passed else EXIT_CHECK_FAILED
    if args.format == "json":
        payload = report.to_json_dict()
        payload["command"] = "hankel"
        return code, _dump_json(payload)
    if args.format == "csv":
        return code, _csv_table(("n", "ell", "j", "delta", "source"), report.csv_rows())
    lines = [f"n={n} ell={ell} horizon={horizon} source={source}"]
    for j, v in enumerate(report.values):
        lines.append(f"{j:4d} {v}")
    for c in report.checks:
        lines.append(_check_line(c))
    return code, "\n".join(lines) + "\n"


def _check_line(c) -> str:
    status = "PASS" if c.passed else "FAIL"
    line = f"{status} {c.name}"
    if c.detail:
        line += f" ({c.detail})"
    if c.counterexample is not None:
        j, expected, got = c.counterexample
        line += f" at j={j}: expected {expected}, got {got}"
    return line


def _cmd_verify(args) -> tuple:
    n_values = _parse_n_range(args.n)
    checks = run_suite(args.suite, n_values)
    passed = all(c.passed for c in checks)
    code = EXIT_OK if passed else EXIT_CHECK_FAILED
    if args.format == "json":
        payload = {
            "command": "verify",
            "suite": args.suite,
            "n_values": n_values,
            "pass": passed,
            "checks": [c.to_json_dict() for c in checks],
        }
        return code, _dump_json(payload)
    if args.format == "csv":
        rows = [
            (c.name, "pass" if c.passed else "fail", c.detail)
            for c in checks
        ]
        return code, _csv_table(("check", "status", "detail"), rows)
    lines = [_check_line(c) for c in checks]
    lines.append(f"{'PASS' if passed else 'FAIL'} suite={args.suite} "
                 f"({sum(c.passed for c in checks)}/{len(checks)} checks)")
    return code, "\n".join(lines) + "\n"


def _cmd_modp(args) -> tuple:
    if args.p is None:
        raise UsageError("modp needs --p")
    if not is_prime(args.p):
        raise UsageError(f"--p must be prime, got {args.p}")
    if args.n < 1 or args.ell < 0 or args.max_steps < 1:
        raise UsageError("modp needs --n >= 1, --ell >= 0, --max-steps >= 1")
    report = modp_analysis(args.n, args.ell, args.p, max_steps=args.max_steps)
    # inconclusive is exit 0; a failed comparison check is a real failure
    code = EXIT_OK if report.passed else EXIT_CHECK_FAILED
    if args.format == "json":
        payload = report.to_json_dict()
        payload["command"] = "modp"
        return code, _dump_json(payload)
    if args.format == "csv":
        rows = [(
            report.n, report.ell, report.p,
            "yes" if report.conclusive else "no",
            report.hfraction_preperiod, report.hfraction_period,
            report.hankel_preperiod, report.hankel_period,
        )]
        header = ("n", "ell", "p", "conclusive",
                  "hfraction_preperiod", "hfraction_period",
                  "hankel_preperiod", "hankel_period")
        return code, _csv_table(header, rows)
    lines = [f"n={report.n} ell={report.ell} p={report.p}"]
    if not report.conclusive:
        lines.append(f"inconclusive: no cycle within {report.max_steps} steps")
    else:
        lines.append(
            f"fraction stream: preperiod={report.hfraction_preperiod} "
            f"period={report.hfraction_period}"
            + (" (terminated)" if report.hfraction_terminated else "")
        )
        lines.append(
            f"determinant stream: preperiod={report.hankel_preperiod} "
            f"period={report.hankel_period} "
            f"(window {report.hankel_window})"
        )
    for c in report.checks:
        lines.append(_check_line(c))
    return code, "\n".join(lines) + "\n"


def _cmd_scan(args) -> tuple:
    n = args.n
    if n < 1:
        raise UsageError("scan needs --n >= 1")
    ell = args.ell if args.ell is not None else n + 2
    if ell < n + 2:
        raise UsageError(
            f"scan explores beyond the proved range: --ell >= {n + 2} "
            f"(shifts up to {n + 1} are covered by `verify`)"
        )
    horizon = args.horizon if args.horizon is not None else 4 * n * (n + 1)
    if horizon < 1:
        raise UsageError("--horizon must be >= 1")
    report = conjecture_scan(n, ell, horizon)
    if args.format == "json":
        payload = report.to_json_dict()
        payload["command"] = "scan"
        return EXIT_OK, _dump_json(payload)
    if args.format == "csv":
        rows = [(report.n, report.ell, j, int(v), "brute_force")
                for j, v in enumerate(report.values)]
        return EXIT_OK, _csv_table(("n", "ell", "j", "delta", "source"), rows)
    lines = [
        f"n={report.n} ell={report.ell} horizon={report.horizon} (exploratory)",
        f"values in [{report.value_min}, {report.value_max}], "
        f"max |delta| = {report.max_abs}",
        f"periodicity: {report.periodicity_verdict}",
    ]
    return EXIT_OK, "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmetallic",
        description="Exact q-metallic series, periodic Hankel fractions, "
        "and Hankel determinant verification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("series", help="Taylor coefficients of the q-metallic series")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prec", type=int, default=None,
                   help="number of coefficients (default: HM_DEFAULT_PRECISION or 24)")
    add_common(p)
    p.set_defaults(run=_cmd_series)

    p = sub.add_parser("hfrac", help="periodic Hankel fraction of the series")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, default=0,
                   help="coefficient shift, 0..n+1 (default 0)")
    add_common(p)
    p.set_defaults(run=_cmd_hfrac)

    p = sub.add_parser("hankel", help="Hankel determinant table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--horizon", type=int, default=None,
                   help="number of determinants (default: two periods)")
    p.add_argument("--source", choices=("formula", "brute", "both"), default="both")
    add_common(p)
    p.set_defaults(run=_cmd_hankel)

    p = sub.add_parser("verify", help="run a theorem-check suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--n", default="1..6",
                   help="values like '5', '1..6', or '1,3,5' (default 1..6)")
    add_common(p)
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("modp", help="prime-field fraction and determinant cycles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max-steps", type=int, default=4000)
    add_common(p)
    p.set_defaults(run=_cmd_modp)

    p = sub.add_parser("scan", help="explore determinants beyond the proved shifts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, default=None,
                   help="shift to scan, at least n+2 (default n+2)")
    p.add_argument("--horizon", type=int, default=None,
                   help="window length (default: two periods)")
    add_common(p)
    p.set_defaults(run=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = args.run(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
