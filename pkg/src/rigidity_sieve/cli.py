"""Command-line interface.

Four subcommands: `query` (invariant panel and sieve verdict for one
(d, g, r)), `sweep` (one row per (d, g) over a degree range, CSV or
JSON), `verify` (the named verification suite, exit code 1 when
violations are found), and `split` (stable-split certificate for a
divisor class on a ruled surface).

Exit codes: 0 success / nothing to report, 1 violations or failed
preconditions, 2 usage errors or malformed input.  JSON payloads are
byte-stable for fixed inputs except for the elapsed-time metadata field,
which CSV output omits entirely.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing
import sys
import time

from . import bounds, sieve, surfaces, verify
from .bounds import CurveClass
from .surfaces import DivisorClass

SCHEMA = "rigidity-sieve/1"
MAX_INPUT = 2**63 - 1

_VERDICT_LABEL = {
    sieve.SURVIVORS: "survivor",
    sieve.EXCLUDED: "excluded",
    sieve.OUT_OF_SCOPE: "out-of-scope",
}


def bounded_int(text: str) -> int:
    """Integer argument type accepting magnitudes up to 2^63 - 1."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if abs(value) > MAX_INPUT:
        raise argparse.ArgumentTypeError(f"magnitude exceeds 2^63 - 1: {text}")
    return value


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------- query


def build_query_report(d: int, g: int, r: int) -> dict:
    """The full invariant panel for one (d, g, r); keys are present
    exactly when the corresponding quantity is defined."""
    curve = CurveClass(d, g, r)
    invariants = {
        "rho": bounds.brill_noether(curve),
        "lambda": bounds.euler_normal(curve),
    }
    if d >= r:
        invariants["pi"] = bounds.max_genus_pi(d, r)
    if d >= r + 2:
        profile = bounds.castelnuovo_profile(d, r)
        invariants["pi1"] = profile.pi1
        invariants["pi2"] = profile.pi2
    invariants["embed_cap"] = bounds.embed_dim_cap(d, g)
    report = {
        "schema": SCHEMA,
        "command": "query",
        "input": {"d": d, "g": g, "r": r},
        "invariants": invariants,
    }
    if r == 3:
        if g >= 5 and d <= g:
            report["verdict"] = sieve.r3_sieve(d, g).to_dict()
        outcome = sieve.r3_classify(d, g)
        r3_outcome = {"kind": outcome.kind, "rendered": outcome.render()}
        if outcome.image_dim is not None:
            r3_outcome["image_dim"] = outcome.image_dim
        report["r3_outcome"] = r3_outcome
    else:
        report["verdict"] = sieve.scan(d, g, r).to_dict()
        if g >= 1:
            report["range_thm41"] = sieve.range_thm41(d, g, r)
    return report


def _render_query_text(report: dict) -> str:
    lines = []
    inp = report["input"]
    lines.append(f"input: d={inp['d']} g={inp['g']} r={inp['r']}")
    for key, value in report["invariants"].items():
        lines.append(f"{key}: {value}")
    if "range_thm41" in report:
        lines.append(
            "range_thm41: " + ("in-range" if report["range_thm41"] else "out-of-range")
        )
    if "verdict" in report:
        verdict = report["verdict"]
        lines.append(f"verdict: {verdict['outcome']}")
        for reason in verdict["reasons"]:
            lines.append(f"  reason: {reason}")
        for w in verdict["witnesses"]:
            if "case" in w:
                lines.append(
                    f"  witness: alpha={w['alpha']} case={w['case']}"
                    f" slack={w['slack']} i={w['i']} j={w['j']}"
                )
            else:
                lines.append(
                    f"  witness: alpha={w['alpha']} branch={w['branch']} slack={w['slack']}"
                )
    if "r3_outcome" in report:
        lines.append(f"classification: {report['r3_outcome']['rendered']}")
    return "\n".join(lines) + "\n"


def cmd_query(args: argparse.Namespace) -> int:
    report = build_query_report(args.d, args.g, args.r)
    if args.format == "json":
        sys.stdout.write(_dump_json(report))
    else:
        sys.stdout.write(_render_query_text(report))
    return 0


# ---------------------------------------------------------------- sweep


def _sweep_row(d: int, g: int, r: int) -> dict:
    if r == 3:
        verdict = sieve.r3_sieve(d, g)
        in_range = None
    else:
        verdict = sieve.scan(d, g, r)
        in_range = sieve.range_thm41(d, g, r) if g >= 1 else None
    return {
        "d": d,
        "g": g,
        "r": r,
        "verdict": _VERDICT_LABEL[verdict.outcome],
        "witnesses": len(verdict.witnesses),
        "alpha_list": [w.alpha for w in verdict.witnesses],
        "range_thm41": in_range,
    }


def _sweep_chunk(args: tuple) -> list:
    r, d_lo, d_hi, g_max, in_range_only = args
    rows = []
    for d in range(d_lo, d_hi + 1):
        if r == 3:
            if d < 3:
                continue
            g_hi = bounds.max_genus_pi(d, 3)
            if g_max is not None:
                g_hi = min(g_hi, g_max)
            for g in range(max(d, 5), g_hi + 1):
                rows.append(_sweep_row(d, g, 3))
        else:
            if g_max is not None:
                g_hi = g_max
            elif in_range_only:
                g_hi = sieve.range_g_limit(d, r)
            else:
                g_hi = 2 * d
            for g in range(1, g_hi + 1):
                if in_range_only and not sieve.range_thm41(d, g, r):
                    continue
                rows.append(_sweep_row(d, g, r))
    return rows


def run_sweep(r: int, d_max: int, g_max: int = None, in_range_only: bool = False) -> list:
    """All sweep rows, ordered by (d, g).

    For r >= 4 the genus range defaults to 2d per degree, or to the
    in-range genus limit when filtering to the hypothesis range; for
    r = 3 the grid is the reduced range g in [max(d, 5), pi(d, 3)].
    """
    workers = verify.resolve_workers()
    if workers > 1 and d_max >= 128:
        step = max(16, d_max // (4 * workers))
        chunks = [
            (r, lo, min(lo + step - 1, d_max), g_max, in_range_only)
            for lo in range(1, d_max + 1, step)
        ]
        with multiprocessing.Pool(workers) as pool:
            parts = pool.map(_sweep_chunk, chunks)
        rows = [row for part in parts for row in part]
    else:
        rows = _sweep_chunk((r, 1, d_max, g_max, in_range_only))
    rows.sort(key=lambda row: (row["d"], row["g"]))
    return rows


CSV_COLUMNS = ["d", "g", "r", "verdict", "witnesses", "alpha_list", "range_thm41"]


def render_sweep_csv(rows: list) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        if row["range_thm41"] is None:
            range_label = ""
        else:
            range_label = "in-range" if row["range_thm41"] else "out-of-range"
        writer.writerow(
            [
                row["d"],
                row["g"],
                row["r"],
                row["verdict"],
                row["witnesses"],
                ",".join(str(a) for a in row["alpha_list"]),
                range_label,
            ]
        )
    return buffer.getvalue()


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.r == 3 and args.in_range_only:
        raise ValueError("--in-range-only requires r >= 4")
    started = time.monotonic()
    rows = run_sweep(args.r, args.d_max, args.g_max, args.in_range_only)
    if args.format == "csv":
        sys.stdout.write(render_sweep_csv(rows))
    else:
        payload = {
            "schema": SCHEMA,
            "command": "sweep",
            "params": {
                "r": args.r,
                "d_max": args.d_max,
                "g_max": args.g_max,
                "in_range_only": args.in_range_only,
            },
            "rows": rows,
            "metadata": {"elapsed_s": round(time.monotonic() - started, 3)},
        }
        sys.stdout.write(_dump_json(payload))
    return 0


# ---------------------------------------------------------------- verify

SUITES = ("spots", "r3", "thm41", "derived", "case34", "r11", "r5window", "splits", "all")


def _run_suite(args: argparse.Namespace) -> list:
    suite = args.suite
    reports = []
    if suite in ("spots", "all"):
        reports.append(verify.verify_spot_values())
    if suite in ("r3", "all"):
        reports.append(verify.verify_thm_r3((args.d_max or 200) if suite == "r3" else 200))
    if suite == "thm41":
        if args.r is None:
            raise ValueError("verify thm41 requires --r")
        reports.append(
            verify.verify_thm41(args.r, args.d_max or 500, honor_exception=not args.no_exception)
        )
    elif suite == "all":
        for r in range(4, 11):
            reports.append(verify.verify_thm41(r, args.d_max or 500))
    if suite == "derived":
        if args.r is None:
            raise ValueError("verify derived requires --r")
        reports.append(verify.verify_derived_claims(args.r, args.alpha_max))
    elif suite == "all":
        for r in range(4, 11):
            reports.append(verify.verify_derived_claims(r, args.alpha_max))
    if suite in ("case34", "all"):
        reports.append(verify.verify_case34_never(args.r_lo, args.r_hi, args.d_max or 400))
    if suite == "r11":
        if args.r is None:
            raise ValueError("verify r11 requires --r")
        reports.append(verify.verify_r_ge_11(args.r, args.d_max or 400))
    elif suite == "all":
        for r in (11, 12):
            reports.append(verify.verify_r_ge_11(r, args.d_max or 400))
    if suite in ("r5window", "all"):
        reports.append(verify.verify_r5_window(args.d_lo, args.d_hi))
    if suite in ("splits", "all"):
        reports.append(verify.verify_splits(args.a_max, args.b_max, args.e_max))
    return reports


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.monotonic()
    reports = _run_suite(args)
    all_ok = all(rep.ok for rep in reports)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "verify",
            "suite": args.suite,
            "ok": all_ok,
            "reports": [rep.to_dict() for rep in reports],
            "metadata": {"elapsed_s": round(time.monotonic() - started, 3)},
        }
        sys.stdout.write(_dump_json(payload))
    else:
        for rep in reports:
            sys.stdout.write(
                f"suite={rep.suite} ok={rep.ok} checked={rep.checked}"
                f" violations={len(rep.violations)}\n"
            )
            for violation in rep.violations:
                sys.stdout.write("  " + json.dumps(violation, sort_keys=True) + "\n")
        sys.stdout.write(("PASS" if all_ok else "FAIL") + "\n")
    return 0 if all_ok else 1


# ---------------------------------------------------------------- split


def cmd_split(args: argparse.Namespace) -> int:
    try:
        divisor = DivisorClass(args.a, args.b, args.e)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    try:
        cert = surfaces.find_stable_split(divisor)
        if cert is None:
            raise ValueError("no split into smooth classes meeting in >= 3 points")
    except ValueError as exc:
        if args.format == "json":
            payload = {
                "schema": SCHEMA,
                "command": "split",
                "input": {"a": args.a, "b": args.b, "e": args.e},
                "certificate": None,
                "diagnostic": str(exc),
            }
            sys.stdout.write(_dump_json(payload))
        else:
            sys.stdout.write(f"no certificate: {exc}\n")
        return 1
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "split",
            "input": {"a": args.a, "b": args.b, "e": args.e},
            "certificate": cert.to_dict(),
        }
        sys.stdout.write(_dump_json(payload))
    else:
        sys.stdout.write(
            f"{cert.d1.as_tuple()} + {cert.d2.as_tuple()}"
            f" intersection {cert.intersection}\n"
        )
    return 0


# ----------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rigidity-sieve",
        description="Exact-integer sieve and invariants for space-curve moduli.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_query = sub.add_parser("query", help="invariant panel and verdict for one (d, g, r)")
    p_query.add_argument("--d", type=bounded_int, required=True)
    p_query.add_argument("--g", type=bounded_int, required=True)
    p_query.add_argument("--r", type=bounded_int, required=True)
    p_query.add_argument("--format", choices=("text", "json"), default="text")
    p_query.set_defaults(func=cmd_query)

    p_sweep = sub.add_parser("sweep", help="verdict table over a degree range")
    p_sweep.add_argument("--r", type=bounded_int, required=True)
    p_sweep.add_argument("--d-max", type=bounded_int, required=True)
    p_sweep.add_argument("--g-max", type=bounded_int, default=None)
    p_sweep.add_argument("--in-range-only", action="store_true")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--r", type=bounded_int, default=None)
    p_verify.add_argument("--d-max", type=bounded_int, default=None)
    p_verify.add_argument("--alpha-max", type=bounded_int, default=60)
    p_verify.add_argument("--no-exception", action="store_true")
    p_verify.add_argument("--r-lo", type=bounded_int, default=4)
    p_verify.add_argument("--r-hi", type=bounded_int, default=10)
    p_verify.add_argument("--d-lo", type=bounded_int, default=101)
    p_verify.add_argument("--d-hi", type=bounded_int, default=113)
    p_verify.add_argument("--a-max", type=bounded_int, default=12)
    p_verify.add_argument("--b-max", type=bounded_int, default=60)
    p_verify.add_argument("--e-max", type=bounded_int, default=4)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_split = sub.add_parser("split", help="stable-split certificate for a divisor class")
    p_split.add_argument("--a", type=bounded_int, required=True)
    p_split.add_argument("--b", type=bounded_int, required=True)
    p_split.add_argument("--e", type=bounded_int, required=True)
    p_split.add_argument("--format", choices=("text", "json"), default="text")
    p_split.set_defaults(func=cmd_split)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
