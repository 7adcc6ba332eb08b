"""Command-line front end.

Exit codes:
    0  success, all internal cross-checks passed
    2  usage error (bad p, d, point, or arguments)
    3  falsification: the counting method, a formula, or a duality relation
       disagreed with its cross-check
    4  enumeration budget exceeded where enumeration was required
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from . import __version__
from .analysis import (
    DEFAULT_EMBED_CAP,
    SCAN_COLUMNS,
    DualityViolation,
    embedding_degree,
    scan,
    twist_check,
)
from .birational import edwards_to_montgomery, montgomery_to_edwards
from .counting import (
    InconsistencyError,
    NotSupersingularError,
    count,
    criterion_sum,
    is_supersingular,
)
from .curves import EdwardsCurve, NotOnCurveError, enumerate_edwards
from .field import EnumerationBudgetError, FieldError, build_extension, legendre

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3
EXIT_BUDGET = 4


class UsageError(Exception):
    pass


def envelope(command: str, inputs: dict, results: Any, oracle_verified: bool) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "oracle_verified": oracle_verified,
    }


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _text(pairs: dict) -> str:
    def fmt(v):
        if isinstance(v, bool):
            return str(v).lower()
        return str(v)

    return "".join(f"{k}={fmt(v)}\n" for k, v in pairs.items())


def _emit(args, command: str, inputs: dict, results: dict, verified: bool, text: str | None = None):
    if args.format == "json":
        sys.stdout.write(dump_json(envelope(command, inputs, results, verified)))
    else:
        sys.stdout.write(text if text is not None else _text(results))


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_count(args) -> int:
    report, verified = count(args.p, args.d, args.n, args.method, args.budget)
    inputs = {"p": args.p, "d": args.d, "n": args.n, "method": args.method}
    results = report.to_dict()
    if args.n > 1:
        field = build_extension(args.p, args.n, args.budget)
        inputs["reduction_poly"] = list(field.modulus)
    if args.points:
        curve = EdwardsCurve(build_extension(args.p, args.n, args.budget), args.d)
        results["points"] = [P.to_json() for P in enumerate_edwards(curve, args.budget)]
    text = _text(
        {
            "affine": report.affine_count,
            "projective": report.projective_count,
            "trace": report.trace_T,
            "supersingular": report.supersingular,
            "method": report.method,
            "oracle_verified": verified,
        }
    )
    _emit(args, "count", inputs, results, verified, text)
    return EXIT_OK


def cmd_supersingular(args) -> int:
    flag = is_supersingular(args.p, args.d)
    results = {
        "supersingular": flag,
        "p_mod_4": args.p % 4,
        "criterion_residue": criterion_sum(args.p, args.d),
        "legendre_d": legendre(args.d, args.p),
    }
    _emit(args, "supersingular", {"p": args.p, "d": args.d}, results, False, f"{str(flag).lower()}\n")
    return EXIT_OK


def cmd_twist(args) -> int:
    report = twist_check(args.p, args.d, strict=False)
    if report.relation == "dual":
        line = (
            f"{report.order_d} + {report.order_d_inv} = {report.order_d + report.order_d_inv}"
            f" = 2p+2 ({2 * args.p + 2})"
        )
    else:
        line = f"{report.order_d} = {report.order_d_inv} (equal orders)"
    text = f"d={report.d} d_inv={report.d_inv} legendre={report.legendre_d}\n{line}\nholds={str(report.holds).lower()}\n"
    _emit(args, "twist", {"p": args.p, "d": args.d}, report.to_dict(), False, text)
    return EXIT_OK if report.holds else EXIT_INCONSISTENT


def cmd_embed(args) -> int:
    report, verified = count(args.p, args.d, 1, "auto", args.budget)
    k = embedding_degree(report.projective_count, args.p, args.k_cap)
    results = {
        "group_order": report.projective_count,
        "embedding_degree": k,
        "k_cap": args.k_cap,
        "supersingular": report.supersingular,
    }
    text = _text({**results, "embedding_degree": "none" if k is None else k})
    _emit(args, "embed", {"p": args.p, "d": args.d}, results, verified, text)
    if report.supersingular and k != 2:
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_map(args) -> int:
    curve = EdwardsCurve.over_prime(args.p, args.d)
    f = curve.field
    if args.direction == "e2m":
        point = curve.point(args.x, args.y)
        image = edwards_to_montgomery(curve, point)
    else:
        point = curve.montgomery().point(args.x, args.y)
        image = montgomery_to_edwards(curve, point)
    results = {"image": None if image is None else image.to_json(), "special": image is None}
    text = "SPECIAL (no image)\n" if image is None else f"{image}\n"
    inputs = {"p": args.p, "d": args.d, "x": args.x % f.p, "y": args.y % f.p, "direction": args.direction}
    _emit(args, "map", inputs, results, False, text)
    return EXIT_OK


def _parse_d_policy(raw: str) -> list[int] | None:
    if raw == "all":
        return None
    try:
        return [int(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(f"--d must be 'all' or a comma-separated list, got {raw!r}") from exc


def render_scan_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCAN_COLUMNS)
    for rec in records:
        writer.writerow(rec.to_row())
    return buf.getvalue()


def cmd_scan(args) -> int:
    if args.p_min > args.p_max:
        raise UsageError("--p-min must not exceed --p-max")
    d_values = _parse_d_policy(args.d)
    records = list(scan(args.p_min, args.p_max, d_values, args.budget, args.k_cap, args.workers))
    if args.format == "json":
        inputs = {"p_min": args.p_min, "p_max": args.p_max, "d": args.d, "k_cap": args.k_cap}
        verified = all(r.oracle_verified for r in records)
        payload = dump_json(envelope("scan", inputs, [r.to_dict() for r in records], verified))
    else:
        payload = render_scan_csv(records)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edwards-count",
        description="Point counting and supersingularity tools for Edwards curves x^2+y^2=1+dx^2y^2.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--budget", type=int, default=None,
        help="enumeration budget in field elements (default: $EDWARDS_ENUM_BUDGET or 2000000)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def curve_args(p, fmt=("text", "json")):
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--format", choices=fmt, default=fmt[0])

    p = sub.add_parser("count", help="count points of E_d over F_{p^n}")
    curve_args(p)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--method", choices=("auto", "enumerate", "congruence"), default="auto")
    p.add_argument("--points", action="store_true", help="include the enumerated point list (json)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("supersingular", help="test the supersingularity criterion")
    curve_args(p)
    p.set_defaults(func=cmd_supersingular)

    p = sub.add_parser("twist", help="check the E_d / E_{1/d} order relation")
    curve_args(p)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("embed", help="embedding degree of the group of E_d")
    curve_args(p)
    p.add_argument("--k-cap", type=int, default=DEFAULT_EMBED_CAP)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("map", help="apply the Edwards/Montgomery birational map to one point")
    curve_args(p)
    p.add_argument("--x", type=int, required=True, help="x (e2m) or u (m2e)")
    p.add_argument("--y", type=int, required=True, help="y (e2m) or v (m2e)")
    p.add_argument("--direction", choices=("e2m", "m2e"), required=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("scan", help="classify every (p, d) in a prime range")
    p.add_argument("--p-min", type=int, required=True)
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--d", default="all", help="'all' or a comma-separated list of d values")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--k-cap", type=int, default=DEFAULT_EMBED_CAP)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "n", 1) < 1:
            raise UsageError("--n must be >= 1")
        return args.func(args)
    except (UsageError, FieldError, NotOnCurveError, NotSupersingularError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InconsistencyError, DualityViolation, AssertionError) as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except EnumerationBudgetError as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
