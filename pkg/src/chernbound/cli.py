"""Command-line interface.

Commands:
    emit           print one bound polynomial (text, JSON, or LaTeX)
    verify         run the full inequality suite over a catalog
    ratio-bound    the universal Chern-ratio constant c_n with witness
    rr-bound       the Riemann-Roch tail bound polynomial Q(x, y, z)
    uniform-bound  sup of an envelope over a (v, w) box

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 internal integrity error.  Reports are deterministic byte for byte;
JSON reports carry "schema": "v1".  The default catalog can be replaced
with --catalog PATH or the CHERNBOUND_CATALOG environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .bounds import build_P_pm, build_Q, build_R_pm, chern_ratio_witness, ratio_bound_table, uniform_bound
from .chern import ConsistencyError, DegenerateConstantError
from .partitions import parse_partition
from .polynomial import MultiPoly
from .todd import describe_tail_margin, rr_tail_bound
from .varieties import IntegrityError, default_catalog, load_catalog
from .verify import frac_str, run_verification

CATALOG_ENV = "CHERNBOUND_CATALOG"
DEFAULT_MAX_N = 5
KINDS = ("P-", "P+", "Q-", "Q+", "Q", "R-", "R+")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chernbound",
        description="Universal Chern-number bound polynomials over exact rationals.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    emit = sub.add_parser("emit", help="print one bound polynomial")
    emit.add_argument("--n", type=int, required=True, help="ambient dimension")
    emit.add_argument("--kind", choices=KINDS, required=True)
    emit.add_argument("--lambda", dest="lam", help='partition, e.g. "2,1" (P and Q kinds)')
    emit.add_argument("--i", type=int, help="mixed-degree index (R kinds)")
    emit.add_argument("--format", choices=("text", "json", "latex"), default="text")
    emit.add_argument("--output", help="write to file instead of stdout")
    _add_cap_flags(emit)

    verify = sub.add_parser("verify", help="run the inequality suite over a catalog")
    verify.add_argument("--n", type=int, help="restrict to one dimension")
    verify.add_argument("--catalog", help="catalog JSON path")
    verify.add_argument("--format", choices=("text", "json"), default="json")
    verify.add_argument("--output", help="write report to file instead of stdout")
    _add_cap_flags(verify)

    ratio = sub.add_parser("ratio-bound", help="universal Chern-ratio constant")
    ratio.add_argument("--n", type=int, required=True)
    ratio.add_argument("--format", choices=("text", "json"), default="text")
    _add_cap_flags(ratio)

    rr = sub.add_parser("rr-bound", help="Riemann-Roch tail bound polynomial")
    rr.add_argument("--n", type=int, required=True)
    rr.add_argument("--m", type=int, required=True, help="truncation index, 0 <= m < n")
    rr.add_argument("--variety", help="evaluate on one catalog entry")
    rr.add_argument("--catalog", help="catalog JSON path")
    rr.add_argument("--format", choices=("text", "json"), default="text")
    _add_cap_flags(rr)

    uniform = sub.add_parser("uniform-bound", help="sup of an envelope over a box")
    uniform.add_argument("--n", type=int, required=True)
    uniform.add_argument("--lambda", dest="lam", required=True)
    uniform.add_argument("--v", required=True, help="upper bound for x = L^n (rational)")
    uniform.add_argument("--w", required=True, help="upper bound for y = K*L^{n-1} (rational)")
    uniform.add_argument("--format", choices=("text", "json"), default="text")
    _add_cap_flags(uniform)

    return parser


def _add_cap_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-n",
        type=int,
        default=DEFAULT_MAX_N,
        help=f"refuse dimensions above this cap (default {DEFAULT_MAX_N}); "
        "raise it explicitly for large runs",
    )


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise UsageError(f"dimension must be at least 1, got {n}")
    if n > cap:
        raise UsageError(
            f"dimension {n} exceeds the cap {cap}; pass --max-n {n} to allow it "
            "(construction cost grows combinatorially)"
        )


class UsageError(Exception):
    pass


def _load_specs(path_flag: str | None):
    path = path_flag or os.environ.get(CATALOG_ENV)
    if path:
        return load_catalog(path)
    return default_catalog()


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse rational number from {text!r}") from None


def _polynomial_payload(poly: MultiPoly, fmt: str) -> str:
    if fmt == "text":
        return poly.to_text() + "\n"
    if fmt == "latex":
        return poly.to_latex() + "\n"
    raise UsageError(f"unknown polynomial format {fmt!r}")


def _emit_payload(args) -> str:
    _check_cap(args.n, args.max_n)
    kind = args.kind
    if kind.startswith("R"):
        if args.i is None:
            raise UsageError("R kinds need --i")
        if args.lam is not None:
            raise UsageError("R kinds take --i, not --lambda")
        pair = build_R_pm(args.i, args.n)
        poly = pair.lower if kind == "R-" else pair.upper
        index: dict = {"i": args.i}
    else:
        if args.lam is None:
            raise UsageError(f"kind {kind} needs --lambda")
        lam = parse_partition(args.lam)
        if not lam:
            raise UsageError("the empty partition has no bound polynomial")
        index = {"lambda": list(lam)}
        if kind.startswith("P"):
            lower, upper = build_P_pm(lam, args.n)
            poly = (lower if kind == "P-" else upper).to_multipoly()
        else:
            q = build_Q(lam, args.n)
            poly = {"Q-": q.lower, "Q+": q.upper, "Q": q.envelope}[kind]
    if args.format == "json":
        payload = {
            "schema": "v1",
            "command": "emit",
            "n": args.n,
            "kind": kind,
            **index,
            "polynomial": poly.to_json_dict(),
        }
        return json.dumps(payload, indent=2) + "\n"
    return _polynomial_payload(poly, args.format)


def _verify_payload(args) -> tuple[str, bool]:
    specs = _load_specs(args.catalog)
    if args.n is not None:
        _check_cap(args.n, args.max_n)
        dims = [args.n]
    else:
        dims = sorted({s.dimension for s in specs if s.dimension <= args.max_n})
    report = run_verification(specs, dims)
    ok = report["summary"]["pass"]
    if args.format == "json":
        return json.dumps(report, indent=2) + "\n", ok
    lines = []
    for row in report["rows"]:
        mark = "ok " if row["pass"] else "FAIL"
        lam = ",".join(str(p) for p in row["lambda"]) if row["lambda"] else "-"
        lower = row["lower"] if row["lower"] is not None else "."
        upper = row["upper"] if row["upper"] is not None else "."
        lines.append(
            f"[{mark}] {row['variety']:<14} {row['quantity']:<28} lambda={lam:<8} "
            f"{lower} <= {row['value']} <= {upper}"
        )
    summary = report["summary"]
    lines.append(
        f"{summary['rows']} checks on {summary['varieties']} varieties, "
        f"{summary['failed']} failed"
    )
    return "\n".join(lines) + "\n", ok


def _ratio_payload(args) -> str:
    _check_cap(args.n, args.max_n)
    table = ratio_bound_table(args.n)
    value = max(total for _, total in table)
    witness = chern_ratio_witness(args.n)
    if args.format == "json":
        payload = {
            "schema": "v1",
            "command": "ratio-bound",
            "n": args.n,
            "value": frac_str(value),
            "witness": list(witness),
            "table": [
                {"lambda": list(lam), "coefficient_sum": frac_str(total)}
                for lam, total in table
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = [f"c_{args.n} = {frac_str(value)}  (attained at lambda = {','.join(map(str, witness))})"]
    for lam, total in table:
        lines.append(f"  lambda={','.join(map(str, lam)):<10} sum|coeff| = {frac_str(total)}")
    return "\n".join(lines) + "\n"


def _rr_payload(args) -> str:
    _check_cap(args.n, args.max_n)
    poly = rr_tail_bound(args.n, args.m)
    if args.variety is None:
        if args.format == "json":
            payload = {
                "schema": "v1",
                "command": "rr-bound",
                "n": args.n,
                "m": args.m,
                "polynomial": poly.to_json_dict(),
            }
            return json.dumps(payload, indent=2) + "\n"
        return poly.to_text() + "\n"
    specs = _load_specs(args.catalog)
    matches = [s for s in specs if s.id == args.variety]
    if not matches:
        raise UsageError(f"no catalog entry with id {args.variety!r}")
    spec = matches[0]
    if spec.dimension != args.n:
        raise UsageError(
            f"catalog entry {spec.id} has dimension {spec.dimension}, not {args.n}"
        )
    report = describe_tail_margin(spec, args.m)
    if args.format == "json":
        payload = {
            "schema": "v1",
            "command": "rr-bound",
            "n": args.n,
            "m": args.m,
            "variety": spec.id,
            "polynomial": poly.to_json_dict(),
            "rows": [
                {
                    "k": row["k"],
                    "tail": frac_str(row["tail"]),
                    "bound": frac_str(row["bound"]),
                    "margin": frac_str(row["margin"]),
                }
                for row in report["rows"]
            ],
            "margin": frac_str(report["margin"]),
            "pass": report["margin"] >= 0,
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = [poly.to_text()]
    for row in report["rows"]:
        lines.append(
            f"k={row['k']}: |tail| = {frac_str(row['tail'])} <= {frac_str(row['bound'])}"
            f"  (margin {frac_str(row['margin'])})"
        )
    lines.append(f"worst margin over k: {frac_str(report['margin'])}")
    return "\n".join(lines) + "\n"


def _uniform_payload(args) -> str:
    _check_cap(args.n, args.max_n)
    lam = parse_partition(args.lam)
    if not lam:
        raise UsageError("the empty partition has no bound polynomial")
    v = _parse_rational(args.v)
    w = _parse_rational(args.w)
    value = uniform_bound(args.n, lam, v, w)
    if args.format == "json":
        payload = {
            "schema": "v1",
            "command": "uniform-bound",
            "n": args.n,
            "lambda": list(lam),
            "v": frac_str(v),
            "w": frac_str(w),
            "value": frac_str(value),
        }
        return json.dumps(payload, indent=2) + "\n"
    return f"{frac_str(value)}\n"


def _write(payload: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "emit":
            _write(_emit_payload(args), args.output)
            return 0
        if args.command == "verify":
            payload, ok = _verify_payload(args)
            _write(payload, args.output)
            return 0 if ok else 1
        if args.command == "ratio-bound":
            _write(_ratio_payload(args), None)
            return 0
        if args.command == "rr-bound":
            _write(_rr_payload(args), None)
            return 0
        if args.command == "uniform-bound":
            _write(_uniform_payload(args), None)
            return 0
        raise UsageError(f"unknown command {args.command!r}")
    except (UsageError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IntegrityError, DegenerateConstantError, ConsistencyError) as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
