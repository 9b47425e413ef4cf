"""Run every bound inequality against the exact oracle and collect rows.

A verification row records one exact inequality evaluation:

    {variety, lambda, quantity, lower, value, upper, pass}

with rationals rendered as strings ("-3", "5/2") and null for a missing
side.  Rows are generated in a fixed order (catalog order, then check
kind, then index), so reports are byte-deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .bounds import build_P_pm, build_Q, build_R_pm
from .partitions import all_partitions_up_to, format_partition, weight
from .varieties import (
    VarietySpec,
    check_log_concavity,
    check_nef_chain,
    intersection_vector,
)


def frac_str(value: int | Fraction) -> str:
    return str(Fraction(value))


def _row(
    variety: str,
    lam,
    quantity: str,
    lower: int | Fraction | None,
    value: int | Fraction,
    upper: int | Fraction | None,
) -> dict:
    ok = True
    if lower is not None and not Fraction(lower) <= Fraction(value):
        ok = False
    if upper is not None and not Fraction(value) <= Fraction(upper):
        ok = False
    return {
        "variety": variety,
        "lambda": list(lam) if lam is not None else None,
        "quantity": quantity,
        "lower": frac_str(lower) if lower is not None else None,
        "value": frac_str(value),
        "upper": frac_str(upper) if upper is not None else None,
        "pass": ok,
    }


def verify_variety(spec: VarietySpec) -> list[dict]:
    """All inequality rows for one catalog entry."""
    n = spec.dimension
    iv = intersection_vector(spec)
    x = iv.kl[0]
    y = iv.kl[1]
    point = {"x": x, "y": y}
    rows: list[dict] = []

    # Admissibility of the evaluation point: K + (n+1)L is nef, so
    # y + (n+1)x >= 0; every homogenized bound below assumes it.
    rows.append(_row(spec.id, None, "adjoint-degree", 0, y + (n + 1) * x, None))

    partitions = all_partitions_up_to(n)
    for lam in partitions:
        d = weight(lam)
        value = iv.chern_number(lam)
        p_lower, p_upper = build_P_pm(lam, n)
        rows.append(
            _row(
                spec.id,
                lam,
                "chern-number-sandwich",
                p_lower.evaluate(iv.kl),
                value,
                p_upper.evaluate(iv.kl),
            )
        )

    for i in range(1, n + 1):
        pair = build_R_pm(i, n)
        value = Fraction(iv.kl[i]) * Fraction(x) ** (i - 1)
        rows.append(
            _row(
                spec.id,
                None,
                f"mixed-degree-sandwich(i={i})",
                pair.lower.evaluate(point),
                value,
                pair.upper.evaluate(point),
            )
        )

    for lam in partitions:
        d = weight(lam)
        q = build_Q(lam, n)
        envelope_value = q.envelope.evaluate(point)
        rows.append(
            _row(
                spec.id,
                lam,
                "homogenized-bound",
                None,
                abs(Fraction(iv.chern_number(lam))) * Fraction(x) ** (d - 1),
                envelope_value,
            )
        )
        rows.append(
            _row(
                spec.id,
                lam,
                "envelope-domination",
                None,
                max(q.upper.evaluate(point), -q.lower.evaluate(point)),
                envelope_value,
            )
        )

    for lam in partitions:
        report = check_nef_chain(spec, lam)
        rows.append(
            _row(spec.id, lam, "twisted-nef-chain", 0, report.value, report.upper)
        )

    concavity = check_log_concavity(spec)
    for k, margin in enumerate(concavity.margins, start=1):
        rows.append(_row(spec.id, None, f"log-concavity(k={k})", 0, margin, None))

    return rows


def run_verification(specs: Sequence[VarietySpec], dimensions: Sequence[int]) -> dict:
    """The full suite over all catalog entries of the given dimensions."""
    wanted = [s for s in specs if s.dimension in set(dimensions)]
    rows: list[dict] = []
    for spec in wanted:
        rows.extend(verify_variety(spec))
    failed = sum(1 for row in rows if not row["pass"])
    return {
        "schema": "v1",
        "command": "verify",
        "dimensions": sorted(set(dimensions)),
        "varieties": [s.id for s in wanted],
        "rows": rows,
        "summary": {
            "varieties": len(wanted),
            "rows": len(rows),
            "failed": failed,
            "pass": failed == 0,
        },
    }
