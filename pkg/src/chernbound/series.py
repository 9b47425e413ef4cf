"""Truncated univariate power series over the rationals.

A series is a plain list of Fraction coefficients, index = exponent,
always carrying exactly `order` entries (degrees 0 .. order-1).  These
helpers back the total-Chern-class expansions of hypersurfaces and the
logarithm step of the Todd class; everything is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Series = list[Fraction]


def series_fit(coeffs: Sequence[int | Fraction], order: int) -> Series:
    """Pad or truncate to exactly `order` coefficients."""
    out = [Fraction(c) for c in coeffs[:order]]
    out.extend(Fraction(0) for _ in range(order - len(out)))
    return out


def series_mul(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> Series:
    out = [Fraction(0)] * order
    for i, ca in enumerate(a):
        if i >= order or not ca:
            continue
        for j, cb in enumerate(b):
            if i + j >= order:
                break
            if cb:
                out[i + j] += ca * cb
    return out


def series_inverse(a: Sequence[Fraction], order: int) -> Series:
    """Multiplicative inverse; requires a nonzero constant term."""
    if not a or a[0] == 0:
        raise ValueError("series with zero constant term has no inverse")
    lead = Fraction(a[0])
    out = [Fraction(0)] * order
    out[0] = 1 / lead
    for k in range(1, order):
        acc = Fraction(0)
        for j in range(1, min(k, len(a) - 1) + 1):
            acc += Fraction(a[j]) * out[k - j]
        out[k] = -acc / lead
    return out


def series_log(a: Sequence[Fraction], order: int) -> Series:
    """Logarithm of a series with constant term 1.

    Uses (log a)' = a'/a followed by termwise integration, which keeps
    every coefficient an exact Fraction.
    """
    if not a or a[0] != 1:
        raise ValueError("series logarithm needs constant term 1")
    deriv = [Fraction((i + 1) * a[i + 1]) if i + 1 < len(a) else Fraction(0) for i in range(order)]
    quotient = series_mul(deriv, series_inverse(a, order), order)
    out = [Fraction(0)] * order
    for k in range(1, order):
        out[k] = quotient[k - 1] / k
    return out


def binomial_power_series(a: int, exponent: int, order: int) -> Series:
    """(1 + a*t)^exponent for a (possibly negative) integer exponent."""
    base = series_fit([1, a], order)
    if exponent >= 0:
        out = series_fit([1], order)
        for _ in range(exponent):
            out = series_mul(out, base, order)
        return out
    inv = series_inverse(base, order)
    out = series_fit([1], order)
    for _ in range(-exponent):
        out = series_mul(out, inv, order)
    return out
