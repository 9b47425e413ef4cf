"""Todd classes, Hilbert coefficients, and the Riemann-Roch tail bound.

The Todd class of an n-fold is td = prod x_k / (1 - exp(-x_k)) over the
Chern roots.  Its degree-i component S_i is a universal rational
polynomial in c_1..c_i, computed here exactly by

  1. expanding q(t) = log( t / (1 - exp(-t)) ) as a rational series,
  2. converting power sums of the roots to the c_i by Newton's identity,
  3. exponentiating the resulting logarithm term by term.

By Riemann-Roch, chi(X, kL) = sum_i a_i k^{n-i} with
a_i = (S_i * L^{n-i}) / (n-i)!.  The head of that polynomial (i <= m)
only needs the numbers K^i * L^{n-i}; the tail is controlled by the
universal envelopes Q_lambda, giving a bound polynomial Q(x, y, z) with

  |sum_{i>m} a_i k^{n-i}| <= Q(L^n, K*L^{n-1}, k)   for integers k >= 1,

valid on every n-fold with L ample (so that x = L^n >= 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .chern import ChernExpr
from .partitions import Partition, enumerate_partitions, format_partition, weight
from .polynomial import MultiPoly
from .series import series_fit, series_log
from .varieties import IntersectionVector, VarietySpec, intersection_vector
from .bounds import build_Q

XYZ = ("x", "y", "z")


@lru_cache(maxsize=None)
def _todd_log_series(order: int) -> tuple[Fraction, ...]:
    """Coefficients of q(t) = -log((1 - exp(-t)) / t) through t^(order-1)."""
    g = series_fit(
        [Fraction((-1) ** k, factorial(k + 1)) for k in range(order)], order
    )
    return tuple(-c for c in series_log(g, order))


@lru_cache(maxsize=None)
def _power_sums(i: int) -> tuple[ChernExpr, ...]:
    """Power sums p_1..p_i of the Chern roots as polynomials in the c_j,
    via Newton's identities with e_j = c_j."""
    sums: list[ChernExpr] = []
    for k in range(1, i + 1):
        total = ChernExpr.chern_class(i, k).scale((-1) ** (k - 1) * k)
        for j in range(1, k):
            term = ChernExpr.chern_class(i, j) * sums[k - j - 1]
            total = total + term.scale((-1) ** (j - 1))
        sums.append(total)
    return tuple(sums)


@lru_cache(maxsize=None)
def todd_component(i: int) -> ChernExpr:
    """The degree-i part S_i of the Todd class, exact in c_1..c_i.

    S_0 = 1, S_1 = c_1/2, S_2 = (c_1^2 + c_2)/12, S_3 = c_1 c_2 / 24,
    and so on."""
    if i < 0:
        raise ValueError(f"Todd components are indexed by i >= 0, got {i}")
    if i == 0:
        return ChernExpr.one(0)
    q = _todd_log_series(i + 1)
    power = _power_sums(i)
    log_td = ChernExpr.zero(i)
    for j in range(1, i + 1):
        log_td = log_td + power[j - 1].scale(q[j])
    td = ChernExpr.one(i)
    term = ChernExpr.one(i)
    for m in range(1, i + 1):
        term = term * log_td
        td = td + term.scale(Fraction(1, factorial(m)))
    return td.graded_part(i)


def todd_coefficients(i: int) -> dict[Partition, Fraction]:
    """S_i written on the monomial basis: partition of i -> coefficient."""
    return {
        mono.chern_partition: coeff for mono, coeff in todd_component(i).terms.items()
    }


@dataclass
class HilbertData:
    """chi(X, kL) = sum_i coefficients[i] * k^(n-i), exact rationals."""

    variety_id: str
    dimension: int
    coefficients: tuple[Fraction, ...]

    def value_at(self, k: int) -> Fraction:
        n = self.dimension
        return sum(
            (c * Fraction(k) ** (n - i) for i, c in enumerate(self.coefficients)),
            Fraction(0),
        )

    def tail_at(self, m: int, k: int) -> Fraction:
        n = self.dimension
        return sum(
            (
                c * Fraction(k) ** (n - i)
                for i, c in enumerate(self.coefficients)
                if i > m
            ),
            Fraction(0),
        )


def hilbert_coefficients(spec: VarietySpec) -> HilbertData:
    """The exact Hilbert polynomial coefficients a_i = S_i * L^{n-i} / (n-i)!.

    Refuses entries whose polarization is not flagged ample, since
    Riemann-Roch in this form needs an ample L."""
    if not spec.ample:
        raise ValueError(f"{spec.id}: polarization is not flagged ample")
    iv = intersection_vector(spec)
    return _hilbert_from_vector(iv)


def _hilbert_from_vector(iv: IntersectionVector) -> HilbertData:
    n = iv.dimension
    coeffs = []
    for i in range(n + 1):
        total = Fraction(0)
        if i == 0:
            total = Fraction(iv.kl[0])
        else:
            for lam, c in todd_coefficients(i).items():
                total += c * iv.chern_number(lam)
        coeffs.append(total / factorial(n - i))
    return HilbertData(iv.variety_id, n, tuple(coeffs))


def rr_tail_bound(n: int, m: int) -> MultiPoly:
    """The universal tail bound Q(x, y, z) for truncated Hilbert polynomials.

    For every n-fold with L ample, writing x = L^n, y = K * L^{n-1}:

        |chi(kL) - sum_{i<=m} a_i k^{n-i}| <= Q(x, y, k),  k = 1, 2, ...

    Term by term, |a_i| <= (1/(n-i)!) sum_lambda |t_lambda| *
    |c_lambda * L^{n-i}|, and each |c_lambda * L^{n-i}| is at most
    Q_lambda(x, y) because x^{|lambda|-1} >= 1.  The z-degree is
    n - m - 1 by construction."""
    if n < 1:
        raise ValueError(f"dimension must be at least 1, got {n}")
    if m < 0 or m >= n:
        raise ValueError(f"truncation index must satisfy 0 <= m < n, got {m}")
    total = MultiPoly.zero(XYZ)
    z = MultiPoly.variable(XYZ, "z")
    for i in range(m + 1, n + 1):
        layer = MultiPoly.zero(XYZ)
        for lam in enumerate_partitions(i, n):
            t_lam = todd_coefficients(i).get(lam, Fraction(0))
            if not t_lam:
                continue
            envelope = build_Q(lam, n).envelope
            embedded = MultiPoly(
                XYZ, {(e[0], e[1], 0): c for e, c in envelope.terms.items()}
            )
            layer = layer + abs(t_lam) * embedded
        total = total + Fraction(1, factorial(n - i)) * layer * z ** (n - i)
    if total.degree_in("z") > n - m - 1:
        raise RuntimeError(f"tail bound z-degree exceeds {n - m - 1}")
    return total


def describe_tail_margin(spec: VarietySpec, m: int, k_range: range = range(1, 11)) -> dict:
    """Evaluate the tail bound on one catalog entry.

    Returns the exact margin min_k (bound - |tail|) over the k range,
    together with the per-k values; the margin is nonnegative whenever
    the construction is sound."""
    n = spec.dimension
    data = hilbert_coefficients(spec)
    iv = intersection_vector(spec)
    bound = rr_tail_bound(n, m)
    rows = []
    worst: Fraction | None = None
    for k in k_range:
        tail = abs(data.tail_at(m, k))
        cap = bound.evaluate({"x": iv.kl[0], "y": iv.kl[1], "z": k})
        margin = cap - tail
        rows.append({"k": k, "tail": tail, "bound": cap, "margin": margin})
        if worst is None or margin < worst:
            worst = margin
    return {
        "variety": spec.id,
        "dimension": n,
        "m": m,
        "rows": rows,
        "margin": worst,
        "lambda_sets": [
            [format_partition(lam) for lam in enumerate_partitions(i, n)]
            for i in range(m + 1, n + 1)
        ],
    }
