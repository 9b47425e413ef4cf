"""Universal bound polynomials for Chern numbers of polarized manifolds.

Three families are built here, all with exact rational coefficients and
all depending only on the dimension n and a partition index:

  * P_lambda^-, P_lambda^+: linear forms in x_t = K^t * L^{n-t} with
    P^- <= c_lambda * L^{n-d} <= P^+ on every n-dimensional projective
    manifold with ample L.  They come from a recursion over partitions
    driven by the nef twisted tangent bundle.

  * R_i^-, R_i^+: polynomials in x = L^n, y = K * L^{n-1} with
    R_i^- <= (K^i * L^{n-i}) * x^{i-1} <= R_i^+, a consequence of
    log-concavity of mixed degrees (the nef classes K + (n+1)L and L).

  * Q_lambda^-, Q_lambda^+ and the envelope Q_lambda: substituting the
    R_i into the P forms gives |c_lambda * L^{n-d}| * x^{d-1} <=
    Q_lambda(x, y); the envelope dominates max(Q^+, -Q^-) whenever
    x > 0 and y >= -(n+1) x, which holds with x = L^n, y = K * L^{n-1}.

The recursion terminates because every lower-order term of the twisted
expansion strictly precedes its parent in the (distance, weight) order
on partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .chern import expand_twisted_monomial, fujita_constant
from .partitions import Partition, check_partition, enumerate_partitions, partition_distance, weight
from .polynomial import MultiPoly

XY = ("x", "y")


@dataclass(frozen=True)
class LinearBoundForm:
    """A linear form sum_t coefficients[t] * x_t with x_t = K^t * L^{n-t}."""

    coefficients: tuple[Fraction, ...]

    def evaluate(self, kl: Sequence[int | Fraction]) -> Fraction:
        if len(kl) < len(self.coefficients):
            raise ValueError(
                f"need {len(self.coefficients)} mixed degrees, got {len(kl)}"
            )
        return sum(
            (c * Fraction(kl[t]) for t, c in enumerate(self.coefficients)), Fraction(0)
        )

    def to_multipoly(self) -> MultiPoly:
        names = tuple(f"x{t}" for t in range(len(self.coefficients)))
        terms = {}
        for t, c in enumerate(self.coefficients):
            if c:
                terms[tuple(1 if s == t else 0 for s in range(len(names)))] = c
        return MultiPoly(names, terms)


def _padded(vec: tuple[Fraction, ...], length: int) -> list[Fraction]:
    return list(vec) + [Fraction(0)] * (length - len(vec))


def _c1_power_form(d: int, n: int) -> list[Fraction]:
    """Coefficients of c_1(E)^d * L^{n-d} as a form in x_t.

    c_1(E) = (2n^2+n-1) K + n^2 C_n L, so the d-th power expands
    binomially over the mixed degrees."""
    alpha = 2 * n * n + n - 1
    beta = n * n * fujita_constant(n)
    return [Fraction(comb(d, t) * alpha**t * beta ** (d - t)) for t in range(d + 1)]


@lru_cache(maxsize=None)
def _p_vectors(lam: Partition, n: int) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    d = weight(lam)
    if partition_distance(lam) == 0:
        # c_1^d * L^{n-d} = (-K)^d * L^{n-d} exactly; both bounds coincide.
        vec = [Fraction(0)] * (d + 1)
        vec[d] = Fraction((-1) ** d)
        frozen = tuple(vec)
        return frozen, frozen
    lead, lower = expand_twisted_monomial(lam, n)
    sum_one = [Fraction(0)] * (d + 1)
    sum_two = [Fraction(0)] * (d + 1)
    for mu, coeff in sorted(lower.items()):
        mu_lower, mu_upper = _p_vectors(mu, n)
        pick_one = mu_lower if coeff >= 0 else mu_upper
        pick_two = mu_upper if coeff >= 0 else mu_lower
        for t, value in enumerate(_padded(pick_one, d + 1)):
            sum_one[t] += coeff * value
        for t, value in enumerate(_padded(pick_two, d + 1)):
            sum_two[t] += coeff * value
    w_form = _c1_power_form(d, n)
    # form_one bounds (W - sum C_mu c_mu) / C_lambda from the nef-chain
    # upper inequality, form_two bounds -(sum C_mu c_mu) / C_lambda from
    # the lower one; which is the upper bound depends on sign(C_lambda).
    form_one = tuple((w_form[t] - sum_one[t]) / lead for t in range(d + 1))
    form_two = tuple(-sum_two[t] / lead for t in range(d + 1))
    if lead > 0:
        return form_two, form_one
    return form_one, form_two


def build_P_pm(lam: Sequence[int], n: int) -> tuple[LinearBoundForm, LinearBoundForm]:
    """The sandwich forms (P_lambda^-, P_lambda^+) in dimension n.

    Valid for lambda in P(d, n) with d <= n, and for the empty
    partition (both bounds are then the exact value x_0 = L^n).
    """
    lam = check_partition(lam)
    if n < 1:
        raise ValueError(f"dimension must be at least 1, got {n}")
    if lam and (lam[0] > n or weight(lam) > n):
        raise ValueError(f"partition {lam} does not index a Chern number in dimension {n}")
    lower, upper = _p_vectors(lam, n)
    return LinearBoundForm(lower), LinearBoundForm(upper)


@dataclass(frozen=True)
class BoundPair:
    lower: MultiPoly
    upper: MultiPoly


@lru_cache(maxsize=None)
def _r_pair(i: int, n: int) -> BoundPair:
    x = MultiPoly.variable(XY, "x")
    y = MultiPoly.variable(XY, "y")
    if i == 1:
        return BoundPair(lower=y, upper=y)
    a = n + 1
    lower = -(MultiPoly.constant(XY, a**i) * x**i)
    for j in range(1, i):
        prev = _r_pair(j, n)
        lower = lower - comb(i, j) * a ** (i - j) * x ** (i - j) * prev.upper
    upper = (a * x + y) ** i - MultiPoly.constant(XY, a**i) * x**i
    for j in range(1, i):
        prev = _r_pair(j, n)
        upper = upper - comb(i, j) * a ** (i - j) * x ** (i - j) * prev.lower
    if lower.total_degree() > i or upper.total_degree() > i:
        raise RuntimeError(f"R_{i} bound degree exceeds {i}")
    return BoundPair(lower=lower, upper=upper)


def build_R_pm(i: int, n: int) -> BoundPair:
    """The pair (R_i^-, R_i^+) with
    R_i^-(x, y) <= (K^i * L^{n-i}) * (L^n)^{i-1} <= R_i^+(x, y)
    at x = L^n, y = K * L^{n-1}."""
    if n < 1:
        raise ValueError(f"dimension must be at least 1, got {n}")
    if i < 1 or i > n:
        raise ValueError(f"index i must satisfy 1 <= i <= n, got {i}")
    return _r_pair(i, n)


@dataclass(frozen=True)
class QBounds:
    """Homogenized two-sided bounds and their single-polynomial envelope."""

    lower: MultiPoly
    upper: MultiPoly
    envelope: MultiPoly


def _homogenized(coeffs: tuple[Fraction, ...], n: int, want_upper: bool) -> MultiPoly:
    """Substitute the R_i sandwich into a linear form scaled by x^{d-1}.

    Each x_t * (L^n)^{d-1} = (x_t * x^{t-1}) * x^{d-t} is replaced by the
    appropriate R_t bound times x^{d-t}; the constant slot t = 0
    contributes exactly x^d."""
    d = len(coeffs) - 1
    x = MultiPoly.variable(XY, "x")
    total = coeffs[0] * x**d
    for t in range(1, d + 1):
        c = coeffs[t]
        if not c:
            continue
        pair = _r_pair(t, n)
        if want_upper:
            pick = pair.upper if c >= 0 else pair.lower
        else:
            pick = pair.lower if c >= 0 else pair.upper
        total = total + c * x ** (d - t) * pick
    return total


@lru_cache(maxsize=None)
def _q_bounds(lam: Partition, n: int) -> QBounds:
    lower_form, upper_form = _p_vectors(lam, n)
    d = weight(lam)
    q_upper = _homogenized(upper_form, n, want_upper=True)
    q_lower = _homogenized(lower_form, n, want_upper=False)

    # Envelope: with a_ij = max(a^+_ij, -a^-_ij),
    #   Q = sum a_ij x^i y^j + sum |a^+_ij + a^-_ij| (n+1)^j x^{i+j},
    # which dominates both Q^+ and -Q^- whenever x > 0 and
    # y >= -(n+1) x; the point (L^n, K * L^{n-1}) satisfies that
    # because K + (n+1) L is nef.
    envelope = MultiPoly.zero(XY)
    keys = set(q_upper.terms) | set(q_lower.terms)
    for exps in sorted(keys):
        i, j = exps
        a_plus = q_upper.coefficient(exps)
        a_minus = q_lower.coefficient(exps)
        a = max(a_plus, -a_minus)
        if a:
            envelope = envelope + MultiPoly(XY, {exps: a})
        straggler = abs(a_plus + a_minus) * Fraction((n + 1) ** j)
        if straggler:
            envelope = envelope + MultiPoly(XY, {(i + j, 0): straggler})
    for poly in (q_lower, q_upper, envelope):
        if poly.total_degree() > d:
            raise RuntimeError(f"Q bound degree exceeds {d} for {lam}")
    return QBounds(lower=q_lower, upper=q_upper, envelope=envelope)


def build_Q(lam: Sequence[int], n: int) -> QBounds:
    """Q_lambda^-, Q_lambda^+ and the envelope Q_lambda in x = L^n,
    y = K * L^{n-1}, each of total degree at most d = |lambda|."""
    lam = check_partition(lam)
    if not lam:
        raise ValueError("Q bounds need a nonempty partition")
    if n < 1:
        raise ValueError(f"dimension must be at least 1, got {n}")
    if lam[0] > n or weight(lam) > n:
        raise ValueError(f"partition {lam} does not index a Chern number in dimension {n}")
    return _q_bounds(lam, n)


def ratio_bound_table(n: int) -> list[tuple[Partition, Fraction]]:
    """For each lambda of weight n, the coefficient-magnitude sum of
    Q_lambda(x, x), in enumeration order."""
    if n < 1:
        raise ValueError(f"dimension must be at least 1, got {n}")
    x_axis = (MultiPoly.variable(("x",), "x"),)
    table = []
    for lam in enumerate_partitions(n, n):
        envelope = build_Q(lam, n).envelope
        collapsed = envelope.substitute({"x": x_axis[0], "y": x_axis[0]})
        total = sum((abs(c) for c in collapsed.terms.values()), Fraction(0))
        table.append((lam, total))
    return table


def chern_ratio_bound(n: int) -> Fraction:
    """A universal constant c_n with |c_lambda| <= c_n * |c_1^n| for
    n-folds with ample or anti-ample canonical class.

    Taking L = K or L = -K gives x = |K^n| >= 1 and |y| = x, so
    |c_lambda| <= Q_lambda(x, x) / x^{n-1} <= (sum of |coefficients|) * x."""
    return max(total for _, total in ratio_bound_table(n))


def chern_ratio_witness(n: int) -> Partition:
    """The first weight-n partition attaining chern_ratio_bound(n)."""
    table = ratio_bound_table(n)
    best = max(total for _, total in table)
    for lam, total in table:
        if total == best:
            return lam
    raise RuntimeError("unreachable")


def uniform_bound(n: int, lam: Sequence[int], v: int | Fraction, w: int | Fraction) -> Fraction:
    """sup of Q_lambda over the box 1 <= x <= v, -(n+1)x <= y <= w,
    bounded term by term.

    Each |y|-factor is at most Y = max(w, (n+1)v); each x^i factor is at
    most v^i, and after dividing by the x^{d-1} homogenization at least
    d-1 powers of x drop out, leaving v^{max(i-(d-1),0)}.  The result is
    monotone in v and w and finite for every nonempty box."""
    lam = check_partition(lam)
    v = Fraction(v)
    w = Fraction(w)
    if v < 1:
        raise ValueError(f"the box needs v >= 1, got {v}")
    if w < -(n + 1) * v:
        raise ValueError(f"empty box: w = {w} < -(n+1)v = {-(n + 1) * v}")
    envelope = build_Q(lam, n).envelope
    d = weight(lam)
    y_cap = max(w, (n + 1) * v)
    total = Fraction(0)
    for (i, j), coeff in envelope.terms.items():
        total += abs(coeff) * v ** max(i - (d - 1), 0) * y_cap**j
    return total
