"""Symbolic Chern-class expressions and the twisted-bundle expansion.

Expressions live in the free commutative algebra generated by the Chern
classes c_1, c_2, ... of an n-dimensional variety, the polarization
class L, and an auxiliary degree-one symbol delta used while twisting.
A monomial keeps the classes c_j with j >= 2 as a partition and tracks
powers of c_1, L, and delta separately, so each monomial corresponds to
a unique pair (partition with ones appended, L-power).

The key operation is expand_twisted_monomial: for the rank-n bundle
E = T tensor M with c_1(M) = delta = -(2n+1)*c_1 + n*C_n*L, it writes

    c_lambda(E) = C_lambda * c_lambda + sum_mu C_mu * c_mu * L^(d-|mu|)

with integer constants, where d = |lambda| and every mu is strictly
smaller than lambda in the order (distance, weight) with
distance = partition_distance.  That strict decrease is what makes the
bound recursion well founded.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .partitions import Partition, check_partition, partition_distance, weight

logger = logging.getLogger(__name__)


class DegenerateConstantError(RuntimeError):
    """Raised when a leading twist constant C_lambda vanishes.

    The bound recursion divides by C_lambda, so a vanishing constant
    means no bound can be produced for that index; the caller must not
    silently substitute anything.
    """


class ConsistencyError(RuntimeError):
    """Raised when an internal structural check fails (degree mismatch,
    non-decreasing lower-order term, non-integral constant)."""


def fujita_constant(n: int) -> int:
    """The very-ampleness constant C_n = 2 + binom(3n+1, n)."""
    if n < 1:
        raise ValueError(f"dimension must be at least 1, got {n}")
    return 2 + comb(3 * n + 1, n)


@dataclass(frozen=True, order=True)
class ChernMonomial:
    """Product c_{p_1}*...*c_{p_r} * c_1^a * L^b * delta^e with all p_i >= 2."""

    parts: tuple[int, ...]
    c1_power: int = 0
    l_power: int = 0
    delta_power: int = 0

    def __post_init__(self):
        if any(p < 2 for p in self.parts):
            raise ValueError(f"monomial parts must be at least 2, got {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"monomial parts must be weakly decreasing, got {self.parts}")
        if min(self.c1_power, self.l_power, self.delta_power) < 0:
            raise ValueError("monomial powers must be nonnegative")

    @property
    def degree(self) -> int:
        return sum(self.parts) + self.c1_power + self.l_power + self.delta_power

    @property
    def chern_partition(self) -> Partition:
        """The partition indexing the Chern part, with c_1 factors appended."""
        return self.parts + (1,) * self.c1_power

    def times(self, other: "ChernMonomial") -> "ChernMonomial":
        merged = tuple(sorted(self.parts + other.parts, reverse=True))
        return ChernMonomial(
            merged,
            self.c1_power + other.c1_power,
            self.l_power + other.l_power,
            self.delta_power + other.delta_power,
        )

    def to_text(self) -> str:
        factors: list[str] = []
        for p in self.parts:
            factors.append(f"c{p}")
        if self.c1_power == 1:
            factors.append("c1")
        elif self.c1_power > 1:
            factors.append(f"c1^{self.c1_power}")
        if self.l_power == 1:
            factors.append("L")
        elif self.l_power > 1:
            factors.append(f"L^{self.l_power}")
        if self.delta_power == 1:
            factors.append("delta")
        elif self.delta_power > 1:
            factors.append(f"delta^{self.delta_power}")
        # Collapse repeated c_p factors into powers for readability.
        collapsed: list[str] = []
        for name in factors:
            if collapsed and collapsed[-1] == name:
                collapsed[-1] = f"{name}^2"
            elif collapsed and collapsed[-1].startswith(f"{name}^"):
                power = int(collapsed[-1].split("^")[1]) + 1
                collapsed[-1] = f"{name}^{power}"
            else:
                collapsed.append(name)
        return "*".join(collapsed) if collapsed else "1"


_ONE = ChernMonomial(())


@dataclass(frozen=True)
class ChernExpr:
    """Rational linear combination of ChernMonomials on an n-fold.

    Monomials of degree above the dimension are identically zero and are
    dropped on construction, so products truncate automatically.
    """

    dimension: int
    terms: Mapping[ChernMonomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {
            mono: coeff
            for mono, coeff in self.terms.items()
            if coeff and mono.degree <= self.dimension
        }
        object.__setattr__(self, "terms", cleaned)

    # ------------------------------------------------------------------
    # Constructors

    @classmethod
    def zero(cls, n: int) -> "ChernExpr":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "ChernExpr":
        return cls(n, {_ONE: Fraction(1)})

    @classmethod
    def chern_class(cls, n: int, j: int) -> "ChernExpr":
        if j < 0 or j > n:
            raise ValueError(f"c_{j} is not defined on an n-fold with n = {n}")
        if j == 0:
            return cls.one(n)
        if j == 1:
            return cls(n, {ChernMonomial((), c1_power=1): Fraction(1)})
        return cls(n, {ChernMonomial((j,)): Fraction(1)})

    @classmethod
    def line_class(cls, n: int) -> "ChernExpr":
        return cls(n, {ChernMonomial((), l_power=1): Fraction(1)})

    @classmethod
    def delta_class(cls, n: int) -> "ChernExpr":
        return cls(n, {ChernMonomial((), delta_power=1): Fraction(1)})

    # ------------------------------------------------------------------
    # Algebra

    def _check(self, other: "ChernExpr") -> None:
        if self.dimension != other.dimension:
            raise ValueError(f"dimension mismatch: {self.dimension} vs {other.dimension}")

    def __add__(self, other: "ChernExpr") -> "ChernExpr":
        self._check(other)
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            merged[mono] = merged.get(mono, Fraction(0)) + coeff
        return ChernExpr(self.dimension, merged)

    def __sub__(self, other: "ChernExpr") -> "ChernExpr":
        return self + other.scale(-1)

    def scale(self, value: int | Fraction) -> "ChernExpr":
        factor = Fraction(value)
        return ChernExpr(self.dimension, {mono: coeff * factor for mono, coeff in self.terms.items()})

    def __mul__(self, other: "ChernExpr") -> "ChernExpr":
        self._check(other)
        product: dict[ChernMonomial, Fraction] = {}
        for mono_a, coeff_a in self.terms.items():
            for mono_b, coeff_b in other.terms.items():
                if mono_a.degree + mono_b.degree > self.dimension:
                    continue
                key = mono_a.times(mono_b)
                product[key] = product.get(key, Fraction(0)) + coeff_a * coeff_b
        return ChernExpr(self.dimension, product)

    def __pow__(self, exponent: int) -> "ChernExpr":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = ChernExpr.one(self.dimension)
        for _ in range(exponent):
            result = result * self
        return result

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def graded_part(self, d: int) -> "ChernExpr":
        return ChernExpr(
            self.dimension, {mono: coeff for mono, coeff in self.terms.items() if mono.degree == d}
        )

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or None if mixed or zero."""
        degrees = {mono.degree for mono in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def substitute_delta(self, replacement: "ChernExpr") -> "ChernExpr":
        """Replace every power of delta by the corresponding power of replacement."""
        self._check(replacement)
        result = ChernExpr.zero(self.dimension)
        for mono, coeff in self.terms.items():
            stripped = ChernMonomial(mono.parts, mono.c1_power, mono.l_power, 0)
            term = ChernExpr(self.dimension, {stripped: coeff})
            result = result + term * replacement**mono.delta_power
        return result

    def sorted_terms(self) -> list[tuple[ChernMonomial, Fraction]]:
        return sorted(
            self.terms.items(),
            key=lambda item: (
                -item[0].degree,
                item[0].parts,
                -item[0].c1_power,
                -item[0].l_power,
                -item[0].delta_power,
            ),
        )

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for mono, coeff in self.sorted_terms():
            magnitude = abs(coeff)
            body = mono.to_text()
            if body == "1":
                rendered = str(magnitude)
            elif magnitude == 1:
                rendered = body
            else:
                rendered = f"{magnitude}*{body}"
            if not pieces:
                pieces.append(rendered if coeff > 0 else f"-{rendered}")
            else:
                pieces.append(f"+ {rendered}" if coeff > 0 else f"- {rendered}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_text()


def twist_class(n: int) -> ChernExpr:
    """The first Chern class of the twisting line bundle:
    delta = -(2n+1)*c1 + n*C_n*L."""
    c1 = ChernExpr.chern_class(n, 1)
    line = ChernExpr.line_class(n)
    return c1.scale(-(2 * n + 1)) + line.scale(n * fujita_constant(n))


def twist_chern_class(k: int, n: int, concrete: bool = True) -> ChernExpr:
    """c_k of the twisted tangent bundle on an n-fold.

    For a rank-n bundle T twisted by a line bundle with first Chern
    class delta,

        c_k(T tensor M) = sum_j binom(n - j, k - j) * c_j * delta^(k - j).

    With concrete=False the result keeps delta symbolic; otherwise delta
    is replaced by -(2n+1)*c1 + n*C_n*L.
    """
    if n < 1:
        raise ValueError(f"dimension must be at least 1, got {n}")
    if k < 0 or k > n:
        raise ValueError(f"c_{k} of a rank-{n} bundle is not defined")
    total = ChernExpr.zero(n)
    delta = ChernExpr.delta_class(n)
    for j in range(k + 1):
        term = ChernExpr.chern_class(n, j) * delta ** (k - j)
        total = total + term.scale(comb(n - j, k - j))
    if concrete:
        total = total.substitute_delta(twist_class(n))
    return total


def expand_twisted_monomial(lam: Sequence[int], n: int) -> tuple[Fraction, dict[Partition, Fraction]]:
    """Expand c_lambda(E) over the monomial basis c_mu * L^(d - |mu|).

    Returns (C_lambda, lower) where lower maps each partition mu other
    than lambda itself to its integer coefficient C_mu; the L-power is
    determined by homogeneity as d - |mu|.  Every mu satisfies
    (distance(mu), |mu|) < (distance(lambda), d) lexicographically,
    which is checked, as are homogeneity and integrality of all
    constants.

    Raises DegenerateConstantError when C_lambda = 0, since the bound
    recursion cannot divide by it.
    """
    lam = check_partition(lam)
    if not lam:
        raise ValueError("the empty partition has no twisted expansion")
    if n < 1:
        raise ValueError(f"dimension must be at least 1, got {n}")
    if weight(lam) > n or lam[0] > n:
        raise ValueError(f"partition {lam} does not index a Chern number in dimension {n}")

    d = weight(lam)
    product = ChernExpr.one(n)
    for part in lam:
        product = product * twist_chern_class(part, n)

    if product.homogeneous_degree() != d:
        raise ConsistencyError(f"expansion of {lam} is not homogeneous of degree {d}")

    lead_mono = ChernMonomial(
        tuple(p for p in lam if p >= 2), c1_power=sum(1 for p in lam if p == 1)
    )
    lead = Fraction(0)
    lower: dict[Partition, Fraction] = {}
    for mono, coeff in product.sorted_terms():
        if mono.delta_power:
            raise ConsistencyError("delta survived concretization")
        if coeff.denominator != 1:
            raise ConsistencyError(f"non-integer constant {coeff} in expansion of {lam}")
        if mono == lead_mono:
            lead = coeff
            continue
        mu = mono.chern_partition
        key = (partition_distance(mu), weight(mu))
        if key >= (partition_distance(lam), d):
            raise ConsistencyError(
                f"lower-order term {mu} does not precede {lam} in the (distance, weight) order"
            )
        lower[mu] = lower.get(mu, Fraction(0)) + coeff

    if lead == 0:
        logger.error("degenerate leading constant: C_lambda = 0 for lambda=%s, n=%d", lam, n)
        raise DegenerateConstantError(
            f"leading constant vanishes for lambda={lam}, n={n}; no bound is available"
        )
    return lead, lower
