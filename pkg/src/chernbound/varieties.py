"""Exact intersection-number oracle over a catalog of projective manifolds.

Every variety here has a cohomology (or Chow) ring presented by nilpotent
generators with a known top-degree integral, so all intersection numbers
are computed by exact polynomial arithmetic:

  * projective space P^n:        Q[h]/(h^{n+1}),  h^n -> 1
  * products of projective spaces: one generator per factor
  * smooth hypersurface of degree a in P^{n+1}:  h^n -> a
  * smooth complete intersection of degrees (a_1..a_c):  h^n -> prod a_j
  * abelian variety of polarization type (d_1..d_n):  c(T)=1, L^n = n! prod d_j
  * tabulated: explicit integer tables supplied by the user

The oracle output is an IntersectionVector: the numbers K^i * L^{n-i}
and every monomial Chern number c_lambda * L^{n-|lambda|}.  These are
the quantities the universal bound polynomials are checked against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .chern import expand_twisted_monomial, fujita_constant
from .partitions import (
    Partition,
    all_partitions_up_to,
    check_partition,
    format_partition,
    parse_partition,
    weight,
)
from .series import binomial_power_series, series_mul

Element = dict[tuple[int, ...], Fraction]

KINDS = (
    "projective_space",
    "product_of_projective_spaces",
    "hypersurface",
    "complete_intersection",
    "abelian",
    "tabulated",
)


class IntegrityError(RuntimeError):
    """An oracle self-check failed: a non-integer intersection number,
    an inconsistent table, or disagreeing computation routes."""


class GradedRing:
    """Truncated polynomial ring with a prescribed top-degree integral.

    Generators are nilpotent (gen_j^(cap_j + 1) = 0) and the integral of
    a top-degree monomial is looked up in `top`; degree-n monomials not
    listed integrate to zero.
    """

    def __init__(
        self,
        dimension: int,
        generators: Sequence[str],
        caps: Sequence[int],
        top: Mapping[tuple[int, ...], int | Fraction],
    ):
        if len(generators) != len(caps):
            raise ValueError("one nilpotency cap per generator required")
        self.dimension = dimension
        self.generators = tuple(generators)
        self.caps = tuple(caps)
        self.top = {tuple(k): Fraction(v) for k, v in top.items()}
        for exps in self.top:
            if sum(exps) != dimension:
                raise IntegrityError(f"top integral defined on non-top monomial {exps}")

    def zero(self) -> Element:
        return {}

    def one(self) -> Element:
        return {(0,) * len(self.generators): Fraction(1)}

    def linear(self, coeffs: Sequence[int | Fraction]) -> Element:
        if len(coeffs) != len(self.generators):
            raise ValueError("one coefficient per generator required")
        out: Element = {}
        for j, c in enumerate(coeffs):
            if c:
                exps = tuple(1 if t == j else 0 for t in range(len(self.generators)))
                out[exps] = Fraction(c)
        return out

    def add(self, a: Element, b: Element) -> Element:
        out = dict(a)
        for exps, coeff in b.items():
            value = out.get(exps, Fraction(0)) + coeff
            if value:
                out[exps] = value
            else:
                out.pop(exps, None)
        return out

    def scale(self, a: Element, value: int | Fraction) -> Element:
        factor = Fraction(value)
        if not factor:
            return {}
        return {exps: coeff * factor for exps, coeff in a.items()}

    def mul(self, a: Element, b: Element) -> Element:
        out: Element = {}
        for exps_a, coeff_a in a.items():
            for exps_b, coeff_b in b.items():
                exps = tuple(x + y for x, y in zip(exps_a, exps_b))
                if any(e > cap for e, cap in zip(exps, self.caps)):
                    continue
                value = out.get(exps, Fraction(0)) + coeff_a * coeff_b
                if value:
                    out[exps] = value
                else:
                    out.pop(exps, None)
        return out

    def power(self, a: Element, k: int) -> Element:
        out = self.one()
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def integrate(self, a: Element) -> Fraction:
        total = Fraction(0)
        for exps, coeff in a.items():
            if sum(exps) == self.dimension:
                total += coeff * self.top.get(exps, Fraction(0))
        return total


@dataclass(frozen=True)
class VarietySpec:
    """A catalog entry: enough data to recover all intersection numbers.

    Positivity flags record the sign of the canonical class (ample,
    anti-ample, or numerically trivial) and whether the polarization L
    is ample; they are part of the entry because downstream consumers
    select sweeps by them.
    """

    id: str
    kind: str
    dimension: int
    factor_dimensions: tuple[int, ...] = ()
    degrees: tuple[int, ...] = ()
    polarization: tuple[int, ...] = ()
    abelian_type: tuple[int, ...] = ()
    table_kl: tuple[int, ...] = ()
    table_chern: tuple[tuple[Partition, int], ...] = ()
    k_ample: bool = False
    minus_k_ample: bool = False
    k_trivial: bool = False
    ample: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown variety kind {self.kind!r}")
        if self.dimension < 1:
            raise ValueError(f"dimension must be at least 1, got {self.dimension}")


def projective_space(n: int, polarization_degree: int = 1, id: str | None = None) -> VarietySpec:
    if polarization_degree < 1:
        raise ValueError(f"polarization degree must be positive, got {polarization_degree}")
    name = id or (f"P{n}" if polarization_degree == 1 else f"P{n}_L{polarization_degree}")
    return VarietySpec(
        id=name,
        kind="projective_space",
        dimension=n,
        polarization=(polarization_degree,),
        minus_k_ample=True,
    )


def product_of_projective_spaces(
    dims: Sequence[int], polarization: Sequence[int], id: str | None = None
) -> VarietySpec:
    dims = tuple(dims)
    pol = tuple(polarization)
    if len(dims) < 2 or any(d < 1 for d in dims):
        raise ValueError(f"need at least two positive factor dimensions, got {dims}")
    if len(pol) != len(dims) or any(a < 1 for a in pol):
        raise ValueError(f"polarization multidegree {pol} must be positive on every factor")
    name = id or "x".join(f"P{d}" for d in dims) + "_L" + "".join(str(a) for a in pol)
    return VarietySpec(
        id=name,
        kind="product_of_projective_spaces",
        dimension=sum(dims),
        factor_dimensions=dims,
        polarization=pol,
        minus_k_ample=True,
    )


def hypersurface(dimension: int, degree: int, id: str | None = None) -> VarietySpec:
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    canonical = degree - (dimension + 2)
    return VarietySpec(
        id=id or f"H{dimension}_{degree}",
        kind="hypersurface",
        dimension=dimension,
        degrees=(degree,),
        polarization=(1,),
        k_ample=canonical > 0,
        minus_k_ample=canonical < 0,
        k_trivial=canonical == 0,
    )


def complete_intersection(dimension: int, degrees: Sequence[int], id: str | None = None) -> VarietySpec:
    degs = tuple(degrees)
    if not degs or any(a < 1 for a in degs):
        raise ValueError(f"degrees must be positive, got {degs}")
    canonical = sum(degs) - (dimension + len(degs) + 1)
    return VarietySpec(
        id=id or f"CI{dimension}_" + "".join(str(a) for a in degs),
        kind="complete_intersection",
        dimension=dimension,
        degrees=degs,
        polarization=(1,),
        k_ample=canonical > 0,
        minus_k_ample=canonical < 0,
        k_trivial=canonical == 0,
    )


def abelian_variety(dimension: int, polarization_type: Sequence[int], id: str | None = None) -> VarietySpec:
    ptype = tuple(polarization_type)
    if len(ptype) != dimension or any(d < 1 for d in ptype):
        raise ValueError(f"polarization type must have {dimension} positive entries, got {ptype}")
    return VarietySpec(
        id=id or f"A{dimension}_" + "".join(str(d) for d in ptype),
        kind="abelian",
        dimension=dimension,
        abelian_type=ptype,
        k_trivial=True,
    )


def tabulated(
    id: str,
    dimension: int,
    kl: Sequence[int],
    chern: Mapping[Partition, int] | Iterable[tuple[Partition, int]],
    k_ample: bool = False,
    minus_k_ample: bool = False,
    k_trivial: bool = False,
    ample: bool = True,
) -> VarietySpec:
    items = chern.items() if isinstance(chern, Mapping) else chern
    table = tuple(sorted((check_partition(lam), int(v)) for lam, v in items))
    return VarietySpec(
        id=id,
        kind="tabulated",
        dimension=dimension,
        table_kl=tuple(int(v) for v in kl),
        table_chern=table,
        k_ample=k_ample,
        minus_k_ample=minus_k_ample,
        k_trivial=k_trivial,
        ample=ample,
    )


# ----------------------------------------------------------------------
# Ring presentations and characteristic classes


def ring(spec: VarietySpec) -> GradedRing:
    """The graded ring presentation; tabulated entries have none."""
    n = spec.dimension
    if spec.kind == "projective_space":
        return GradedRing(n, ("h",), (n,), {(n,): 1})
    if spec.kind == "product_of_projective_spaces":
        gens = tuple(f"h{j+1}" for j in range(len(spec.factor_dimensions)))
        return GradedRing(n, gens, spec.factor_dimensions, {spec.factor_dimensions: 1})
    if spec.kind == "hypersurface":
        return GradedRing(n, ("h",), (n,), {(n,): spec.degrees[0]})
    if spec.kind == "complete_intersection":
        return GradedRing(n, ("h",), (n,), {(n,): prod(spec.degrees)})
    if spec.kind == "abelian":
        return GradedRing(n, ("h",), (n,), {(n,): factorial(n) * prod(spec.abelian_type)})
    raise ValueError(f"{spec.id}: tabulated entries carry precomputed intersection numbers")


def _series_to_elements(rng: GradedRing, coeffs: Sequence[Fraction]) -> list[Element]:
    return [({(j,): coeffs[j]} if coeffs[j] else {}) for j in range(rng.dimension + 1)]


def characteristic_classes(spec: VarietySpec) -> tuple[GradedRing, Element, Element, list[Element]]:
    """Returns (ring, K, L, [c_0 .. c_n]) for a non-tabulated entry."""
    rng = ring(spec)
    n = spec.dimension
    order = n + 1
    if spec.kind == "projective_space":
        total = binomial_power_series(1, n + 1, order)
        chern = _series_to_elements(rng, total)
        canonical = rng.linear((-(n + 1),))
        line = rng.linear((spec.polarization[0],))
    elif spec.kind == "product_of_projective_spaces":
        m = len(spec.factor_dimensions)
        total = rng.one()
        for j, nj in enumerate(spec.factor_dimensions):
            hj = rng.linear(tuple(1 if t == j else 0 for t in range(m)))
            factor = rng.one()
            for _ in range(nj + 1):
                factor = rng.mul(factor, rng.add(rng.one(), hj))
            total = rng.mul(total, factor)
        chern = [
            {exps: c for exps, c in total.items() if sum(exps) == d} for d in range(order)
        ]
        canonical = rng.linear(tuple(-(nj + 1) for nj in spec.factor_dimensions))
        line = rng.linear(spec.polarization)
    elif spec.kind in {"hypersurface", "complete_intersection"}:
        c = len(spec.degrees)
        total = binomial_power_series(1, n + c + 1, order)
        for a in spec.degrees:
            total = series_mul(total, binomial_power_series(a, -1, order), order)
        chern = _series_to_elements(rng, total)
        canonical = rng.linear((sum(spec.degrees) - (n + c + 1),))
        line = rng.linear((1,))
    elif spec.kind == "abelian":
        chern = [rng.one()] + [rng.zero() for _ in range(n)]
        canonical = rng.zero()
        line = rng.linear((1,))
    else:
        raise ValueError(f"{spec.id}: tabulated entries carry precomputed intersection numbers")
    return rng, canonical, line, chern


# ----------------------------------------------------------------------
# Intersection numbers


@dataclass
class IntersectionVector:
    """All integrals the bound polynomials consume:
    kl[i] = K^i * L^{n-i} and chern[lambda] = c_lambda * L^{n-|lambda|}."""

    variety_id: str
    dimension: int
    kl: tuple[int, ...]
    chern: dict[Partition, int]

    def chern_number(self, lam: Partition) -> int:
        if not lam:
            return self.kl[0]
        return self.chern[lam]


def _as_integer(value: Fraction, what: str, spec_id: str) -> int:
    if value.denominator != 1:
        raise IntegrityError(f"{spec_id}: {what} is not an integer: {value}")
    return int(value)


@lru_cache(maxsize=None)
def intersection_vector(spec: VarietySpec) -> IntersectionVector:
    """Compute (or load) every K^i * L^{n-i} and c_lambda * L^{n-|lambda|}.

    Self-checks: all values are integers, and c_{(1,..,1)} * L^{n-d}
    equals (-1)^d K^d * L^{n-d} since c_1 = -K.
    """
    n = spec.dimension
    if spec.kind == "tabulated":
        if len(spec.table_kl) != n + 1:
            raise IntegrityError(f"{spec.id}: kl table must have {n + 1} entries")
        chern = {lam: value for lam, value in spec.table_chern}
        expected = set(all_partitions_up_to(n))
        if set(chern) != expected:
            missing = sorted(expected - set(chern))
            extra = sorted(set(chern) - expected)
            raise IntegrityError(
                f"{spec.id}: chern table keys mismatch (missing {missing}, extra {extra})"
            )
        iv = IntersectionVector(spec.id, n, spec.table_kl, chern)
    else:
        rng, canonical, line, chern_classes = characteristic_classes(spec)
        kl = []
        for i in range(n + 1):
            value = rng.integrate(rng.mul(rng.power(canonical, i), rng.power(line, n - i)))
            kl.append(_as_integer(value, f"K^{i}*L^{n - i}", spec.id))
        chern = {}
        for lam in all_partitions_up_to(n):
            element = rng.one()
            for part in lam:
                element = rng.mul(element, chern_classes[part])
            element = rng.mul(element, rng.power(line, n - weight(lam)))
            chern[lam] = _as_integer(
                rng.integrate(element), f"c_{format_partition(lam)}*L^{n - weight(lam)}", spec.id
            )
        iv = IntersectionVector(spec.id, n, tuple(kl), chern)
    for d in range(1, n + 1):
        ones = (1,) * d
        if iv.chern[ones] != (-1) ** d * iv.kl[d]:
            raise IntegrityError(
                f"{spec.id}: c_1^{d}*L^{n - d} = {iv.chern[ones]} "
                f"but (-1)^{d} K^{d}*L^{n - d} = {(-1) ** d * iv.kl[d]}"
            )
    return iv


def euler_characteristic_oracle(spec: VarietySpec, k: int) -> int:
    """chi(X, kL) computed combinatorially, independent of the Todd class.

    Projective space uses the binomial formula, products multiply,
    hypersurfaces and complete intersections use inclusion-exclusion
    over the defining equations, and abelian varieties use k^n L^n / n!.
    """

    def chi_pn(m: int, t: int) -> Fraction:
        return Fraction(prod(t + s for s in range(1, m + 1)), factorial(m))

    if spec.kind == "projective_space":
        value = chi_pn(spec.dimension, spec.polarization[0] * k)
    elif spec.kind == "product_of_projective_spaces":
        value = Fraction(1)
        for nj, aj in zip(spec.factor_dimensions, spec.polarization):
            value *= chi_pn(nj, aj * k)
    elif spec.kind in {"hypersurface", "complete_intersection"}:
        c = len(spec.degrees)
        ambient = spec.dimension + c
        value = Fraction(0)
        for mask in range(1 << c):
            shift = sum(a for j, a in enumerate(spec.degrees) if mask >> j & 1)
            sign = -1 if bin(mask).count("1") % 2 else 1
            value += sign * chi_pn(ambient, k - shift)
    elif spec.kind == "abelian":
        value = Fraction(k**spec.dimension * factorial(spec.dimension) * prod(spec.abelian_type), factorial(spec.dimension))
    else:
        raise ValueError(f"{spec.id}: no independent Euler characteristic for tabulated entries")
    return _as_integer(value, f"chi({k}L)", spec.id)


# ----------------------------------------------------------------------
# Inequality checks driven by the oracle


@dataclass
class NefChainReport:
    """Exact evaluation of 0 <= c_lambda(E)*L^{n-d} <= c_1(E)^d*L^{n-d}
    for the nef twisted bundle E."""

    variety_id: str
    lam: Partition
    value: int
    upper: int
    ring_checked: bool

    @property
    def passed(self) -> bool:
        return 0 <= self.value <= self.upper


def check_nef_chain(spec: VarietySpec, lam: Sequence[int]) -> NefChainReport:
    """Evaluate the twisted-bundle positivity chain on one catalog entry.

    The value c_lambda(E)*L^{n-d} is computed through the symbolic
    expansion; on ring-presented entries it is recomputed directly in
    the ring and the two routes must agree exactly.
    """
    lam = check_partition(lam)
    iv = intersection_vector(spec)
    n = spec.dimension
    d = weight(lam)
    lead, lower = expand_twisted_monomial(lam, n)
    value = lead * Fraction(iv.chern_number(lam))
    for mu, coeff in lower.items():
        value += coeff * iv.chern_number(mu)
    value = _as_integer(value, f"c_{format_partition(lam)}(E)*L^{n - d}", spec.id)

    # c_1(E) = (2n^2+n-1) K + n^2 C_n L, so expand the d-th power on kl.
    alpha = 2 * n * n + n - 1
    beta = n * n * fujita_constant(n)
    upper = sum(comb(d, t) * alpha**t * beta ** (d - t) * iv.kl[t] for t in range(d + 1))

    ring_checked = False
    if spec.kind != "tabulated":
        rng, canonical, line, chern_classes = characteristic_classes(spec)
        delta = rng.add(
            rng.scale(canonical, 2 * n + 1), rng.scale(line, n * fujita_constant(n))
        )
        twisted = [rng.zero() for _ in range(n + 1)]
        for kdx in range(n + 1):
            for j in range(kdx + 1):
                term = rng.scale(
                    rng.mul(chern_classes[j], rng.power(delta, kdx - j)), comb(n - j, kdx - j)
                )
                twisted[kdx] = rng.add(twisted[kdx], term)
        element = rng.power(line, n - d)
        for part in lam:
            element = rng.mul(element, twisted[part])
        direct = _as_integer(rng.integrate(element), "ring-route twisted Chern number", spec.id)
        if direct != value:
            raise IntegrityError(
                f"{spec.id}: twisted Chern number routes disagree for {lam}: "
                f"expansion gives {value}, ring gives {direct}"
            )
        upper_direct = _as_integer(
            rng.integrate(rng.mul(rng.power(twisted[1], d), rng.power(line, n - d))),
            "ring-route c_1(E)^d",
            spec.id,
        )
        if upper_direct != upper:
            raise IntegrityError(
                f"{spec.id}: c_1(E)^{d}*L^{n - d} routes disagree: {upper} vs {upper_direct}"
            )
        ring_checked = True
    return NefChainReport(spec.id, lam, value, upper, ring_checked)


@dataclass
class LogConcavityReport:
    """The mixed-degree sequence s_k = A^k * B^{n-k} and its concavity
    margins s_k^2 - s_{k-1} s_{k+1}."""

    variety_id: str
    sequence: tuple[int, ...]
    margins: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return all(m >= 0 for m in self.margins)


def check_log_concavity(
    spec: VarietySpec, a_class: Element | None = None, b_class: Element | None = None
) -> LogConcavityReport:
    """Log-concavity of (A^k * B^{n-k}) for nef A and B.

    Defaults to A = K + (n+1)L and B = L, which are nef on every catalog
    entry; explicit ring elements may be passed for ring-presented
    entries.  Nefness of caller-supplied classes is the caller's
    responsibility.
    """
    n = spec.dimension
    if a_class is None and b_class is None:
        iv = intersection_vector(spec)
        seq = []
        for k in range(n + 1):
            value = sum(comb(k, t) * (n + 1) ** (k - t) * iv.kl[t] for t in range(k + 1))
            seq.append(value)
    else:
        if spec.kind == "tabulated":
            raise ValueError(f"{spec.id}: explicit classes need a ring presentation")
        rng, canonical, line, _ = characteristic_classes(spec)
        a_elt = a_class if a_class is not None else rng.add(canonical, rng.scale(line, n + 1))
        b_elt = b_class if b_class is not None else line
        seq = [
            _as_integer(
                rng.integrate(rng.mul(rng.power(a_elt, k), rng.power(b_elt, n - k))),
                f"A^{k}*B^{n - k}",
                spec.id,
            )
            for k in range(n + 1)
        ]
    margins = tuple(seq[k] ** 2 - seq[k - 1] * seq[k + 1] for k in range(1, n))
    return LogConcavityReport(spec.id, tuple(seq), margins)


# ----------------------------------------------------------------------
# Catalog


def default_catalog() -> list[VarietySpec]:
    """Built-in catalog: at least eight entries in every dimension 1..4,
    with ample, anti-ample, and trivial canonical class all represented."""
    entries: list[VarietySpec] = []
    # Curves.
    entries.append(projective_space(1))
    entries.append(projective_space(1, polarization_degree=2))
    entries.extend(hypersurface(1, a) for a in (2, 3, 4, 5))
    entries.append(complete_intersection(1, (2, 2)))
    entries.append(complete_intersection(1, (2, 3)))
    entries.append(abelian_variety(1, (1,)))
    entries.append(abelian_variety(1, (3,)))
    # Surfaces.
    entries.append(projective_space(2))
    entries.append(projective_space(2, polarization_degree=2))
    entries.append(product_of_projective_spaces((1, 1), (1, 1)))
    entries.append(product_of_projective_spaces((1, 1), (1, 2)))
    entries.extend(hypersurface(2, a) for a in (2, 3, 4, 5))
    entries.append(complete_intersection(2, (2, 2)))
    entries.append(complete_intersection(2, (2, 3)))
    entries.append(abelian_variety(2, (1, 1)))
    entries.append(abelian_variety(2, (1, 2)))
    # Threefolds.
    entries.append(projective_space(3))
    entries.append(product_of_projective_spaces((1, 2), (1, 1)))
    entries.append(product_of_projective_spaces((1, 1, 1), (1, 1, 1)))
    entries.extend(hypersurface(3, a) for a in (2, 3, 4, 5, 6))
    entries.append(complete_intersection(3, (2, 2)))
    entries.append(complete_intersection(3, (3, 3)))
    entries.append(abelian_variety(3, (1, 1, 1)))
    # Fourfolds.
    entries.append(projective_space(4))
    entries.append(product_of_projective_spaces((1, 3), (1, 1)))
    entries.append(product_of_projective_spaces((2, 2), (1, 1)))
    entries.append(product_of_projective_spaces((1, 1, 2), (1, 1, 1)))
    entries.extend(hypersurface(4, a) for a in (2, 3, 5, 6, 7))
    entries.append(complete_intersection(4, (2, 2)))
    entries.append(complete_intersection(4, (2, 3)))
    entries.append(complete_intersection(4, (2, 3, 3)))
    entries.append(abelian_variety(4, (1, 1, 1, 1)))
    return entries


def spec_to_json_dict(spec: VarietySpec) -> dict:
    data: dict = {"id": spec.id, "kind": spec.kind, "dimension": spec.dimension}
    if spec.kind == "projective_space":
        data["polarization_degree"] = spec.polarization[0]
    elif spec.kind == "product_of_projective_spaces":
        data["factor_dimensions"] = list(spec.factor_dimensions)
        data["polarization"] = list(spec.polarization)
    elif spec.kind == "hypersurface":
        data["degree"] = spec.degrees[0]
    elif spec.kind == "complete_intersection":
        data["degrees"] = list(spec.degrees)
    elif spec.kind == "abelian":
        data["type"] = list(spec.abelian_type)
    else:
        data["kl"] = list(spec.table_kl)
        data["chern"] = {format_partition(lam): v for lam, v in spec.table_chern}
        data["k_ample"] = spec.k_ample
        data["minus_k_ample"] = spec.minus_k_ample
        data["k_trivial"] = spec.k_trivial
        data["ample"] = spec.ample
    return data


def spec_from_json_dict(data: Mapping) -> VarietySpec:
    kind = data["kind"]
    dimension = int(data["dimension"])
    name = data.get("id")
    if kind == "projective_space":
        return projective_space(dimension, int(data.get("polarization_degree", 1)), id=name)
    if kind == "product_of_projective_spaces":
        return product_of_projective_spaces(
            [int(v) for v in data["factor_dimensions"]],
            [int(v) for v in data["polarization"]],
            id=name,
        )
    if kind == "hypersurface":
        return hypersurface(dimension, int(data["degree"]), id=name)
    if kind == "complete_intersection":
        return complete_intersection(dimension, [int(v) for v in data["degrees"]], id=name)
    if kind == "abelian":
        return abelian_variety(dimension, [int(v) for v in data["type"]], id=name)
    if kind == "tabulated":
        chern = {parse_partition(key): int(v) for key, v in data["chern"].items()}
        return tabulated(
            str(name),
            dimension,
            [int(v) for v in data["kl"]],
            chern,
            k_ample=bool(data.get("k_ample", False)),
            minus_k_ample=bool(data.get("minus_k_ample", False)),
            k_trivial=bool(data.get("k_trivial", False)),
            ample=bool(data.get("ample", True)),
        )
    raise ValueError(f"unknown variety kind {kind!r}")


def load_catalog(path: str | Path) -> list[VarietySpec]:
    data = json.loads(Path(path).read_text())
    if isinstance(data, Mapping):
        entries = data.get("varieties")
        if entries is None:
            raise ValueError(f"{path}: catalog object must contain a 'varieties' array")
    else:
        entries = data
    specs = [spec_from_json_dict(entry) for entry in entries]
    seen: set[str] = set()
    for spec in specs:
        if spec.id in seen:
            raise ValueError(f"{path}: duplicate variety id {spec.id!r}")
        seen.add(spec.id)
    return specs


def save_catalog(specs: Iterable[VarietySpec], path: str | Path) -> None:
    payload = {"schema": "v1", "varieties": [spec_to_json_dict(s) for s in specs]}
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")
