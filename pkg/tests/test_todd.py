"""Todd components against an independent symmetric-function oracle,
Hilbert coefficients against combinatorial Euler characteristics, and
the Riemann-Roch tail bound on the whole catalog."""

from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest

from chernbound import (
    MultiPoly,
    default_catalog,
    describe_tail_margin,
    euler_characteristic_oracle,
    hilbert_coefficients,
    hypersurface,
    projective_space,
    rr_tail_bound,
    tabulated,
    todd_coefficients,
    todd_component,
)
from chernbound.series import series_fit, series_inverse


def frac(num, den=1):
    return Fraction(num, den)


# ----------------------------------------------------------------------
# Independent oracle: expand prod_k t_k/(1 - exp(-t_k)) in root
# variables, then rewrite each graded piece in elementary symmetric
# polynomials by leading-term peeling.

M = 5
ROOTS = tuple(f"t{k}" for k in range(1, M + 1))


def elementary_symmetric(j: int) -> MultiPoly:
    total = MultiPoly.zero(ROOTS)
    for combo in combinations(range(M), j):
        exps = tuple(1 if idx in combo else 0 for idx in range(M))
        total = total + MultiPoly(ROOTS, {exps: 1})
    return total


def todd_in_roots() -> MultiPoly:
    # Q(t) = t / (1 - exp(-t)) as a series, one factor per root.
    g = series_fit([Fraction((-1) ** k, factorial(k + 1)) for k in range(M + 1)], M + 1)
    q = series_inverse(g, M + 1)
    product = MultiPoly.constant(ROOTS, 1)
    for k in range(M):
        factor = MultiPoly.zero(ROOTS)
        for j, c in enumerate(q):
            exps = tuple(j if idx == k else 0 for idx in range(M))
            factor = factor + MultiPoly(ROOTS, {exps: c})
        product = product * factor
    return product


def graded_part(poly: MultiPoly, degree: int) -> MultiPoly:
    return MultiPoly(
        ROOTS, {e: c for e, c in poly.terms.items() if sum(e) == degree}
    )


def in_elementary_basis(symmetric: MultiPoly) -> dict[tuple[int, ...], Fraction]:
    """Partition-of-i keyed coefficients, found by peeling lex-leading terms."""
    remaining = symmetric
    result: dict[tuple[int, ...], Fraction] = {}
    while not remaining.is_zero:
        lead = max(remaining.terms)
        coeff = remaining.terms[lead]
        exps = list(lead) + [0]
        partition_parts = []
        e_product = MultiPoly.constant(ROOTS, 1)
        for j in range(1, M + 1):
            multiplicity = exps[j - 1] - exps[j]
            assert multiplicity >= 0, "leading term of a symmetric polynomial"
            partition_parts.extend([j] * multiplicity)
            for _ in range(multiplicity):
                e_product = e_product * elementary_symmetric(j)
        key = tuple(sorted(partition_parts, reverse=True))
        result[key] = result.get(key, Fraction(0)) + coeff
        remaining = remaining - coeff * e_product
    return {k: v for k, v in result.items() if v}


def test_todd_matches_symmetric_function_oracle():
    expansion = todd_in_roots()
    for i in range(0, M + 1):
        oracle = in_elementary_basis(graded_part(expansion, i))
        assert todd_coefficients(i) == oracle, f"degree {i}"


def test_todd_closed_forms():
    assert todd_coefficients(0) == {(): frac(1)}
    assert todd_coefficients(1) == {(1,): frac(1, 2)}
    assert todd_coefficients(2) == {(1, 1): frac(1, 12), (2,): frac(1, 12)}
    assert todd_coefficients(3) == {(2, 1): frac(1, 24)}
    assert todd_coefficients(4) == {
        (1, 1, 1, 1): frac(-1, 720),
        (2, 1, 1): frac(1, 180),
        (2, 2): frac(1, 240),
        (3, 1): frac(1, 720),
        (4,): frac(-1, 720),
    }
    assert todd_coefficients(5) == {
        (2, 1, 1, 1): frac(-1, 1440),
        (2, 2, 1): frac(1, 480),
        (3, 1, 1): frac(1, 1440),
        (4, 1): frac(-1, 1440),
    }


def test_todd_component_rejects_negative():
    with pytest.raises(ValueError):
        todd_component(-1)


def test_todd_keys_are_partitions():
    for i in range(1, 7):
        for lam in todd_coefficients(i):
            assert sum(lam) == i
            assert all(a >= b for a, b in zip(lam, lam[1:]))


# ----------------------------------------------------------------------
# Hilbert coefficients


def test_hilbert_fixtures():
    p2 = hilbert_coefficients(projective_space(2))
    assert p2.coefficients == (frac(1, 2), frac(3, 2), frac(1))
    k3 = hilbert_coefficients(hypersurface(2, 4))
    assert k3.coefficients == (frac(2), frac(0), frac(2))
    quintic = hilbert_coefficients(hypersurface(3, 5))
    assert quintic.coefficients == (frac(5, 6), frac(0), frac(25, 6), frac(0))


def test_hilbert_matches_euler_characteristic_everywhere():
    for spec in default_catalog():
        data = hilbert_coefficients(spec)
        for k in range(0, 11):
            assert data.value_at(k) == euler_characteristic_oracle(spec, k), (
                spec.id,
                k,
            )


def test_hilbert_refuses_non_ample_polarization():
    spec = tabulated(
        "nonample", 1, (1, -2), {(1,): 2}, minus_k_ample=True, ample=False
    )
    with pytest.raises(ValueError):
        hilbert_coefficients(spec)


# ----------------------------------------------------------------------
# Tail bound


def test_tail_bound_structure():
    for n in (1, 2, 3, 4):
        for m in range(0, n):
            q = rr_tail_bound(n, m)
            assert q.variables == ("x", "y", "z")
            assert q.degree_in("z") <= n - m - 1
            assert not q.is_zero


def test_tail_bound_rejects_bad_truncation():
    with pytest.raises(ValueError):
        rr_tail_bound(3, 3)
    with pytest.raises(ValueError):
        rr_tail_bound(3, -1)
    with pytest.raises(ValueError):
        rr_tail_bound(0, 0)


def test_tail_bound_dominates_catalog_tails():
    for spec in default_catalog():
        n = spec.dimension
        for m in range(0, n):
            report = describe_tail_margin(spec, m)
            assert report["margin"] >= 0, (spec.id, m, report["margin"])
            assert len(report["rows"]) == 10


def test_tail_bound_value_fixture():
    # n = 2, m = 1 keeps only the i = 2 layer: sum over weight-2
    # partitions of |t_lambda| * Q_lambda with t = 1/12 for both.
    q = rr_tail_bound(2, 1)
    assert q.degree_in("z") == 0
    assert q.coefficient((2, 0, 0)) == frac(13433 + 45, 12)
    assert q.coefficient((1, 1, 0)) == frac(1242 + 6, 12)
    assert q.coefficient((0, 2, 0)) == frac(61 + 1, 12)
