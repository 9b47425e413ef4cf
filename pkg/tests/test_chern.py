"""Twisted Chern-class expansion: fixtures, invariants, error paths."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chernbound import (
    ChernExpr,
    ConsistencyError,
    DegenerateConstantError,
    all_partitions_up_to,
    expand_twisted_monomial,
    fujita_constant,
    partition_distance,
    twist_chern_class,
)
from chernbound.chern import ChernMonomial, twist_class


def test_fujita_constants():
    assert [fujita_constant(n) for n in range(1, 6)] == [6, 23, 122, 717, 4370]
    with pytest.raises(ValueError):
        fujita_constant(0)


def test_twist_class_is_linear_in_c1_and_L():
    # delta = -(2n+1) c1 + n C_n L
    for n in (1, 2, 3):
        delta = twist_class(n)
        c1 = ChernExpr.chern_class(n, 1)
        line = ChernExpr.line_class(n)
        expected = c1.scale(-(2 * n + 1)) + line.scale(n * fujita_constant(n))
        assert delta.terms == expected.terms


def test_twisted_c1():
    # c_1(E) = c_1 + n*delta = (1 - n(2n+1)) c1 + n^2 C_n L
    for n in (1, 2, 3, 4):
        expr = twist_chern_class(1, n)
        c1_mono = ChernMonomial((), c1_power=1)
        l_mono = ChernMonomial((), l_power=1)
        assert expr.terms[c1_mono] == 1 - n * (2 * n + 1)
        assert expr.terms[l_mono] == n * n * fujita_constant(n)
        assert len(expr.terms) == 2


def test_twisted_c0_is_one():
    assert twist_chern_class(0, 3).terms == ChernExpr.one(3).terms


def test_abstract_twist_keeps_delta():
    expr = twist_chern_class(2, 3, concrete=False)
    # c_2(E) = c_2 + (n-1) c_1 delta + binom(n,2) delta^2 with n = 3
    assert expr.terms[ChernMonomial((2,))] == 1
    assert expr.terms[ChernMonomial((), c1_power=1, delta_power=1)] == 2
    assert expr.terms[ChernMonomial((), delta_power=2)] == 3


def test_expansion_fixture_ones_squared():
    # c_1(E)^2 for surfaces: ((1-10) c1 + 92 L)^2
    lead, lower = expand_twisted_monomial((1, 1), 2)
    assert lead == 81
    assert lower == {(): Fraction(8464), (1,): Fraction(-1656)}


def test_expansion_fixture_c2_surface():
    lead, lower = expand_twisted_monomial((2,), 2)
    assert lead == 1
    assert lower == {
        (1, 1): Fraction(20),
        (1,): Fraction(-414),
        (): Fraction(2116),
    }


def test_expansion_fixture_c2c1_threefold():
    # The same-distance lower term (2) shows up here with weight 2 < 3.
    lead, lower = expand_twisted_monomial((2, 1), 3)
    assert lead == 1 - 3 * 7  # 1 - n(2n+1)
    assert (2,) in lower
    assert partition_distance((2,)) == partition_distance((2, 1))


def test_general_single_row_constant():
    # c_k(E) has leading coefficient binom(n-1, k-1)(-(2n+1)) + ... ;
    # spot-check k = 1 across dimensions via the closed form.
    for n in (1, 2, 3, 4, 5):
        lead, lower = expand_twisted_monomial((1,), n)
        assert lead == 1 - n * (2 * n + 1)
        assert lower == {(): Fraction(n * n * fujita_constant(n))}


def test_expansion_invariants_exhaustive():
    # Integrality, homogeneity (implicit in the checked expansion), and
    # strict (distance, weight) descent for every index with n <= 6.
    for n in range(1, 7):
        for lam in all_partitions_up_to(n):
            lead, lower = expand_twisted_monomial(lam, n)
            assert lead.denominator == 1 and lead != 0
            parent = (partition_distance(lam), sum(lam))
            for mu, coeff in lower.items():
                assert coeff.denominator == 1
                assert (partition_distance(mu), sum(mu)) < parent


def test_pure_c1_powers_have_no_lead_cancellation():
    lead, lower = expand_twisted_monomial((1, 1, 1), 3)
    assert lead == (1 - 3 * 7) ** 3


def test_rejects_bad_indices():
    with pytest.raises(ValueError):
        expand_twisted_monomial((), 2)
    with pytest.raises(ValueError):
        expand_twisted_monomial((3,), 2)
    with pytest.raises(ValueError):
        expand_twisted_monomial((2, 1), 2)
    with pytest.raises(ValueError):
        twist_chern_class(4, 3)
    with pytest.raises(ValueError):
        twist_chern_class(-1, 3)


def test_degenerate_constant_is_reported(monkeypatch):
    # No (lambda, n) with n <= 6 produces C_lambda = 0, so force the
    # arithmetic into the degenerate branch to pin the error type.
    import chernbound.chern as chern_module

    def fake_twist(k, n, concrete=True):
        return ChernExpr.line_class(n).scale(7) if k == 1 else twist_chern_class(k, n, concrete)

    monkeypatch.setattr(chern_module, "twist_chern_class", fake_twist)
    with pytest.raises(DegenerateConstantError):
        chern_module.expand_twisted_monomial((1,), 2)


def test_chern_expr_truncates_above_dimension():
    c2 = ChernExpr.chern_class(2, 2)
    assert (c2 * c2).is_zero
    assert (ChernExpr.line_class(2) ** 3).is_zero


def test_monomial_validation():
    with pytest.raises(ValueError):
        ChernMonomial((1,))
    with pytest.raises(ValueError):
        ChernMonomial((2, 3))
    with pytest.raises(ValueError):
        ChernMonomial((), c1_power=-1)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.data())
def test_delta_substitution_matches_direct_expansion(n, data):
    # Expanding with symbolic delta and substituting afterwards agrees
    # with expanding concretely from the start.
    k = data.draw(st.integers(min_value=0, max_value=n))
    abstract = twist_chern_class(k, n, concrete=False)
    concrete = twist_chern_class(k, n, concrete=True)
    assert abstract.substitute_delta(twist_class(n)).terms == concrete.terms
