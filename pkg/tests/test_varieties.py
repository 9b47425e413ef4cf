"""The intersection-number oracle against hand-computed fixtures."""

import json
from fractions import Fraction
from math import comb

import pytest

from chernbound import (
    IntegrityError,
    abelian_variety,
    all_partitions_up_to,
    check_log_concavity,
    check_nef_chain,
    complete_intersection,
    default_catalog,
    euler_characteristic_oracle,
    hypersurface,
    intersection_vector,
    load_catalog,
    product_of_projective_spaces,
    projective_space,
    save_catalog,
    tabulated,
)
from chernbound.varieties import GradedRing, characteristic_classes, ring


def test_projective_plane():
    iv = intersection_vector(projective_space(2))
    assert iv.kl == (1, -3, 9)
    assert iv.chern == {(1,): 3, (2,): 3, (1, 1): 9}


def test_projective_space_scaled_polarization():
    iv = intersection_vector(projective_space(2, polarization_degree=2))
    assert iv.kl == (4, -6, 9)
    assert iv.chern == {(1,): 6, (2,): 3, (1, 1): 9}


def test_projective_3_space():
    iv = intersection_vector(projective_space(3))
    assert iv.kl == (1, -4, 16, -64)
    assert iv.chern == {
        (1,): 4,
        (2,): 6,
        (1, 1): 16,
        (3,): 4,
        (2, 1): 24,
        (1, 1, 1): 64,
    }


def test_quadric_surface_two_presentations():
    # P1 x P1 with O(1,1) and the quadric in P3 are the same polarized
    # surface; the oracle must agree on every number.
    product = intersection_vector(product_of_projective_spaces((1, 1), (1, 1)))
    quadric = intersection_vector(hypersurface(2, 2))
    assert product.kl == quadric.kl == (2, -4, 8)
    assert product.chern == quadric.chern == {(1,): 4, (2,): 4, (1, 1): 8}


def test_product_line_times_plane():
    # Kuenneth by hand: c(P1 x P2) = (1 + 2a)(1 + b)^3 with a^2 = 0,
    # b^3 = 0, integral of a*b^2 = 1.
    iv = intersection_vector(product_of_projective_spaces((1, 2), (1, 1)))
    assert iv.kl == (3, -8, 21, -54)
    assert iv.chern == {
        (1,): 8,
        (2,): 9,
        (1, 1): 21,
        (3,): 6,
        (2, 1): 24,
        (1, 1, 1): 54,
    }


def test_quartic_k3():
    iv = intersection_vector(hypersurface(2, 4))
    assert iv.kl == (4, 0, 0)
    assert iv.chern == {(1,): 0, (2,): 24, (1, 1): 0}


def test_quintic_threefold():
    iv = intersection_vector(hypersurface(3, 5))
    assert iv.kl == (5, 0, 0, 0)
    assert iv.chern[(3,)] == -200
    assert iv.chern[(2, 1)] == 0
    assert iv.chern[(2,)] == 50  # c_2 * L = 10 h^3 on a degree-5 ring


def test_cubic_threefold():
    iv = intersection_vector(hypersurface(3, 3))
    assert iv.kl == (3, -6, 12, -24)
    assert iv.chern[(3,)] == -6
    assert iv.chern[(2, 1)] == 24  # 24 * chi(O) for a threefold


def test_complete_intersection_elliptic_curve():
    iv = intersection_vector(complete_intersection(1, (2, 2)))
    assert iv.kl == (4, 0)
    assert iv.chern == {(1,): 0}


def test_plane_curve_genera():
    # K = 2g - 2 on a curve; degree-a plane curves have g = (a-1)(a-2)/2.
    for a, genus in ((2, 0), (3, 1), (4, 3), (5, 6)):
        iv = intersection_vector(hypersurface(1, a))
        assert iv.kl[0] == a
        assert iv.kl[1] == 2 * genus - 2


def test_abelian_surface():
    iv = intersection_vector(abelian_variety(2, (1, 2)))
    assert iv.kl == (4, 0, 0)
    assert iv.chern == {(1,): 0, (2,): 0, (1, 1): 0}


def test_positivity_flags():
    assert projective_space(3).minus_k_ample
    assert hypersurface(2, 5).k_ample
    assert hypersurface(2, 4).k_trivial
    assert hypersurface(2, 3).minus_k_ample
    assert complete_intersection(3, (3, 3)).k_trivial
    assert abelian_variety(2, (1, 1)).k_trivial


def test_catalog_shape():
    specs = default_catalog()
    by_dim: dict[int, list] = {}
    for spec in specs:
        by_dim.setdefault(spec.dimension, []).append(spec)
    for n in (1, 2, 3, 4):
        entries = by_dim[n]
        assert len(entries) >= 8
        assert any(s.k_ample for s in entries)
        assert any(s.minus_k_ample for s in entries)
        assert any(s.k_trivial for s in entries)
    assert len({s.id for s in specs}) == len(specs)


def test_intersection_numbers_are_integers_everywhere():
    for spec in default_catalog():
        iv = intersection_vector(spec)
        assert all(isinstance(v, int) for v in iv.kl)
        assert all(isinstance(v, int) for v in iv.chern.values())
        assert set(iv.chern) == set(all_partitions_up_to(spec.dimension))
        for d in range(1, spec.dimension + 1):
            assert iv.chern[(1,) * d] == (-1) ** d * iv.kl[d]


def test_euler_characteristic_closed_forms():
    p2 = projective_space(2)
    for k in range(-3, 11):
        assert euler_characteristic_oracle(p2, k) == (k + 1) * (k + 2) // 2
    p3 = projective_space(3)
    for k in range(0, 11):
        assert euler_characteristic_oracle(p3, k) == comb(k + 3, 3)
    k3 = hypersurface(2, 4)
    for k in range(1, 11):
        assert euler_characteristic_oracle(k3, k) == 2 * k * k + 2
    conic = hypersurface(1, 2)
    for k in range(0, 11):
        assert euler_characteristic_oracle(conic, k) == 2 * k + 1
    ab = abelian_variety(2, (1, 2))
    for k in range(0, 11):
        assert euler_characteristic_oracle(ab, k) == 2 * k * k


def test_nef_chain_reports():
    report = check_nef_chain(projective_space(2), (2,))
    assert report.passed
    assert report.ring_checked
    assert 0 <= report.value <= report.upper
    for spec in default_catalog():
        for lam in all_partitions_up_to(spec.dimension):
            assert check_nef_chain(spec, lam).passed


def test_log_concavity_default_classes():
    for spec in default_catalog():
        report = check_log_concavity(spec)
        assert report.passed
        assert len(report.sequence) == spec.dimension + 1
        assert report.sequence[0] == intersection_vector(spec).kl[0]


def test_log_concavity_explicit_classes():
    spec = product_of_projective_spaces((1, 1), (1, 1))
    rng, _, _, _ = characteristic_classes(spec)
    a_class = rng.linear((1, 1))
    b_class = rng.linear((1, 0))
    report = check_log_concavity(spec, a_class, b_class)
    assert report.sequence == (0, 1, 2)
    assert report.passed
    with pytest.raises(ValueError):
        check_log_concavity(
            tabulated("t", 1, (1, -2), {(1,): 2}), rng.linear((1, 0)), None
        )


def test_tabulated_round_trip_matches_computed():
    source = intersection_vector(projective_space(2))
    clone = tabulated("P2_table", 2, source.kl, source.chern, minus_k_ample=True)
    iv = intersection_vector(clone)
    assert iv.kl == source.kl
    assert iv.chern == source.chern
    assert check_nef_chain(clone, (2,)).passed
    assert not check_nef_chain(clone, (2,)).ring_checked


def test_tabulated_validation():
    with pytest.raises(IntegrityError):
        # c_1 * L must equal -K * L.
        intersection_vector(
            tabulated("bad", 2, (1, -3, 9), {(1,): 5, (2,): 3, (1, 1): 9})
        )
    with pytest.raises(IntegrityError):
        intersection_vector(tabulated("short", 2, (1, -3), {(1,): 3, (2,): 3, (1, 1): 9}))
    with pytest.raises(IntegrityError):
        intersection_vector(tabulated("missing", 2, (1, -3, 9), {(1,): 3, (1, 1): 9}))
    with pytest.raises(ValueError):
        ring(tabulated("t", 2, (1, -3, 9), {(1,): 3, (2,): 3, (1, 1): 9}))
    with pytest.raises(ValueError):
        euler_characteristic_oracle(
            tabulated("t", 2, (1, -3, 9), {(1,): 3, (2,): 3, (1, 1): 9}), 1
        )


def test_graded_ring_basics():
    rng = GradedRing(2, ("h",), (2,), {(2,): 1})
    h = rng.linear((1,))
    assert rng.integrate(rng.power(h, 2)) == 1
    assert rng.power(h, 3) == {}
    assert rng.integrate(rng.one()) == 0
    with pytest.raises(IntegrityError):
        GradedRing(2, ("h",), (2,), {(1,): 1})


def test_catalog_json_round_trip(tmp_path):
    specs = default_catalog()
    source = intersection_vector(projective_space(2))
    specs = specs + [tabulated("P2_table", 2, source.kl, source.chern, minus_k_ample=True)]
    path = tmp_path / "catalog.json"
    save_catalog(specs, path)
    loaded = load_catalog(path)
    assert loaded == specs
    payload = json.loads(path.read_text())
    assert payload["schema"] == "v1"


def test_catalog_rejects_duplicates(tmp_path):
    path = tmp_path / "catalog.json"
    save_catalog([projective_space(2), projective_space(2)], path)
    with pytest.raises(ValueError):
        load_catalog(path)


def test_constructor_validation():
    with pytest.raises(ValueError):
        projective_space(2, polarization_degree=0)
    with pytest.raises(ValueError):
        product_of_projective_spaces((1,), (1,))
    with pytest.raises(ValueError):
        product_of_projective_spaces((1, 1), (1, 0))
    with pytest.raises(ValueError):
        hypersurface(2, 0)
    with pytest.raises(ValueError):
        complete_intersection(2, ())
    with pytest.raises(ValueError):
        abelian_variety(2, (1,))
