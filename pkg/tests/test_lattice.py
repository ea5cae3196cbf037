import numpy as np
import pytest
from hypothesis import given, strategies as st

from honeycomb_dct.lattice import (
    WEYL_DETERMINANTS,
    LatticePoint,
    PointSetKind,
    Weight,
    WeightSetKind,
    coset_residue,
    count_points,
    count_weights,
    d_weight,
    epsilon,
    gamma_action,
    generate_points,
    generate_weights,
    h_weight,
    scalar_product,
    to_cartesian,
    weyl_orbit,
)
from printed import H4, H7_INTERIOR, L4, L7_INTERIOR

coords = st.floats(-5, 5, allow_nan=False)


def test_scalar_product_basis():
    assert scalar_product((1, 0), (1, 0)) == pytest.approx(2 / 3)
    assert scalar_product((0, 1), (0, 1)) == pytest.approx(2 / 3)
    assert scalar_product((1, 0), (0, 1)) == pytest.approx(1 / 3)
    assert scalar_product((1, 1), (1, 1)) == pytest.approx(2)


def test_simple_roots_have_length_two():
    assert scalar_product((2, -1), (2, -1)) == pytest.approx(2)
    assert scalar_product((2, -1), (-1, 2)) == pytest.approx(-1)


def test_weyl_orbit_of_first_fundamental_weight():
    orbit = weyl_orbit((1, 0))
    assert [tuple(v) for v in orbit] == [(1, 0), (-1, 1), (-1, 1), (0, -1), (0, -1), (1, 0)]
    assert len(WEYL_DETERMINANTS) == 6 and sum(WEYL_DETERMINANTS) == 0


@given(coords, coords, coords, coords)
def test_weyl_orbit_is_isometric(a, b, c, d):
    ref = scalar_product((a, b), (c, d))
    for u, v in zip(weyl_orbit((a, b)), weyl_orbit((c, d))):
        assert scalar_product(u, v) == pytest.approx(ref, abs=1e-9)


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_weyl_orbit_of_generic_point_is_free(a, b):
    orbit = set(weyl_orbit((a, b)))
    if a != 0 and b != 0 and a + b != 0:
        assert len(orbit) == 6


def test_printed_sets():
    assert [p.triple for p in generate_points(PointSetKind.HM, 4)] == H4
    assert [w.triple for w in generate_weights(WeightSetKind.LM, 4)] == L4
    assert [p.triple for p in generate_points(PointSetKind.HM_interior, 7)] == H7_INTERIOR
    assert [w.triple for w in generate_weights(WeightSetKind.LM_interior, 7)] == L7_INTERIOR


def test_honeycomb_of_six_has_eighteen_points():
    assert len(generate_points(PointSetKind.HM, 6)) == 18


def test_fixed_set():
    assert [w.triple for w in generate_weights(WeightSetKind.FixedSet, 6)] == [(2, 2, 2)]
    assert generate_weights(WeightSetKind.FixedSet, 7) == []


@pytest.mark.parametrize("M", range(1, 31))
def test_counts_match_enumeration(M):
    for kind in PointSetKind:
        if kind in (PointSetKind.HM1, PointSetKind.HM2):
            continue
        assert len(generate_points(kind, M)) == count_points(kind, M)
    for kind in WeightSetKind:
        assert len(generate_weights(kind, M)) == count_weights(kind, M)
    assert count_weights(WeightSetKind.LM, M) * 2 == count_points(PointSetKind.HM, M)
    assert count_weights(WeightSetKind.LM_interior, M) * 2 == count_points(PointSetKind.HM_interior, M)


@given(st.integers(1, 40))
def test_honeycomb_is_union_of_cosets(M):
    hm = set(generate_points(PointSetKind.HM, M))
    h1 = set(generate_points(PointSetKind.HM1, M))
    h2 = set(generate_points(PointSetKind.HM2, M))
    assert h1 | h2 == hm and not h1 & h2
    fq = set(generate_points(PointSetKind.FQM, M))
    assert hm | fq == set(generate_points(PointSetKind.FPM, M))


def test_coset_residues():
    assert {coset_residue(1), coset_residue(2)} == {1, 2}
    assert coset_residue(1) == 1
    with pytest.raises(ValueError):
        coset_residue(0)


def test_epsilon_table():
    assert epsilon(LatticePoint(1, 2, 4, 7)) == 6
    assert epsilon(LatticePoint(0, 3, 4, 7)) == 3
    assert epsilon(LatticePoint(7, 0, 0, 7)) == 1


def test_h_and_d_tables():
    assert h_weight(Weight(3, 2, 2, 7)) == 1
    assert h_weight(Weight(0, 3, 4, 7)) == 2
    assert h_weight(Weight(7, 0, 0, 7)) == 6
    assert d_weight(Weight(2, 2, 2, 6)) == 3
    assert d_weight(Weight(3, 2, 1, 6)) == 1


def test_gamma_action():
    l = Weight(3, 2, 1, 6)
    assert gamma_action(1, l).triple == (1, 3, 2)
    assert gamma_action(2, l).triple == (2, 1, 3)
    assert gamma_action(0, l) == l
    assert gamma_action(1, gamma_action(2, l)) == l


@given(st.integers(1, 30).flatmap(lambda M: st.tuples(st.just(M), st.integers(0, M), st.integers(0, M))))
def test_lambda_q_is_tiled_by_gamma_images(args):
    M = args[0]
    kite = generate_weights(WeightSetKind.LambdaPM, M)
    tiled = {gamma_action(k, l) for l in kite for k in range(3)}
    assert tiled == set(generate_weights(WeightSetKind.LambdaQM, M))


def test_invalid_points_rejected():
    with pytest.raises(ValueError):
        LatticePoint(1, 1, 1, 4)
    with pytest.raises(ValueError):
        Weight(-1, 3, 2, 4)
    with pytest.raises(ValueError):
        generate_points(PointSetKind.HM, 0)


def test_cartesian_embedding_reproduces_gram():
    X, Y = to_cartesian(np.array([1.0, 0.0]), np.array([0.0, 1.0]))
    e1, e2 = np.array([X[0], Y[0]]), np.array([X[1], Y[1]])
    assert e1 @ e1 == pytest.approx(2 / 3)
    assert e2 @ e2 == pytest.approx(2 / 3)
    assert e1 @ e2 == pytest.approx(1 / 3)
