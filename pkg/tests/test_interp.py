import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from honeycomb_dct.errors import DomainError
from honeycomb_dct.honeycomb import build_family, eval_family
from honeycomb_dct.interp import (
    TRIANGLE_AREA,
    GrapheneParams,
    ModelParams,
    _squared_error_integral,
    barycentric_grid,
    cartesian_grid,
    evaluate_spectrum,
    graphene_frequencies,
    integral_error,
    interpolate,
    interpolation_report,
    model_function,
    sample_function,
    triangle_midpoints,
)
from honeycomb_dct.lattice import Weight, generate_points, point_arrays
from honeycomb_dct.orbitfn import KernelKind, eval_kernel_oracle
from honeycomb_dct.transform import SpectrumVector, forward


def test_model_value_at_origin():
    expected = 0.4 * np.exp(-(1 / 9 + 1 / 3) / (4 * 0.065**2))
    assert model_function(ModelParams(), (0.0, 0.0)) == pytest.approx(expected)
    assert model_function(ModelParams(), (1 / 3, 1 / 3)) == pytest.approx(0.4)


@given(st.floats(-0.3, 0.3))
def test_model_symmetric_about_centre_line(t):
    p = ModelParams()
    assert model_function(p, (1 / 3 + t, 1 / 3 - t)) == pytest.approx(model_function(p, (1 / 3 - t, 1 / 3 + t)))


@given(st.floats(0, 1), st.floats(0, 1))
def test_model_depends_on_euclidean_distance(a, b):
    # 4 sigma^2 * (-log(f / A)) equals 2 |x - c|^2 in Euclidean terms
    from honeycomb_dct.lattice import scalar_product

    d = (a - 1 / 3, b - 1 / 3)
    q = -np.log(model_function(ModelParams(), (a, b)) / 0.4) * 4 * 0.065**2
    assert q == pytest.approx(2 * scalar_product(d, d), rel=1e-9, abs=1e-12)


def test_invalid_parameters():
    with pytest.raises(DomainError):
        ModelParams(sigma=0)
    with pytest.raises(DomainError):
        GrapheneParams(1, 1, 1.5)
    with pytest.raises(DomainError):
        integral_error(build_family("C", "hartley", 7, 1), ModelParams(), resolution=10)


@pytest.mark.parametrize("n", [1, 2, 5, 17])
def test_triangle_midpoints(n):
    x1, x2 = triangle_midpoints(n)
    assert len(x1) == n * n
    assert np.all(x1 > 0) and np.all(x2 > 0) and np.all(x1 + x2 < 1)
    assert np.mean(x1) == pytest.approx(1 / 3) and np.mean(x2) == pytest.approx(1 / 3)


def test_midpoint_rule_integrates_linear_functions_exactly():
    val = _squared_error_integral(lambda a, b: np.sqrt(a), lambda a, b: 0 * a, 20)
    assert val == pytest.approx(TRIANGLE_AREA / 3)


def test_barycentric_and_cartesian_grid():
    x1, x2 = barycentric_grid(4)
    assert len(x1) == 15 and (x1[0], x2[0]) == (0, 0) and (x1[-1], x2[-1]) == (1, 0)
    a, b, X, Y = cartesian_grid(4)
    assert np.allclose(X[-1], np.sqrt(2 / 3)) and Y[-1] == 0


@pytest.mark.parametrize("kind,ctype", [("C", "I"), ("C", "II"), ("S", "I"), ("S", "III")])
def test_interpolant_reproduces_samples(kind, ctype):
    fam = build_family(kind, "hartley" if ctype != "III" else "fourier", 8, ctype)
    func = lambda a, b: model_function(ModelParams(0.2), (a, b))
    f = sample_function(fam, func)
    s1, s2, M = point_arrays(generate_points(fam.point_kind, 8))
    assert np.allclose(interpolate(fam, f, (s1 / M, s2 / M)), f.values, atol=1e-10)


def test_interpolation_is_exact_on_the_span():
    fam = build_family("C", "hartley", 6, "II")
    l = fam.weights[2]
    target = lambda a, b: eval_family(fam, "-", l, (a, b))
    spec = forward(fam, sample_function(fam, target))
    x1, x2 = barycentric_grid(25)
    assert np.allclose(evaluate_spectrum(fam, spec, (x1, x2)), target(x1, x2), atol=1e-9)


def test_evaluate_spectrum_rejects_foreign_spectrum():
    fam = build_family("C", "hartley", 6, "I")
    with pytest.raises(ValueError):
        evaluate_spectrum(fam, SpectrumVector(5, "C", np.ones(6), np.ones(6)), (0.1, 0.1))


def test_integral_error_small_table_entry():
    err = integral_error(build_family("C", "hartley", 7, "I"), ModelParams(), 200)
    assert err == pytest.approx(2108.4e-7, rel=1e-3)


def test_interpolation_report_rows():
    rows = interpolation_report(Ms=(7, 9), kinds=("C",), types=("I",), resolution=60)
    assert [r["M"] for r in rows] == [7, 9]
    assert set(rows[0]) == {"M", "kind", "kernel", "type", "integral_error", "runtime"}


def test_graphene_frequencies_from_oracle():
    g = GrapheneParams(1.0, 1.0, 0.5)
    l = Weight(2, 2, 0, 4)
    z = abs(eval_kernel_oracle(KernelKind.FourierC, l.omega, (0.25, 0)))
    plus, minus = graphene_frequencies(g, 4, l)
    assert plus == pytest.approx(np.sqrt(0.5 * (3 + z / 2)))
    assert minus == pytest.approx(np.sqrt(0.5 * (3 - z / 2)))


@settings(max_examples=30)
@given(st.integers(1, 30).flatmap(lambda M: st.tuples(st.just(M), st.integers(0, M), st.integers(0, M))))
def test_graphene_radicand_nonnegative(args):
    M, a, b = args
    if a + b > M:
        return
    plus, minus = graphene_frequencies(GrapheneParams(2.0, 0.5, 0.3), M, Weight(M - a - b, a, b, M))
    assert plus >= minus >= 0
