"""
Interpolation experiments and the mechanical-graphene frequency formula.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, DomainError
from .honeycomb import HoneycombFamily, build_family, eval_family
from .lattice import Weight, generate_points, point_arrays, to_cartesian
from .orbitfn import KernelKind, eval_kernel
from .transform import SampleVector, SpectrumVector, forward

__all__ = [
    "ModelParams",
    "GrapheneParams",
    "TRIANGLE_AREA",
    "model_function",
    "sample_function",
    "evaluate_spectrum",
    "interpolate",
    "triangle_midpoints",
    "barycentric_grid",
    "cartesian_grid",
    "integral_error",
    "interpolation_report",
    "graphene_frequencies",
]

# Euclidean area of the fundamental triangle with vertices 0, omega_1, omega_2.
TRIANGLE_AREA = np.sqrt(3.0) / 6.0


@dataclass(frozen=True)
class ModelParams:
    sigma: float = 0.065
    amplitude: float = 0.4

    def __post_init__(self):
        if not self.sigma > 0:
            raise DomainError(f"sigma must be positive, got {self.sigma}")


@dataclass(frozen=True)
class GrapheneParams:
    kappa: float
    m: float
    eta: float

    def __post_init__(self):
        if not self.kappa > 0 or not self.m > 0:
            raise DomainError("spring constant and mass must be positive")
        if not 0 < self.eta < 1:
            raise DomainError(f"stretching ratio must lie in (0, 1), got {self.eta}")


def model_function(p: ModelParams, x):
    """Gaussian bump centred at the barycentre (1/3, 1/3) of the triangle."""
    x1 = np.asarray(x[0], dtype=float)
    x2 = np.asarray(x[1], dtype=float)
    q = (x1 - 1.0 / 3.0) ** 2 + (x1 + 2.0 * x2 - 1.0) ** 2 / 3.0
    out = p.amplitude * np.exp(-q / (4.0 * p.sigma**2))
    return out[()] if out.ndim == 0 else out


def sample_function(fam: HoneycombFamily, func) -> SampleVector:
    """Sample ``func(x1, x2)`` on the family's interpolation nodes."""
    points = generate_points(fam.point_kind, fam.M)
    s1, s2, M = point_arrays(points)
    values = np.asarray(func(s1 / M, s2 / M))
    return SampleVector(fam.M, fam.point_kind, values)


def evaluate_spectrum(fam: HoneycombFamily, spec: SpectrumVector, x):
    """Evaluate ``sum_l c^+_l F^+_l(x) + c^-_l F^-_l(x)`` at arbitrary points."""
    if spec.M != fam.M or spec.kind != fam.kind or len(spec.plus) != len(fam):
        raise DimensionMismatch("spectrum does not match family")
    x1 = np.asarray(x[0], dtype=float)
    x2 = np.asarray(x[1], dtype=float)
    total = np.zeros(np.broadcast(x1, x2).shape, dtype=complex)
    for w, cp, cm in zip(fam.weights, spec.plus, spec.minus):
        if cp != 0:
            total += cp * eval_family(fam, "+", w, (x1, x2))
        if cm != 0:
            total += cm * eval_family(fam, "-", w, (x1, x2))
    return total[()] if total.ndim == 0 else total


def interpolate(fam: HoneycombFamily, f_samples: SampleVector, x):
    """Value at ``x`` of the trigonometric interpolant of the samples."""
    return evaluate_spectrum(fam, forward(fam, f_samples), x)


def triangle_midpoints(resolution: int) -> tuple[np.ndarray, np.ndarray]:
    """Centroids of the ``resolution**2`` congruent sub-triangles of F_Q.

    The triangle is cut by lines ``x1 = i/n``, ``x2 = j/n`` and
    ``x1 + x2 = k/n``; there are ``n(n+1)/2`` upright and ``n(n-1)/2``
    inverted cells.
    """
    n = int(resolution)
    if n < 1:
        raise DomainError("resolution must be positive")
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    i, j = i.ravel(), j.ravel()
    up = i + j <= n - 1
    down = i + j <= n - 2
    x1 = np.concatenate([(i[up] + 1.0 / 3.0) / n, (i[down] + 2.0 / 3.0) / n])
    x2 = np.concatenate([(j[up] + 1.0 / 3.0) / n, (j[down] + 2.0 / 3.0) / n])
    return x1, x2


def barycentric_grid(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes ``(i/n, j/n)`` with ``i + j <= n``, ordered by ``i`` then ``j``."""
    if n < 1:
        raise DomainError("grid size must be positive")
    pairs = [(i, j) for i in range(n + 1) for j in range(n + 1 - i)]
    arr = np.array(pairs, dtype=float) / n
    return arr[:, 0], arr[:, 1]


def _squared_error_integral(func, approx, resolution: int) -> float:
    x1, x2 = triangle_midpoints(resolution)
    diff = np.asarray(func(x1, x2)) - np.asarray(approx(x1, x2))
    cell = TRIANGLE_AREA / resolution**2
    return float(np.sum(np.abs(diff) ** 2) * cell)


def integral_error(fam: HoneycombFamily, p: ModelParams, resolution: int = 200) -> float:
    """Midpoint-rule estimate of the integral of ``|f - I[f]|^2`` over F_Q."""
    if resolution < 50:
        raise DomainError("resolution must be at least 50")
    func = lambda a, b: model_function(p, (a, b))
    spec = forward(fam, sample_function(fam, func))
    return _squared_error_integral(func, lambda a, b: evaluate_spectrum(fam, spec, (a, b)), resolution)


def interpolation_report(
    Ms=(7, 9, 11, 13, 15),
    kinds=("C", "S"),
    types=("I", "II"),
    kernel: str = "hartley",
    sigma: float = 0.065,
    resolution: int = 200,
) -> list[dict]:
    """Integral errors of the Gaussian model interpolants, one row per configuration."""
    p = ModelParams(sigma)
    rows = []
    for kind in kinds:
        for t in types:
            for M in Ms:
                start = time.perf_counter()
                fam = build_family(kind, kernel, M, t)
                err = integral_error(fam, p, resolution)
                rows.append(
                    {
                        "M": M,
                        "kind": kind,
                        "kernel": kernel,
                        "type": t,
                        "integral_error": err,
                        "runtime": time.perf_counter() - start,
                    }
                )
    return rows


def graphene_frequencies(g: GrapheneParams, M: int, l: Weight) -> tuple[float, float]:
    """Transversal eigenfrequencies ``(omega^+, omega^-)`` attached to weight ``l``."""
    z = abs(complex(eval_kernel(KernelKind.FourierC, l, (1.0 / M, 0.0))))
    factor = g.kappa * (1.0 - g.eta) / g.m
    plus, minus = factor * (3.0 + 0.5 * z), factor * (3.0 - 0.5 * z)
    if minus < 0:
        raise DomainError(f"negative radicand {minus} for weight {l.triple}")
    return float(np.sqrt(plus)), float(np.sqrt(minus))


def cartesian_grid(n: int):
    """Barycentric grid in omega- and Cartesian coordinates."""
    x1, x2 = barycentric_grid(n)
    X, Y = to_cartesian(x1, x2)
    return x1, x2, X, Y

