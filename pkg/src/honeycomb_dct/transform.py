"""
Discrete honeycomb transforms.

C-transforms act on functions sampled on the honeycomb fragment ``H_M``,
S-transforms on its interior.  Spectra keep the ``+`` and ``-`` coefficient
vectors separately, both indexed by the family's ordered weight set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, DomainError
from .honeycomb import HoneycombFamily, family_values
from .lattice import LatticePoint, PointSetKind, epsilon, generate_points, h_weight

__all__ = [
    "SampleVector",
    "SpectrumVector",
    "TransformMatrix",
    "scalar_product_points",
    "scalar_product_HM",
    "scalar_product_HM_interior",
    "forward_c",
    "inverse_c",
    "forward_s",
    "inverse_s",
    "forward",
    "inverse",
    "build_matrix",
    "basis_norms",
    "gram_matrix",
    "plancherel",
]


@dataclass(frozen=True, eq=False)
class SampleVector:
    M: int
    domain: PointSetKind
    values: np.ndarray

    def __post_init__(self):
        domain = PointSetKind(self.domain)
        if domain not in (PointSetKind.HM, PointSetKind.HM_interior):
            raise DomainError(f"samples live on HM or HM_interior, not {domain.value}")
        values = np.asarray(self.values)
        if values.ndim != 1 or len(values) != len(generate_points(domain, self.M)):
            raise DimensionMismatch(
                f"{domain.value} with M={self.M} has {len(generate_points(domain, self.M))} points, got {values.shape}"
            )
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "values", values)

    @property
    def points(self) -> list[LatticePoint]:
        return generate_points(self.domain, self.M)


@dataclass(frozen=True, eq=False)
class SpectrumVector:
    M: int
    kind: str
    plus: np.ndarray
    minus: np.ndarray

    def __post_init__(self):
        plus, minus = np.asarray(self.plus), np.asarray(self.minus)
        if plus.shape != minus.shape or plus.ndim != 1:
            raise DimensionMismatch(f"plus/minus shapes differ: {plus.shape} vs {minus.shape}")
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)


@dataclass(frozen=True, eq=False)
class TransformMatrix:
    """Square unitary matrix: ``+`` rows on top, ``-`` rows below, columns by point."""

    M: int
    kind: str
    kernel: str
    label: str
    data: np.ndarray

    @property
    def plus_block(self) -> np.ndarray:
        return self.data[: len(self.data) // 2]

    @property
    def minus_block(self) -> np.ndarray:
        return self.data[len(self.data) // 2 :]


def scalar_product_points(points, f, g) -> complex:
    """Weighted scalar product ``sum eps(s) f(s) conj(g(s))`` over a point list."""
    f, g = np.asarray(f), np.asarray(g)
    if f.shape != (len(points),) or g.shape != (len(points),):
        raise DimensionMismatch(f"expected {len(points)} samples, got {f.shape} and {g.shape}")
    eps = np.array([epsilon(s) for s in points], dtype=float)
    return complex(np.sum(eps * f * np.conj(g)))


def _check_pair(f: SampleVector, g: SampleVector, domain: PointSetKind):
    if f.M != g.M or f.domain is not domain or g.domain is not domain:
        raise DimensionMismatch(
            f"scalar product needs two {domain.value} vectors of equal M, got "
            f"({f.domain.value}, M={f.M}) and ({g.domain.value}, M={g.M})"
        )


def scalar_product_HM(f: SampleVector, g: SampleVector) -> complex:
    _check_pair(f, g, PointSetKind.HM)
    return scalar_product_points(f.points, f.values, g.values)


def scalar_product_HM_interior(f: SampleVector, g: SampleVector) -> complex:
    _check_pair(f, g, PointSetKind.HM_interior)
    return complex(6 * np.sum(f.values * np.conj(g.values)))


def _samples(fam: HoneycombFamily):
    cached = fam.__dict__.get("_samples")
    if cached is None:
        points = generate_points(fam.point_kind, fam.M)
        plus, minus = family_values(fam, points)
        eps = np.array([epsilon(s) for s in points], dtype=float)
        cached = (points, plus, minus, eps)
        object.__setattr__(fam, "_samples", cached)
    return cached


def basis_norms(fam: HoneycombFamily) -> tuple[np.ndarray, np.ndarray]:
    """Squared norms ``<F_l, F_l>`` of the ``+`` and ``-`` basis functions.

    These equal ``12 M^2 h_M(l) mu^{+-}(l)``; interior weights have ``h_M = 1``.
    """
    h = np.array([h_weight(w) for w in fam.weights], dtype=float)
    scale = 12.0 * fam.M**2 * h
    return scale * fam.mu_plus, scale * fam.mu_minus


def _check_family(fam: HoneycombFamily, kind: str):
    if fam.kind != kind:
        raise DimensionMismatch(f"expected a {kind}-family, got kind {fam.kind}")


def _forward(fam: HoneycombFamily, f: SampleVector) -> SpectrumVector:
    if f.M != fam.M or f.domain is not fam.point_kind:
        raise DimensionMismatch(
            f"family expects {fam.point_kind.value} samples with M={fam.M}, got {f.domain.value} with M={f.M}"
        )
    _, plus, minus, eps = _samples(fam)
    nplus, nminus = basis_norms(fam)
    weighted = eps * f.values
    cp = (np.conj(plus) @ weighted) / nplus
    cm = (np.conj(minus) @ weighted) / nminus
    return SpectrumVector(fam.M, fam.kind, cp, cm)


def _inverse(fam: HoneycombFamily, spec: SpectrumVector) -> SampleVector:
    if spec.M != fam.M or spec.kind != fam.kind or len(spec.plus) != len(fam):
        raise DimensionMismatch(
            f"spectrum (M={spec.M}, kind={spec.kind}, n={len(spec.plus)}) does not fit family "
            f"(M={fam.M}, kind={fam.kind}, n={len(fam)})"
        )
    _, plus, minus, _ = _samples(fam)
    values = spec.plus @ plus + spec.minus @ minus
    return SampleVector(fam.M, fam.point_kind, values)


def forward_c(fam: HoneycombFamily, f: SampleVector) -> SpectrumVector:
    """Spectrum ``c_l = <f, Ch_l>_{H_M} / (12 M^2 h_M(l) mu(l))`` of samples on H_M."""
    _check_family(fam, "C")
    return _forward(fam, f)


def inverse_c(fam: HoneycombFamily, spec: SpectrumVector) -> SampleVector:
    _check_family(fam, "C")
    return _inverse(fam, spec)


def forward_s(fam: HoneycombFamily, f: SampleVector) -> SpectrumVector:
    """Spectrum ``c_l = sum f(s) conj(Sh_l(s)) / (2 M^2 mu(l))`` of interior samples."""
    _check_family(fam, "S")
    if fam.M <= 3:
        raise DomainError("S-transforms require M > 3")
    return _forward(fam, f)


def inverse_s(fam: HoneycombFamily, spec: SpectrumVector) -> SampleVector:
    _check_family(fam, "S")
    return _inverse(fam, spec)


def forward(fam: HoneycombFamily, f: SampleVector) -> SpectrumVector:
    return forward_c(fam, f) if fam.kind == "C" else forward_s(fam, f)


def inverse(fam: HoneycombFamily, spec: SpectrumVector) -> SampleVector:
    return inverse_c(fam, spec) if fam.kind == "C" else inverse_s(fam, spec)


def build_matrix(fam: HoneycombFamily) -> TransformMatrix:
    """Unitary matrix of the normalized transform.

    Entry ``(l, s)`` of the ``+`` block is
    ``sqrt(eps(s) / (12 M^2 h_M(l) mu^+(l))) * conj(F^+_l(s))``, and likewise
    for ``-``.  On the interior ``eps = 6`` and ``h_M = 1``, which reduces to
    ``sqrt(1 / (2 M^2 mu(l)))``.
    """
    _, plus, minus, eps = _samples(fam)
    nplus, nminus = basis_norms(fam)
    root_eps = np.sqrt(eps)
    top = np.conj(plus) * root_eps / np.sqrt(nplus)[:, None]
    bottom = np.conj(minus) * root_eps / np.sqrt(nminus)[:, None]
    data = np.vstack([top, bottom])
    data.setflags(write=False)
    return TransformMatrix(fam.M, fam.kind, fam.kernel, fam.label, data)


def gram_matrix(fam: HoneycombFamily) -> np.ndarray:
    """Gram matrix of all ``2|L|`` basis functions under the family's scalar product.

    Row/column order: ``+`` functions in weight order, then ``-`` functions.
    """
    _, plus, minus, eps = _samples(fam)
    basis = np.vstack([plus, minus])
    return (basis * eps) @ np.conj(basis).T


def plancherel(fam: HoneycombFamily, f: SampleVector) -> tuple[float, float]:
    """Both sides of the energy identity: sample energy and spectral energy.

    For C-families this is ``sum eps |f|^2`` against
    ``12 M^2 sum h_M (mu^+ |c^+|^2 + mu^- |c^-|^2)``; for S-families
    ``sum |f|^2`` against ``2 M^2 sum (mu^+ |c^+|^2 + mu^- |c^-|^2)``.
    """
    spec = forward(fam, f)
    nplus, nminus = basis_norms(fam)
    spectral = float(np.sum(nplus * np.abs(spec.plus) ** 2 + nminus * np.abs(spec.minus) ** 2))
    if fam.kind == "C":
        _, _, _, eps = _samples(fam)
        return float(np.sum(eps * np.abs(f.values) ** 2)), spectral
    return float(np.sum(np.abs(f.values) ** 2)), spectral / 6.0
