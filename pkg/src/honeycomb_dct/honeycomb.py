"""
Extended and honeycomb orbit functions.

An extended function attached to a weight ``l`` combines the base kernel at
the three labels of the cyclic orbit ``{l, gamma_1 l, gamma_2 l}``::

    F^{+}_l(x) = mu^{+,0} K_l(x) + mu^{+,1} K_{gamma_1 l}(x) + mu^{+,2} K_{gamma_2 l}(x)

and likewise for ``F^{-}``.  When both normalizations ``mu^{+}(l)``, ``mu^{-}(l)``
are positive and the intertwining value ``beta(l)`` vanishes, the family is
discretely orthogonal on the honeycomb fragment ``H_M`` (C kind) or its
interior (S kind).
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field

import numpy as np

from .errors import AdmissibilityError, DomainError, UnknownWeight
from .lattice import (
    LatticePoint,
    PointSetKind,
    Weight,
    WeightSetKind,
    generate_weights,
    point_arrays,
)
from .orbitfn import KernelKind, eval_kernel, eval_kernel_lattice

__all__ = [
    "ExtensionCoeffs",
    "HoneycombFamily",
    "normalization_mu",
    "intertwining_beta",
    "coeffs_type1",
    "coeffs_type2",
    "coeffs_type3",
    "gamma_label",
    "build_family",
    "eval_family",
    "family_values",
    "ALTERNATE_TYPE1",
]

BETA_RTOL = 1e-9
MU_RTOL = 1e-12


@dataclass(frozen=True)
class ExtensionCoeffs:
    plus: tuple[complex, complex, complex]
    minus: tuple[complex, complex, complex]

    def __post_init__(self):
        plus = tuple(complex(v) for v in self.plus)
        minus = tuple(complex(v) for v in self.minus)
        if len(plus) != 3 or len(minus) != 3:
            raise ValueError("extension coefficients come in two triples")
        if not all(np.isfinite(v) for v in plus + minus):
            raise ValueError("extension coefficients must be finite")
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

    def triple(self, sign: str) -> tuple[complex, complex, complex]:
        return self.plus if _sign(sign) > 0 else self.minus

    @property
    def is_real(self) -> bool:
        return all(v.imag == 0 for v in self.plus + self.minus)

    @property
    def scale(self) -> float:
        return sum(abs(v) ** 2 for v in self.plus + self.minus)


def _sign(sign) -> int:
    if sign in ("+", 1, "plus"):
        return 1
    if sign in ("-", -1, "minus"):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def normalization_mu(triple) -> float:
    """Normalization ``|a|^2+|b|^2+|c|^2 - Re(a b* + a c* + b c*)``; never negative."""
    a, b, c = (complex(v) for v in triple)
    sq = abs(a) ** 2 + abs(b) ** 2 + abs(c) ** 2
    cross = a * b.conjugate() + a * c.conjugate() + b * c.conjugate()
    return sq - cross.real


def intertwining_beta(plus, minus) -> complex:
    p0, p1, p2 = (complex(v) for v in plus)
    m0, m1, m2 = (complex(v).conjugate() for v in minus)
    return 2 * (p0 * m0 + p1 * m1 + p2 * m2) - p0 * (m1 + m2) - p1 * (m0 + m2) - p2 * (m0 + m1)


def coeffs_type1() -> ExtensionCoeffs:
    return ExtensionCoeffs((1, 0, 0), (0, 1, -1))


# Further weight-independent type-I choices.
ALTERNATE_TYPE1 = (
    ExtensionCoeffs((0, 1, 0), (1, 0, -1)),
    ExtensionCoeffs((0, 0, 1), (1, -1, 0)),
)


def coeffs_type2(l: Weight, M: int | None = None) -> ExtensionCoeffs:
    """Weight-dependent real coefficients built from ``z = Phi_l(omega_1 / M)``."""
    M = l.M if M is None else M
    z = complex(eval_kernel(KernelKind.FourierC, l, (1.0 / M, 0.0)))
    r3 = np.sqrt(3.0)
    first = ((3 + r3 * 1j) * z).real
    last = ((3 - r3 * 1j) * z).real
    return ExtensionCoeffs((first, 0.0, last + 3 * abs(z)), (first, 0.0, last - 3 * abs(z)))


def coeffs_type3() -> ExtensionCoeffs:
    w = np.exp(2j * np.pi / 3)
    return ExtensionCoeffs((1, w, w.conjugate()), (1, w.conjugate(), w))


_ROT = np.array([[-1, -1], [1, 0]])  # r1 r2 acting on omega-coordinates


def gamma_label(k: int, l: Weight) -> tuple[int, int]:
    """Omega-coordinates of ``(r1 r2)^k l + M omega_k``, the label of gamma_k l."""
    k %= 3
    v = np.array([l.l1, l.l2])
    for _ in range(k):
        v = _ROT @ v
    if k:
        v[k - 1] += l.M
    return int(v[0]), int(v[1])


@dataclass(frozen=True, eq=False)
class HoneycombFamily:
    """A validated honeycomb C- or S-family at resolution ``M``."""

    M: int
    kind: str  # "C" or "S"
    kernel: str  # "fourier" or "hartley"
    weights: tuple[Weight, ...]
    coeffs: tuple[ExtensionCoeffs, ...]
    mu_plus: np.ndarray = field(repr=False)
    mu_minus: np.ndarray = field(repr=False)
    label: str = "custom"

    @property
    def kernel_kind(self) -> KernelKind:
        if self.kernel == "fourier":
            return KernelKind.FourierC if self.kind == "C" else KernelKind.FourierS
        return KernelKind.HartleyC if self.kind == "C" else KernelKind.HartleyS

    @property
    def point_kind(self) -> PointSetKind:
        return PointSetKind.HM if self.kind == "C" else PointSetKind.HM_interior

    @property
    def weight_kind(self) -> WeightSetKind:
        return WeightSetKind.LM if self.kind == "C" else WeightSetKind.LM_interior

    @property
    def is_real(self) -> bool:
        return self.kernel == "hartley" and all(c.is_real for c in self.coeffs)

    def mu(self, sign) -> np.ndarray:
        return self.mu_plus if _sign(sign) > 0 else self.mu_minus

    def index(self, l: Weight) -> int:
        try:
            return self._index[l]
        except KeyError:
            raise UnknownWeight(f"weight {l.triple} (M={l.M}) is not in the family") from None

    def __post_init__(self):
        object.__setattr__(self, "_index", {w: i for i, w in enumerate(self.weights)})

    def __len__(self) -> int:
        return len(self.weights)


def _normalize_kind(kind: str) -> str:
    kind = str(kind).upper()
    if kind not in ("C", "S"):
        raise ValueError(f"kind must be 'C' or 'S', got {kind!r}")
    return kind


def _normalize_kernel(kernel: str) -> str:
    kernel = str(kernel).lower()
    if kernel not in ("fourier", "hartley"):
        raise ValueError(f"kernel must be 'fourier' or 'hartley', got {kernel!r}")
    return kernel


_TYPE_NAMES = {1: "I", 2: "II", 3: "III", "1": "I", "2": "II", "3": "III", "I": "I", "II": "II", "III": "III"}


def build_family(kind: str, kernel: str, M: int, coeff_source) -> HoneycombFamily:
    """Build and validate a honeycomb family.

    ``coeff_source`` is a type tag (1/2/3 or "I"/"II"/"III"), a single
    :class:`ExtensionCoeffs` used for every weight, a callable
    ``weight -> ExtensionCoeffs``, or a mapping keyed by :class:`Weight` or by
    the integer triple.  A mapping must cover the weight set exactly.

    Raises :class:`AdmissibilityError` on the first weight violating
    ``mu^+ > 0``, ``mu^- > 0`` or ``beta = 0``.
    """
    kind = _normalize_kind(kind)
    kernel = _normalize_kernel(kernel)
    if M < 1:
        raise DomainError(f"M must be positive, got {M}")
    if kind == "S" and M <= 3:
        raise DomainError(f"S-families require M > 3, got M={M}")
    weights = generate_weights(WeightSetKind.LM if kind == "C" else WeightSetKind.LM_interior, M)

    label = "custom"
    getter: Callable[[Weight], ExtensionCoeffs]
    if isinstance(coeff_source, ExtensionCoeffs):
        getter = lambda l: coeff_source
    elif isinstance(coeff_source, Mapping):
        table = {}
        for key, value in coeff_source.items():
            triple = key.triple if isinstance(key, Weight) else tuple(int(v) for v in key)
            table[triple] = value if isinstance(value, ExtensionCoeffs) else ExtensionCoeffs(*value)
        expected = {w.triple for w in weights}
        if set(table) != expected:
            missing = sorted(expected - set(table))
            extra = sorted(set(table) - expected)
            raise UnknownWeight(f"coefficient map does not match the weight set: missing={missing} extra={extra}")
        getter = lambda l: table[l.triple]
    elif callable(coeff_source):
        getter = coeff_source
    elif coeff_source in _TYPE_NAMES:
        label = _TYPE_NAMES[coeff_source]
        getter = {
            "I": lambda l: coeffs_type1(),
            "II": lambda l: coeffs_type2(l, M),
            "III": lambda l: coeffs_type3(),
        }[label]
    else:
        raise ValueError(f"unrecognized coefficient source {coeff_source!r}")

    coeffs = tuple(getter(w) for w in weights)
    mu_plus = np.empty(len(weights))
    mu_minus = np.empty(len(weights))
    for i, (w, c) in enumerate(zip(weights, coeffs)):
        scale = max(1.0, c.scale)
        mp, mm = normalization_mu(c.plus), normalization_mu(c.minus)
        if not mp > MU_RTOL * scale:
            raise AdmissibilityError(w, "mu+ > 0", mp)
        if not mm > MU_RTOL * scale:
            raise AdmissibilityError(w, "mu- > 0", mm)
        beta = intertwining_beta(c.plus, c.minus)
        if abs(beta) > BETA_RTOL * scale:
            raise AdmissibilityError(w, "beta = 0", beta)
        mu_plus[i], mu_minus[i] = mp, mm
    mu_plus.setflags(write=False)
    mu_minus.setflags(write=False)
    return HoneycombFamily(M, kind, kernel, tuple(weights), coeffs, mu_plus, mu_minus, label)


def _combine(fam: HoneycombFamily, triple, terms):
    if fam.is_real:
        return sum(c.real * t for c, t in zip(triple, terms))
    return sum(c * t for c, t in zip(triple, terms))


def eval_family(fam: HoneycombFamily, sign, l: Weight, x):
    """Value of the honeycomb function ``F^{sign}_l`` at ``x`` (scalars or arrays)."""
    i = fam.index(l)
    triple = fam.coeffs[i].triple(sign)
    kk = fam.kernel_kind
    terms = [eval_kernel(kk, gamma_label(k, l), x) for k in range(3)]
    return _combine(fam, triple, terms)


def family_values(fam: HoneycombFamily, points: list[LatticePoint]) -> tuple[np.ndarray, np.ndarray]:
    """Sample every basis function on lattice points.

    Returns ``(plus, minus)``, each of shape ``(len(fam), len(points))``, with
    rows in weight order and columns in point order.
    """
    s1, s2, M = point_arrays(points)
    if points and M != fam.M:
        raise ValueError(f"points have M={M}, family has M={fam.M}")
    kk = fam.kernel_kind
    dtype = float if fam.is_real else complex
    plus = np.zeros((len(fam), len(points)), dtype=dtype)
    minus = np.zeros_like(plus)
    for i, (w, c) in enumerate(zip(fam.weights, fam.coeffs)):
        terms = [eval_kernel_lattice(kk, gamma_label(k, w), s1, s2, fam.M) for k in range(3)]
        plus[i] = _combine(fam, c.plus, terms)
        minus[i] = _combine(fam, c.minus, terms)
    return plus, minus
