"""
Point sets, weight sets and discrete weight functions of the A2 lattice.

Points of F_{P,M} are stored as integer triples ``[s0, s1, s2]`` summing to
``M``; the corresponding point of the fundamental triangle F_Q has
omega-coordinates ``(s1/M, s2/M)``.  Weights are integer triples
``[l0, l1, l2]`` summing to ``M`` with omega-coordinates ``(l1, l2)``.

All set membership tests are done in exact integer arithmetic.  Floating
coordinates are produced only on demand.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "OmegaVector",
    "LatticePoint",
    "Weight",
    "PointSetKind",
    "WeightSetKind",
    "WEYL_DETERMINANTS",
    "scalar_product",
    "weyl_orbit",
    "generate_points",
    "generate_weights",
    "epsilon",
    "h_weight",
    "d_weight",
    "gamma_action",
    "count_points",
    "count_weights",
    "coset_residue",
    "point_arrays",
    "to_cartesian",
]


class OmegaVector(NamedTuple):
    """A vector ``x1*omega_1 + x2*omega_2`` given by its omega-coordinates."""

    x1: float
    x2: float


# Simple roots in omega-coordinates.
ALPHA_1 = OmegaVector(2, -1)
ALPHA_2 = OmegaVector(-1, 2)


@dataclass(frozen=True, order=True)
class LatticePoint:
    s0: int
    s1: int
    s2: int
    M: int

    def __post_init__(self):
        if self.M < 1:
            raise ValueError(f"resolution must be positive, got M={self.M}")
        if min(self.s0, self.s1, self.s2) < 0 or self.s0 + self.s1 + self.s2 != self.M:
            raise ValueError(f"invalid point coordinates {self.triple} for M={self.M}")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.s0, self.s1, self.s2)

    @property
    def omega(self) -> OmegaVector:
        return OmegaVector(self.s1 / self.M, self.s2 / self.M)


@dataclass(frozen=True, order=True)
class Weight:
    l0: int
    l1: int
    l2: int
    M: int

    def __post_init__(self):
        if self.M < 1:
            raise ValueError(f"resolution must be positive, got M={self.M}")
        if min(self.l0, self.l1, self.l2) < 0 or self.l0 + self.l1 + self.l2 != self.M:
            raise ValueError(f"invalid weight coordinates {self.triple} for M={self.M}")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.l0, self.l1, self.l2)

    @property
    def omega(self) -> OmegaVector:
        return OmegaVector(self.l1, self.l2)


class PointSetKind(enum.Enum):
    FPM = "FPM"
    FQM = "FQM"
    HM = "HM"
    HM1 = "HM1"
    HM2 = "HM2"
    FPM_interior = "FPM_interior"
    FQM_interior = "FQM_interior"
    HM_interior = "HM_interior"


class WeightSetKind(enum.Enum):
    LambdaQM = "LambdaQM"
    LambdaPM = "LambdaPM"
    LM = "LM"
    LambdaQM_interior = "LambdaQM_interior"
    LambdaPM_interior = "LambdaPM_interior"
    LM_interior = "LM_interior"
    FixedSet = "FixedSet"


def scalar_product(x, y) -> float:
    """Euclidean scalar product of two vectors given in omega-coordinates."""
    x1, x2 = x
    y1, y2 = y
    return (2 * x1 * y1 + x1 * y2 + x2 * y1 + 2 * x2 * y2) / 3


# Determinants of the Weyl group elements producing the entries of weyl_orbit,
# in the same order.
WEYL_DETERMINANTS = (1, -1, 1, -1, 1, -1)


def weyl_orbit(x) -> list[OmegaVector]:
    """Return the six Weyl images of ``x`` (with multiplicity).

    The k-th entry is produced by a group element of determinant
    ``WEYL_DETERMINANTS[k]``.
    """
    x1, x2 = x
    return [
        OmegaVector(x1, x2),
        OmegaVector(-x1, x1 + x2),
        OmegaVector(-x1 - x2, x1),
        OmegaVector(-x2, -x1),
        OmegaVector(x2, -x1 - x2),
        OmegaVector(x1 + x2, -x2),
    ]


def _triples(M: int, interior: bool):
    lo = 1 if interior else 0
    for a in range(lo, M + 1):
        for b in range(lo, M + 1 - a):
            c = M - a - b
            if c >= lo:
                yield a, b, c


@functools.lru_cache(maxsize=None)
def coset_residue(k: int) -> int:
    """Residue of ``s1 + 2*s2 (mod 3)`` that characterizes H_M^(k), k in {1, 2}.

    The assignment is fixed by evaluating type-III honeycomb C-functions on a
    small honeycomb fragment: H^(1) is the coset on which ``Ch^{+,III}``
    equals three times the plain C-function.
    """
    if k not in (1, 2):
        raise ValueError(f"coset index must be 1 or 2, got {k}")
    from .orbitfn import KernelKind, eval_kernel

    M = 4
    lam = (2, 1, 1)
    w = np.exp(2j * np.pi / 3)
    plus = (1.0, w, w.conjugate())
    labels = [gamma_action(j, Weight(*lam, M)).omega for j in range(3)]
    found = {}
    for r in (1, 2):
        s = next(t for t in _triples(M, False) if (t[1] + 2 * t[2]) % 3 == r)
        x = (s[1] / M, s[2] / M)
        base = eval_kernel(KernelKind.FourierC, labels[0], x)
        ext = sum(c * eval_kernel(KernelKind.FourierC, b, x) for c, b in zip(plus, labels))
        if abs(base) < 1e-9:
            raise RuntimeError("degenerate coset self-test point")
        if abs(ext - 3 * base) < 1e-9 * abs(base):
            found[1] = r
        elif abs(ext) < 1e-9 * abs(base):
            found[2] = r
    if sorted(found) != [1, 2] or found[1] == found[2]:
        raise RuntimeError(f"coset self-test failed: {found}")
    return found[k]


def _point_filter(kind: PointSetKind):
    if kind in (PointSetKind.FPM, PointSetKind.FPM_interior):
        return lambda s: True
    if kind in (PointSetKind.FQM, PointSetKind.FQM_interior):
        return lambda s: (s[1] + 2 * s[2]) % 3 == 0
    if kind in (PointSetKind.HM, PointSetKind.HM_interior):
        return lambda s: (s[1] + 2 * s[2]) % 3 != 0
    if kind is PointSetKind.HM1:
        r = coset_residue(1)
        return lambda s: (s[1] + 2 * s[2]) % 3 == r
    if kind is PointSetKind.HM2:
        r = coset_residue(2)
        return lambda s: (s[1] + 2 * s[2]) % 3 == r
    raise TypeError(f"unknown point set kind {kind!r}")


def generate_points(kind: PointSetKind, M: int) -> list[LatticePoint]:
    """Enumerate a point set in lexicographic order of ``[s0, s1, s2]``."""
    kind = PointSetKind(kind)
    if M < 1:
        raise ValueError(f"M must be positive, got {M}")
    interior = kind.name.endswith("_interior")
    keep = _point_filter(kind)
    return [LatticePoint(*s, M) for s in _triples(M, interior) if keep(s)]


def _in_kite(l, strict: bool) -> bool:
    l0, l1, l2 = l
    if l0 > l1 and l0 > l2:
        return True
    return l0 == l1 and (l1 > l2 if strict else l1 >= l2)


def generate_weights(kind: WeightSetKind, M: int) -> list[Weight]:
    """Enumerate a weight set in lexicographic order of ``[l0, l1, l2]``."""
    kind = WeightSetKind(kind)
    if M < 1:
        raise ValueError(f"M must be positive, got {M}")
    if kind is WeightSetKind.FixedSet:
        return [Weight(M // 3, M // 3, M // 3, M)] if M % 3 == 0 else []
    interior = kind.name.endswith("_interior")
    base = kind.name.removesuffix("_interior")
    if base == "LambdaQM":
        keep = lambda l: True
    elif base == "LambdaPM":
        keep = lambda l: _in_kite(l, strict=False)
    else:
        keep = lambda l: _in_kite(l, strict=True)
    return [Weight(*l, M) for l in _triples(M, interior) if keep(l)]


def _zeros(t) -> int:
    return sum(1 for v in t if v == 0)


def epsilon(s: LatticePoint) -> int:
    """Point multiplicity factor: 6, 3 or 1 for zero, one or two vanishing coordinates."""
    return (6, 3, 1)[_zeros(s.triple)]


def h_weight(l: Weight) -> int:
    """Weight multiplicity factor: 1, 2 or 6 for zero, one or two vanishing coordinates."""
    return (1, 2, 6)[_zeros(l.triple)]


def d_weight(l: Weight) -> int:
    return 3 if l.l0 == l.l1 == l.l2 else 1


def gamma_action(k: int, l: Weight) -> Weight:
    """Action of the cyclic group element gamma_k as a coordinate rotation."""
    k %= 3
    l0, l1, l2 = l.triple
    if k == 0:
        return l
    if k == 1:
        return Weight(l2, l0, l1, l.M)
    return Weight(l1, l2, l0, l.M)


def count_points(kind: PointSetKind, M: int) -> int:
    """Closed-form size of a point set (``FPM``, ``FQM``, ``HM`` and their interiors)."""
    kind = PointSetKind(kind)
    div3 = M % 3 == 0
    if kind is PointSetKind.FPM:
        return (M * M + 3 * M + 2) // 2
    if kind is PointSetKind.FQM:
        return (M * M + 3 * M + (6 if div3 else 2)) // 6
    if kind is PointSetKind.HM:
        return (M * M + 3 * M + (0 if div3 else 2)) // 3
    if kind is PointSetKind.FPM_interior:
        return (M * M - 3 * M + 2) // 2
    if kind is PointSetKind.FQM_interior:
        return (M * M - 3 * M + (6 if div3 else 2)) // 6
    if kind is PointSetKind.HM_interior:
        return (M * M - 3 * M + (0 if div3 else 2)) // 3
    raise ValueError(f"no closed-form count for {kind}")


def count_weights(kind: WeightSetKind, M: int) -> int:
    kind = WeightSetKind(kind)
    if kind is WeightSetKind.LambdaQM:
        return count_points(PointSetKind.FPM, M)
    if kind is WeightSetKind.LambdaPM:
        return count_points(PointSetKind.FQM, M)
    if kind is WeightSetKind.LambdaQM_interior:
        return count_points(PointSetKind.FPM_interior, M)
    if kind is WeightSetKind.LambdaPM_interior:
        return count_points(PointSetKind.FQM_interior, M)
    if kind is WeightSetKind.LM:
        return count_points(PointSetKind.HM, M) // 2
    if kind is WeightSetKind.LM_interior:
        return count_points(PointSetKind.HM_interior, M) // 2
    if kind is WeightSetKind.FixedSet:
        return 1 if M % 3 == 0 else 0
    raise ValueError(f"no closed-form count for {kind}")


def point_arrays(points) -> tuple[np.ndarray, np.ndarray, int]:
    """Integer arrays ``(s1, s2)`` and the common resolution of a point list."""
    if not points:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64), 1
    M = points[0].M
    s1 = np.array([p.s1 for p in points], dtype=np.int64)
    s2 = np.array([p.s2 for p in points], dtype=np.int64)
    return s1, s2, M


# Cartesian images of omega_1, omega_2 with |omega_i|^2 = 2/3 and
# <omega_1, omega_2> = 1/3.
OMEGA_1_CART = np.array([np.sqrt(2.0 / 3.0), 0.0])
OMEGA_2_CART = np.array([1.0 / np.sqrt(6.0), 1.0 / np.sqrt(2.0)])


def to_cartesian(x1, x2):
    """Map omega-coordinates to Cartesian coordinates (scalars or arrays)."""
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    X = x1 * OMEGA_1_CART[0] + x2 * OMEGA_2_CART[0]
    Y = x1 * OMEGA_1_CART[1] + x2 * OMEGA_2_CART[1]
    return X, Y
