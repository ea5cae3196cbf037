"""
Weyl orbit functions of A2 and their Hartley versions.

Four kernels are provided, all labelled by ``b`` and evaluated at ``x`` (both
in omega-coordinates):

* ``FourierC``  -- symmetric exponential sum (C-function),
* ``FourierS``  -- antisymmetric exponential sum (S-function),
* ``HartleyC``  -- symmetric ``cas`` sum,
* ``HartleyS``  -- antisymmetric ``cas`` sum,

where ``cas(a) = cos(a) + sin(a)``.  :func:`eval_kernel` is the production path
(six explicit phase pairs, phases reduced modulo one turn);
:func:`eval_kernel_oracle` sums over the Weyl orbit using the scalar product
and exists for cross-checking.
"""

from __future__ import annotations

import enum

import numpy as np

from .lattice import WEYL_DETERMINANTS, Weight, scalar_product, weyl_orbit

__all__ = [
    "KernelKind",
    "cas",
    "eval_kernel",
    "eval_kernel_lattice",
    "eval_kernel_oracle",
]


class KernelKind(enum.Enum):
    FourierC = "FourierC"
    FourierS = "FourierS"
    HartleyC = "HartleyC"
    HartleyS = "HartleyS"

    @property
    def is_hartley(self) -> bool:
        return self in (KernelKind.HartleyC, KernelKind.HartleyS)

    @property
    def is_antisymmetric(self) -> bool:
        return self in (KernelKind.FourierS, KernelKind.HartleyS)


def cas(a):
    return np.cos(a) + np.sin(a)


def _label(b) -> tuple:
    if isinstance(b, Weight):
        return b.l1, b.l2
    b1, b2 = b
    return b1, b2


def _phase_pairs(b1, b2):
    # Coefficients (A, B) of the six phases (2*pi/3)*(A*x1 + B*x2), in the
    # order of weyl_orbit.
    return (
        (2 * b1 + b2, b1 + 2 * b2),
        (-b1 + b2, b1 + 2 * b2),
        (-b1 - 2 * b2, b1 - b2),
        (-b1 - 2 * b2, -2 * b1 - b2),
        (-b1 + b2, -2 * b1 - b2),
        (2 * b1 + b2, b1 - b2),
    )


def _accumulate(kind: KernelKind, turns):
    """Sum the six terms given their phases measured in full turns."""
    signs = WEYL_DETERMINANTS if kind.is_antisymmetric else (1,) * 6
    total = None
    for sgn, t in zip(signs, turns):
        angle = 2.0 * np.pi * t
        term = cas(angle) if kind.is_hartley else np.exp(1j * angle)
        term = term if sgn == 1 else -term
        total = term if total is None else total + term
    return total


def eval_kernel(kind: KernelKind, b, x):
    """Evaluate an orbit-function kernel at ``x = (x1, x2)``.

    ``x1`` and ``x2`` may be scalars or broadcastable arrays.  Hartley kinds
    return real values, Fourier kinds complex ones.
    """
    kind = KernelKind(kind)
    b1, b2 = _label(b)
    x1 = np.asarray(x[0], dtype=float)
    x2 = np.asarray(x[1], dtype=float)
    turns = []
    for A, B in _phase_pairs(b1, b2):
        t = (A * x1 + B * x2) / 3.0
        turns.append(t - np.floor(t))
    out = _accumulate(kind, turns)
    return out[()] if np.ndim(out) == 0 else out


def eval_kernel_lattice(kind: KernelKind, b, s1, s2, M: int):
    """Evaluate a kernel with integer label at points ``(s1/M, s2/M)``.

    Phases are reduced exactly modulo ``3M`` in integer arithmetic before the
    single floating-point division, so no precision is lost for large M.
    """
    kind = KernelKind(kind)
    b1, b2 = _label(b)
    if int(b1) != b1 or int(b2) != b2:
        raise ValueError("eval_kernel_lattice requires an integer label")
    b1, b2 = int(b1), int(b2)
    s1 = np.asarray(s1, dtype=np.int64)
    s2 = np.asarray(s2, dtype=np.int64)
    period = 3 * M
    turns = [np.mod(A * s1 + B * s2, period) / period for A, B in _phase_pairs(b1, b2)]
    return _accumulate(kind, turns)


def eval_kernel_oracle(kind: KernelKind, b, x) -> complex:
    """Brute-force kernel value: explicit sum over the Weyl orbit of ``b``."""
    kind = KernelKind(kind)
    total = 0j
    for det, wb in zip(WEYL_DETERMINANTS, weyl_orbit(_label(b))):
        angle = 2.0 * np.pi * scalar_product(wb, x)
        value = (np.cos(angle) + np.sin(angle)) if kind.is_hartley else complex(np.cos(angle), np.sin(angle))
        total += (det if kind.is_antisymmetric else 1) * value
    return total
