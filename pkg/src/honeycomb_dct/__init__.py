"""Discrete Fourier-Weyl and Hartley-Weyl transforms on the honeycomb lattice."""

from .errors import AdmissibilityError, DimensionMismatch, DomainError, HoneycombError, UnknownWeight
from .honeycomb import (
    ExtensionCoeffs,
    HoneycombFamily,
    build_family,
    coeffs_type1,
    coeffs_type2,
    coeffs_type3,
    eval_family,
    family_values,
    intertwining_beta,
    normalization_mu,
)
from .interp import GrapheneParams, ModelParams, graphene_frequencies, integral_error, interpolate, model_function
from .lattice import (
    LatticePoint,
    PointSetKind,
    Weight,
    WeightSetKind,
    count_points,
    count_weights,
    generate_points,
    generate_weights,
    weyl_orbit,
)
from .orbitfn import KernelKind, eval_kernel, eval_kernel_lattice
from .transform import (
    SampleVector,
    SpectrumVector,
    TransformMatrix,
    build_matrix,
    forward,
    gram_matrix,
    inverse,
    plancherel,
)

__version__ = "0.1.0"
