"""Spectral toolkit for exactly solvable trigonometric wells.

A family of one-dimensional angular models whose potentials are lattice
sums of inverse-square trigonometric wells collapses, through product
identities, to a single solvable cell.  This package provides the
identities with verification sweeps, the closed-form spectra and
eigenfunctions, independent matrix eigensolvers to validate them, and the
planar and three-body oscillator models the angular ladder embeds into.
"""

from .angular_spectrum import (
    AngularProblem,
    PotentialForm,
    Provenance,
    Spectrum,
    angular_potential,
    angular_problem,
    exact_b,
    exact_eigenfunction,
    exact_spectrum,
    eigenfunction_norm,
    fd_spectrum,
    rayleigh_residual,
    spectrum_crosscheck,
)
from .composite_models import (
    CMS_MATRIX,
    EnergyPair,
    PlanarForm,
    RadialDomainWarning,
    ReductionKind,
    ThreeBodyForm,
    adjudicate_planar_energy,
    cms_inverse,
    cms_transform,
    planar_energy,
    planar_potential,
    radial_oracle,
    reduction_report,
    threebody_energy,
    threebody_potential,
)
from .model_core import (
    Couplings,
    DiscrepancyReport,
    DiscrepancyRow,
    DomainCell,
    FormMismatchError,
    ModelParams,
    NClass,
    ParameterError,
    PotentialSample,
    SingularityError,
    classify,
    domain_cell,
    lattice_distance,
    singularities,
)
from .numerics import (
    ConvergenceError,
    Tridiagonal,
    gauss_legendre,
    richardson,
    second_derivative,
    sturm_count,
    tridiag_eigen,
)
from .special_functions import (
    JacobiParams,
    gegenbauer_c,
    jacobi_p,
    jacobi_p_derivative,
)
from .trig_identities import (
    IdentityKind,
    IdentityReport,
    SamplingError,
    identity_eval,
    identity_report,
    log_derivative_residual,
    sine_product,
    singular_lattices,
)

__version__ = "0.1.0"

__all__ = [
    "AngularProblem",
    "CMS_MATRIX",
    "ConvergenceError",
    "Couplings",
    "DiscrepancyReport",
    "DiscrepancyRow",
    "DomainCell",
    "EnergyPair",
    "FormMismatchError",
    "IdentityKind",
    "IdentityReport",
    "JacobiParams",
    "ModelParams",
    "NClass",
    "ParameterError",
    "PlanarForm",
    "PotentialForm",
    "PotentialSample",
    "Provenance",
    "RadialDomainWarning",
    "ReductionKind",
    "SamplingError",
    "SingularityError",
    "Spectrum",
    "ThreeBodyForm",
    "Tridiagonal",
    "adjudicate_planar_energy",
    "angular_potential",
    "angular_problem",
    "classify",
    "cms_inverse",
    "cms_transform",
    "domain_cell",
    "eigenfunction_norm",
    "exact_b",
    "exact_eigenfunction",
    "exact_spectrum",
    "fd_spectrum",
    "gauss_legendre",
    "gegenbauer_c",
    "identity_eval",
    "identity_report",
    "jacobi_p",
    "jacobi_p_derivative",
    "lattice_distance",
    "log_derivative_residual",
    "planar_energy",
    "planar_potential",
    "radial_oracle",
    "rayleigh_residual",
    "reduction_report",
    "richardson",
    "second_derivative",
    "sine_product",
    "singular_lattices",
    "singularities",
    "spectrum_crosscheck",
    "sturm_count",
    "threebody_energy",
    "threebody_potential",
    "tridiag_eigen",
    "__version__",
]
