"""Exact diagonalization of the two-site Bose-Hubbard junction.

The package computes real-time and observation-time-averaged Renyi
entanglement entropy and the entanglement spectrum of N bosons in a double
well, sweeps parameters to locate the localization transition of the
dynamics in Fock space, and fits the entropy's scaling with system size.
"""

from ._version import __version__
from .dynamics import (
    EntropyTimeSeries,
    ReducedDensityDiagonal,
    analytic_u0_density,
    density_series,
    evolve_series,
    reduced_density_at,
    renyi_entropy,
)
from .errors import BjjError, BracketError, NumericError, ParameterError
from .model import (
    ModelParams,
    TridiagonalHamiltonian,
    build_hamiltonian,
    build_spin_hamiltonian,
    characteristic_u,
)
from .oracle import IntegratorConfig, integrate_checkpoints, integrate_state, quadrature_average
from .scans import (
    CriticalEstimate,
    LinearFit,
    MaxElementTrace,
    Scan2D,
    ScalingFit,
    ScanResult,
    fit_models,
    fit_scaling,
    locate_critical,
    normalized_scan,
    quadratic_peak,
    scan_1d,
    scan_2d,
    track_max_elements,
)
from .spectral import FrequencyTable, Spectrum, bohr_frequencies, diagonalize
from .timeavg import (
    AveragedDensity,
    EntanglementSpectrumResult,
    averaged_entropy,
    averaged_reduced_density,
    entanglement_spectrum,
    spectrum_from_density,
)

__all__ = [
    "__version__",
    "AveragedDensity",
    "BjjError",
    "BracketError",
    "CriticalEstimate",
    "EntanglementSpectrumResult",
    "EntropyTimeSeries",
    "FrequencyTable",
    "IntegratorConfig",
    "LinearFit",
    "MaxElementTrace",
    "ModelParams",
    "NumericError",
    "ParameterError",
    "ReducedDensityDiagonal",
    "Scan2D",
    "ScalingFit",
    "ScanResult",
    "Spectrum",
    "TridiagonalHamiltonian",
    "analytic_u0_density",
    "averaged_entropy",
    "averaged_reduced_density",
    "bohr_frequencies",
    "build_hamiltonian",
    "build_spin_hamiltonian",
    "characteristic_u",
    "density_series",
    "diagonalize",
    "entanglement_spectrum",
    "evolve_series",
    "fit_models",
    "fit_scaling",
    "integrate_checkpoints",
    "integrate_state",
    "locate_critical",
    "normalized_scan",
    "quadratic_peak",
    "quadrature_average",
    "reduced_density_at",
    "renyi_entropy",
    "scan_1d",
    "scan_2d",
    "spectrum_from_density",
    "track_max_elements",
]
