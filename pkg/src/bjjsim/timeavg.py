"""Observation-time averaging: stationary density, entropy, and spectrum.

Averaging the evolving density over an exponentially distributed observation
time t ~ s*exp(-s*t) replaces each oscillating phase factor by

    <exp(-i(E_j - E_j')t)> = 1 / (1 + i(E_j - E_j')/s),

whose imaginary parts cancel pairwise (the coefficient c_n is symmetric in
j <-> j'), leaving the real kernel s^2 / (s^2 + (E_j - E_j')^2). The result
is a time-independent probability vector that still sums to one.
"""

from dataclasses import dataclass

import numpy as np

from .dynamics import renyi_entropy
from .errors import NumericError, ParameterError
from .model import ModelParams, build_hamiltonian
from .spectral import Spectrum, diagonalize

#: densities below this are clamped before taking the log of the spectrum
SPECTRUM_FLOOR_P = 1e-300


@dataclass(frozen=True)
class AveragedDensity:
    """Observation-time-averaged reduced density diagonal."""

    p_avg: np.ndarray
    s: float

    def __post_init__(self):
        self.p_avg.setflags(write=False)


@dataclass(frozen=True)
class EntanglementSpectrumResult:
    """Log of the averaged density; clamped entries are flagged, not infinite."""

    xi: np.ndarray
    floor_mask: np.ndarray
    base: str

    def __post_init__(self):
        self.xi.setflags(write=False)
        self.floor_mask.setflags(write=False)


def averaged_reduced_density(
    spec: Spectrum, s: float, trace_tol: float = 1e-10
) -> AveragedDensity:
    """Average the density diagonal over exponential observation times."""
    if not s > 0.0:
        raise ParameterError(f"s must be > 0, got {s}")
    modes = spec.eigvecs * spec.w
    gaps = (spec.energies[:, None] - spec.energies[None, :]) / s
    kernel = 1.0 / (1.0 + gaps**2)
    p = ((modes @ kernel) * modes).sum(axis=1)
    total = p.sum()
    if abs(total - 1.0) > trace_tol:
        raise NumericError(f"averaged density trace {total!r} deviates from 1")
    if p.min() < -trace_tol:
        raise NumericError(f"averaged density element {p.min():.3e} below -trace_tol")
    return AveragedDensity(p_avg=np.clip(p, 0.0, 1.0), s=float(s))


def _pipeline(params: ModelParams) -> AveragedDensity:
    spec = diagonalize(build_hamiltonian(params), tol=params.eig_tol)
    return averaged_reduced_density(spec, params.s, trace_tol=params.trace_tol)


def averaged_entropy(params: ModelParams) -> float:
    """Renyi entropy (bits) of the observation-time-averaged density."""
    return renyi_entropy(_pipeline(params).p_avg, params.alpha)


def spectrum_from_density(avg: AveragedDensity, base: str = "e") -> EntanglementSpectrumResult:
    """Logarithms of an already-averaged density vector.

    base 'e' is the default; pass '2' for bits. Elements below
    SPECTRUM_FLOOR_P are set to the floor value and flagged instead of
    producing -inf.
    """
    if base not in ("e", "2"):
        raise ParameterError(f"base must be 'e' or '2', got {base!r}")
    log = np.log if base == "e" else np.log2
    mask = avg.p_avg < SPECTRUM_FLOOR_P
    xi = log(np.where(mask, SPECTRUM_FLOOR_P, avg.p_avg))
    return EntanglementSpectrumResult(xi=xi, floor_mask=mask, base=base)


def entanglement_spectrum(params: ModelParams, base: str = "e") -> EntanglementSpectrumResult:
    """Entanglement spectrum of the full pipeline: build, diagonalize, average, log."""
    return spectrum_from_density(_pipeline(params), base=base)
