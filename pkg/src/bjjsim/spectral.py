"""Eigendecomposition of the tridiagonal Hamiltonian and spectral tables."""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import NumericError
from .model import TridiagonalHamiltonian

_ORTHO_TOL = 1e-10
_WEIGHT_TOL = 1e-10


@dataclass(frozen=True)
class Spectrum:
    """Full decomposition plus the overlap of each eigenvector with Fock index 0.

    energies : ascending eigenvalues
    eigvecs  : column j is the (real, unit-norm) eigenvector of energies[j],
               sign-fixed so its largest-magnitude component is positive
    w        : eigvecs[0, :], the initial-state overlaps
    """

    energies: np.ndarray
    eigvecs: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        self.energies.setflags(write=False)
        self.eigvecs.setflags(write=False)
        self.w.setflags(write=False)

    @property
    def n_dim(self) -> int:
        return self.energies.shape[0]

    @property
    def nbosons(self) -> int:
        return self.n_dim - 1


@dataclass(frozen=True)
class FrequencyTable:
    """All pairwise energy gaps |E_j - E_j'| for j < j', sorted ascending."""

    freqs: np.ndarray

    @property
    def count(self) -> int:
        return self.freqs.shape[0]

    @property
    def max_freq(self) -> float:
        return float(self.freqs[-1]) if self.count else 0.0


def _tridiag_matvec(ham: TridiagonalHamiltonian, v: np.ndarray) -> np.ndarray:
    out = ham.diag[:, None] * v
    out[1:] += ham.offdiag[:, None] * v[:-1]
    out[:-1] += ham.offdiag[:, None] * v[1:]
    return out


def diagonalize(ham: TridiagonalHamiltonian, tol: float = 1e-10) -> Spectrum:
    """Dense decomposition of the tridiagonal matrix with deterministic signs.

    Raises NumericError if the worst eigen-residual exceeds tol * ||H|| or the
    eigenvector matrix is not orthonormal to 1e-10.
    """
    try:
        energies, vecs = eigh_tridiagonal(ham.diag, ham.offdiag)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NumericError(f"tridiagonal eigensolver failed to converge: {exc}") from exc

    # deterministic sign: largest-magnitude component of each column positive
    lead = np.argmax(np.abs(vecs), axis=0)
    signs = np.sign(vecs[lead, np.arange(vecs.shape[1])])
    signs[signs == 0.0] = 1.0
    vecs = vecs * signs

    scale = float(np.abs(energies).max())
    scale = scale if scale > 0.0 else 1.0
    resid = _tridiag_matvec(ham, vecs) - vecs * energies[None, :]
    worst = float(np.sqrt((resid**2).sum(axis=0)).max())
    if worst > tol * scale:
        raise NumericError(
            f"eigen-residual {worst:.3e} exceeds {tol:.1e} * ||H|| = {tol * scale:.3e}"
        )
    gram = vecs.T @ vecs
    ortho = float(np.abs(gram - np.eye(gram.shape[0])).max())
    if ortho > _ORTHO_TOL:
        raise NumericError(f"eigenvectors not orthonormal: max deviation {ortho:.3e}")

    w = vecs[0, :].copy()
    if abs((w**2).sum() - 1.0) > _WEIGHT_TOL:
        raise NumericError("initial-state overlaps do not resolve unity")
    return Spectrum(energies=energies, eigvecs=vecs, w=w)


def bohr_frequencies(spec: Spectrum) -> FrequencyTable:
    """The (N+1)N/2 oscillation frequencies of the evolving density."""
    i, j = np.triu_indices(spec.n_dim, k=1)
    freqs = np.sort(np.abs(spec.energies[j] - spec.energies[i]))
    return FrequencyTable(freqs=freqs)
