"""Two-site Bose-Hubbard junction: parameters and Hamiltonian builders.

The Fock basis is |k, N-k> with k = 0..N counting bosons in the LEFT well;
index 0 is the initial state |0, N> (all bosons on the right). Energies are
in units of hbar = 1, so J, U, s share one energy unit and time its inverse.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError


@dataclass(frozen=True)
class ModelParams:
    """Physical and numerical configuration of a junction run.

    N     : boson count (>= 1)
    J     : tunneling rate (>= 0)
    U     : on-site interaction strength (>= 0; attractive U is not modeled)
    s     : observation-time averaging rate (> 0)
    alpha : Renyi order (> 0, != 1)
    """

    N: int
    J: float = 1.0
    U: float = 0.0
    s: float = 1.0
    alpha: float = 2.0
    eig_tol: float = 1e-10
    trace_tol: float = 1e-10

    def __post_init__(self):
        if not isinstance(self.N, (int, np.integer)) or isinstance(self.N, bool):
            raise ParameterError(f"N must be an integer, got {self.N!r}")
        if self.N < 1:
            raise ParameterError(f"N must be >= 1, got {self.N}")
        if not self.J >= 0.0:
            raise ParameterError(f"J must be >= 0, got {self.J}")
        if not self.U >= 0.0:
            raise ParameterError(f"U must be >= 0, got {self.U}")
        if not self.s > 0.0:
            raise ParameterError(f"s must be > 0, got {self.s}")
        if not self.alpha > 0.0 or self.alpha == 1.0:
            raise ParameterError(f"alpha must be > 0 and != 1, got {self.alpha}")
        if not self.eig_tol > 0.0:
            raise ParameterError(f"eig_tol must be > 0, got {self.eig_tol}")
        if not self.trace_tol > 0.0:
            raise ParameterError(f"trace_tol must be > 0, got {self.trace_tol}")

    @property
    def n_dim(self) -> int:
        return self.N + 1


@dataclass(frozen=True)
class TridiagonalHamiltonian:
    """Symmetric tridiagonal matrix stored as diagonal + one off-diagonal."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        if self.offdiag.shape != (self.diag.shape[0] - 1,):
            raise ParameterError(
                f"offdiag must have length n_dim-1, got {self.offdiag.shape}"
            )
        self.diag.setflags(write=False)
        self.offdiag.setflags(write=False)

    @property
    def n_dim(self) -> int:
        return self.diag.shape[0]

    @property
    def nbosons(self) -> int:
        return self.n_dim - 1

    def dense(self) -> np.ndarray:
        h = np.diag(self.diag)
        h += np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)
        return h


def build_hamiltonian(params: ModelParams) -> TridiagonalHamiltonian:
    """Hamiltonian matrix in the Fock basis.

    diag[k]    = U/2 * (k^2 + (N-k)^2)
    offdiag[k] = -J * sqrt((k+1)(N-k))   couples |k,N-k> and |k+1,N-k-1>
    """
    N, J, U = params.N, params.J, params.U
    k = np.arange(N + 1, dtype=float)
    diag = 0.5 * U * (k**2 + (N - k) ** 2)
    kk = np.arange(N, dtype=float)
    offdiag = -J * np.sqrt((kk + 1.0) * (N - kk))
    return TridiagonalHamiltonian(diag=diag, offdiag=offdiag)


def build_spin_hamiltonian(params: ModelParams) -> np.ndarray:
    """Same operator built from the collective-spin form, as a dense matrix.

    U*Lz^2 - 2J*Lx + U*N^2/4 on the Lz eigenbasis with spin S = N/2 and
    m = k - N/2. Kept as an independent construction so the two builders can
    cross-check each other.
    """
    N, J, U = params.N, params.J, params.U
    S = 0.5 * N
    m = np.arange(N + 1, dtype=float) - S
    h = np.diag(U * m**2 + 0.25 * U * N**2)
    lx_off = 0.5 * np.sqrt(S * (S + 1.0) - m[:-1] * (m[:-1] + 1.0))
    h -= 2.0 * J * (np.diag(lx_off, 1) + np.diag(lx_off, -1))
    return h


def characteristic_u(params: ModelParams) -> float:
    """Dimensionless control parameter u = U*N/J. Undefined at J = 0."""
    if params.J == 0.0:
        raise ParameterError("J must be > 0 to form u = U*N/J")
    return params.U * params.N / params.J
