"""Brute-force reference implementations used by the test suite.

Nothing here is on the production path. The integrator rebuilds the
Hamiltonian densely from the collective-spin form so that the two code paths
share no construction code, and steps the Schrodinger equation with classic
fixed-step 4th-order Runge-Kutta. The quadrature reference integrates the
exponentially weighted density directly instead of using the pair-sum kernel.
"""

from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad_vec

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

from .dynamics import ReducedDensityDiagonal, density_series
from .errors import NumericError, ParameterError
from .model import ModelParams, build_hamiltonian, build_spin_hamiltonian
from .spectral import diagonalize
from .timeavg import AveragedDensity

#: phase-error budget used when choosing a step size automatically
_AUTO_PHASE_ERR = 1e-9


@dataclass(frozen=True)
class IntegratorConfig:
    """Fixed-step RK4 settings; dt=None picks a step from the spectral radius."""

    dt: float | None = None
    norm_tol: float = 1e-6

    ORDER = 4

    def __post_init__(self):
        if self.dt is not None and not self.dt > 0.0:
            raise ParameterError(f"dt must be > 0, got {self.dt}")
        if not self.norm_tol > 0.0:
            raise ParameterError(f"norm_tol must be > 0, got {self.norm_tol}")


@njit(cache=True)
def _rk4_steps(h, psi, dt, nsteps):  # pragma: no cover - compiled
    for _ in range(nsteps):
        k1 = -1j * (h @ psi)
        k2 = -1j * (h @ (psi + 0.5 * dt * k1))
        k3 = -1j * (h @ (psi + 0.5 * dt * k2))
        k4 = -1j * (h @ (psi + dt * k3))
        psi = psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return psi


def _auto_dt(h: np.ndarray, t_end: float) -> float:
    # Gershgorin bound on the spectral radius; the accumulated RK4 phase error
    # is ~ t * E^5 * dt^4 / 120, solved here for the target budget
    bound = float(np.abs(h).sum(axis=1).max())
    if bound == 0.0 or t_end == 0.0:
        return 1e-3
    dt = (_AUTO_PHASE_ERR * 120.0 / (t_end * bound**5)) ** 0.25
    return min(1e-3, dt)


def _advance(h, psi, span, dt):
    nfull = int(span / dt)
    psi = _rk4_steps(h, psi, dt, nfull)
    rem = span - nfull * dt
    if rem > 1e-15:
        psi = _rk4_steps(h, psi, rem, 1)
    return psi


def integrate_checkpoints(params: ModelParams, times, cfg: IntegratorConfig | None = None):
    """RK4-evolve |0,N> through an ascending list of times.

    Returns one ReducedDensityDiagonal per requested time. Raises
    NumericError if the accumulated norm drift exceeds cfg.norm_tol.
    """
    times = np.asarray(times, dtype=float)
    if times.size == 0:
        raise ParameterError("times must be nonempty")
    if np.any(times < 0.0):
        raise ParameterError("times must be >= 0")
    if times.size > 1 and not np.all(np.diff(times) >= 0.0):
        raise ParameterError("times must be ascending")
    cfg = cfg or IntegratorConfig()

    h = build_spin_hamiltonian(params).astype(np.complex128)
    dt = cfg.dt if cfg.dt is not None else _auto_dt(h, float(times[-1]))
    psi = np.zeros(params.n_dim, dtype=np.complex128)
    psi[0] = 1.0

    out = []
    t_cur = 0.0
    for t_next in times:
        psi = _advance(h, psi, t_next - t_cur, dt)
        t_cur = t_next
        norm = float((psi.real**2 + psi.imag**2).sum())
        # "not <=" so that an overflowed (NaN) norm also trips the guard
        if not abs(norm - 1.0) <= cfg.norm_tol:
            raise NumericError(
                f"norm drift {abs(norm - 1.0):.3e} at t={t_next:g} exceeds "
                f"{cfg.norm_tol:.1e}; reduce the step size"
            )
        p = np.clip(psi.real**2 + psi.imag**2, 0.0, 1.0)
        out.append(ReducedDensityDiagonal(p=p, t=float(t_next)))
    return out


def integrate_state(
    params: ModelParams, t_end: float, cfg: IntegratorConfig | None = None
) -> ReducedDensityDiagonal:
    """Density diagonal at t_end from direct Schrodinger integration."""
    return integrate_checkpoints(params, [t_end], cfg)[-1]


def quadrature_average(
    params: ModelParams,
    s: float | None = None,
    T: float | None = None,
    tol: float = 1e-10,
) -> AveragedDensity:
    """Adaptive quadrature of p(t) * s * exp(-s t) over [0, T].

    T defaults to 40/s, where the neglected tail is bounded by exp(-40).
    The density is evaluated on the spectral path; independence from the
    production average comes from replacing the pair-sum kernel with an
    explicit time integral.
    """
    s = params.s if s is None else float(s)
    if not s > 0.0:
        raise ParameterError(f"s must be > 0, got {s}")
    if T is None:
        T = 40.0 / s
    if T < 40.0 / s:
        raise ParameterError(f"T must be >= 40/s = {40.0 / s:g}, got {T}")

    spec = diagonalize(build_hamiltonian(params), tol=params.eig_tol)

    def weighted_density(t):
        return density_series(spec, [t])[:, 0] * (s * np.exp(-s * t))

    p, err = quad_vec(weighted_density, 0.0, T, epsabs=tol, epsrel=tol)
    if err > 100.0 * tol:
        raise NumericError(
            f"quadrature error estimate {err:.3e} exceeds budget {100.0 * tol:.1e}"
        )
    return AveragedDensity(p_avg=np.clip(p, 0.0, 1.0), s=s)
