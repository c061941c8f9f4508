import numpy as np
import pytest

from bjjsim import (
    ModelParams,
    ParameterError,
    analytic_u0_density,
    build_hamiltonian,
    diagonalize,
    evolve_series,
    integrate_state,
    reduced_density_at,
    renyi_entropy,
)


def _spec(N, J, U):
    return diagonalize(build_hamiltonian(ModelParams(N=N, J=J, U=U)))


def test_initial_state_is_delta():
    dens = reduced_density_at(_spec(6, 1.0, 0.7), 0.0)
    expected = np.zeros(7)
    expected[0] = 1.0
    assert np.allclose(dens.p, expected, atol=1e-13)


def test_noninteracting_return_probability():
    # p[0](t) = cos^(2N)(Jt) when U=0
    spec = _spec(5, 1.0, 0.0)
    for t in (0.3, 0.9, 2.1):
        dens = reduced_density_at(spec, t)
        assert dens.p[0] == pytest.approx(np.cos(t) ** 10, abs=1e-12)


def test_complete_transfer_two_bosons():
    dens = reduced_density_at(_spec(2, 1.0, 0.0), np.pi / 2)
    assert np.allclose(dens.p, [0.0, 0.0, 1.0], atol=1e-12)


def test_matches_direct_integration():
    params = ModelParams(N=4, J=1.0, U=1.0)
    spec = diagonalize(build_hamiltonian(params))
    spectral = reduced_density_at(spec, 0.5)
    integrated = integrate_state(params, 0.5)
    assert np.abs(spectral.p - integrated.p).max() <= 1e-8


def test_negative_time_rejected():
    with pytest.raises(ParameterError, match="t"):
        reduced_density_at(_spec(2, 1.0, 0.0), -0.1)


def test_renyi_pure_state():
    p = np.zeros(9)
    p[0] = 1.0
    assert renyi_entropy(p, 2.0) == 0.0


def test_renyi_uniform():
    assert renyi_entropy(np.full(4, 0.25), 2.0) == pytest.approx(2.0, abs=1e-14)


def test_renyi_balanced_single_boson():
    # N=1 at Jt=pi/4 is the balanced superposition: exactly one bit
    dens = reduced_density_at(_spec(1, 1.0, 0.0), np.pi / 4)
    assert renyi_entropy(dens) == pytest.approx(1.0, abs=1e-12)


def test_renyi_accepts_density_records():
    dens = reduced_density_at(_spec(3, 1.0, 0.0), 0.4)
    assert renyi_entropy(dens) == pytest.approx(renyi_entropy(dens.p), abs=0.0)


def test_renyi_rejects_von_neumann_order():
    with pytest.raises(ParameterError, match="alpha"):
        renyi_entropy(np.full(4, 0.25), 1.0)
    with pytest.raises(ParameterError, match="alpha"):
        renyi_entropy(np.full(4, 0.25), 0.0)


def test_evolve_series_frozen_junction():
    series = evolve_series(ModelParams(N=12, J=0.0, U=1.0), np.linspace(0.0, 30.0, 40))
    assert np.abs(series.entropy).max() <= 1e-12


def test_evolve_series_grid_validation():
    params = ModelParams(N=2, J=1.0, U=0.0)
    with pytest.raises(ParameterError):
        evolve_series(params, [])
    with pytest.raises(ParameterError):
        evolve_series(params, [0.0, 2.0, 1.0])
    with pytest.raises(ParameterError):
        evolve_series(params, [-1.0, 0.0])


def test_analytic_u0_endpoint_terms():
    for t in (0.0, 0.35, 1.2):
        dens = analytic_u0_density(6, 1.0, t)
        assert dens.p[0] == pytest.approx(np.cos(t) ** 12, abs=1e-14)
        assert dens.p[6] == pytest.approx(np.sin(t) ** 12, abs=1e-14)


def test_analytic_u0_complete_transfer():
    dens = analytic_u0_density(5, 2.0, np.pi / 4)  # Jt = pi/2
    expected = np.zeros(6)
    expected[5] = 1.0
    assert np.allclose(dens.p, expected, atol=1e-14)


def test_analytic_u0_matches_spectral():
    dens_a = analytic_u0_density(3, 1.0, 0.7)
    dens_s = reduced_density_at(_spec(3, 1.0, 0.0), 0.7)
    assert np.abs(dens_a.p - dens_s.p).max() <= 1e-12


def test_normalization_random_params():
    rng = np.random.default_rng(11)
    for _ in range(8):
        params = ModelParams(
            N=int(rng.integers(1, 40)),
            J=float(rng.uniform(0.0, 2.0)),
            U=float(rng.uniform(0.0, 2.0)),
        )
        spec = diagonalize(build_hamiltonian(params))
        for t in rng.uniform(0.0, 50.0, 5):
            assert reduced_density_at(spec, t).p.sum() == pytest.approx(1.0, abs=1e-10)


def test_entropy_period_noninteracting():
    # the density matrix itself has period pi/J; index reflection halves the
    # entropy period to pi/(2J)
    params = ModelParams(N=7, J=1.0, U=0.0)
    t = np.linspace(0.0, 3.0, 150)
    a = evolve_series(params, t)
    b = evolve_series(params, t + np.pi / 2)
    assert np.abs(a.entropy - b.entropy).max() <= 1e-8


def test_mirror_property_noninteracting():
    spec = _spec(9, 1.0, 0.0)
    for t in (0.2, 0.6, 1.1):
        left = reduced_density_at(spec, t).p
        right = reduced_density_at(spec, np.pi / 2 - t).p
        assert np.abs(left - right[::-1]).max() <= 1e-10


def test_entropy_bounds():
    rng = np.random.default_rng(3)
    for _ in range(5):
        n = int(rng.integers(2, 30))
        params = ModelParams(N=n, J=float(rng.uniform(0.1, 2.0)), U=float(rng.uniform(0.0, 2.0)))
        series = evolve_series(params, np.linspace(0.0, 20.0, 60))
        assert series.entropy.min() >= 0.0
        assert series.entropy.max() <= np.log2(n + 1) + 1e-10
