import numpy as np
import pytest

from bjjsim import ModelParams, bohr_frequencies, build_hamiltonian, diagonalize


def _spec(N, J, U):
    return diagonalize(build_hamiltonian(ModelParams(N=N, J=J, U=U)))


def test_noninteracting_three_level_energies():
    spec = _spec(2, 1.0, 0.0)
    assert np.allclose(spec.energies, [-2.0, 0.0, 2.0], atol=1e-14)


def test_equidistant_ladder_spacing():
    # without interaction the spectrum is an exact ladder with spacing 2J
    for n in (1, 2, 3, 5, 10, 50, 100, 200):
        spec = _spec(n, 1.7, 0.0)
        assert np.abs(np.diff(spec.energies) - 2 * 1.7).max() <= 1e-10 * 1.7


def test_diagonal_limit_is_sorted_permutation():
    params = ModelParams(N=3, J=0.0, U=1.0)
    h = build_hamiltonian(params)
    spec = diagonalize(h)
    assert np.allclose(spec.energies, np.sort(h.diag), atol=0.0)
    # eigenvectors are unit vectors up to degenerate mixing; columns stay unit norm
    assert np.allclose((spec.eigvecs**2).sum(axis=0), 1.0, atol=1e-12)


def test_residual_and_orthonormality_random():
    rng = np.random.default_rng(7)
    for _ in range(10):
        params = ModelParams(N=6, J=float(rng.uniform(0.05, 3.0)), U=float(rng.uniform(0.0, 3.0)))
        h = build_hamiltonian(params)
        spec = diagonalize(h)
        dense = h.dense()
        scale = np.abs(spec.energies).max()
        for j in range(spec.n_dim):
            r = dense @ spec.eigvecs[:, j] - spec.energies[j] * spec.eigvecs[:, j]
            assert np.linalg.norm(r) <= 1e-10 * scale
        gram = spec.eigvecs.T @ spec.eigvecs
        assert np.abs(gram - np.eye(spec.n_dim)).max() <= 1e-10


def test_overlaps_resolve_unity():
    spec = _spec(12, 0.8, 0.4)
    assert (spec.w**2).sum() == pytest.approx(1.0, abs=1e-12)


def test_sign_convention_deterministic():
    a = _spec(9, 1.1, 0.6)
    b = _spec(9, 1.1, 0.6)
    assert np.array_equal(a.energies, b.energies)
    assert np.array_equal(a.eigvecs, b.eigvecs)
    for j in range(a.n_dim):
        col = a.eigvecs[:, j]
        assert col[np.argmax(np.abs(col))] > 0.0


def test_trace_identity():
    params = ModelParams(N=25, J=2.0, U=0.9)
    h = build_hamiltonian(params)
    spec = diagonalize(h)
    scale = np.abs(spec.energies).max()
    assert abs(spec.energies.sum() - h.diag.sum()) <= 1e-9 * scale


def test_frequency_count():
    spec = _spec(2, 1.0, 1.0)
    table = bohr_frequencies(spec)
    assert table.count == 3
    for n in (3, 6, 11):
        assert bohr_frequencies(_spec(n, 1.0, 0.5)).count == (n + 1) * n // 2


def test_frequency_ladder_values():
    table = bohr_frequencies(_spec(4, 1.0, 0.0))
    distinct = np.unique(np.round(table.freqs, 9))
    assert set(distinct).issubset({2.0, 4.0, 6.0, 8.0})


def test_max_frequency_interaction_limit():
    # J=0, even N: the largest gap is the potential spread U*N^2/4
    for n in (4, 10):
        table = bohr_frequencies(_spec(n, 0.0, 1.0))
        assert table.max_freq == pytest.approx(n**2 / 4.0, rel=1e-12)


def test_max_frequency_is_spectral_range():
    spec = _spec(8, 1.2, 0.7)
    table = bohr_frequencies(spec)
    assert table.max_freq == pytest.approx(spec.energies[-1] - spec.energies[0], rel=1e-14)
