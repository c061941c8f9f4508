import numpy as np
import pytest

from bjjsim import (
    BjjError,
    ModelParams,
    ParameterError,
    averaged_entropy,
    averaged_reduced_density,
    build_hamiltonian,
    diagonalize,
    fit_models,
    fit_scaling,
    locate_critical,
    normalized_scan,
    quadratic_peak,
    renyi_entropy,
    scan_1d,
    scan_2d,
    track_max_elements,
)


def test_plateau_above_transition():
    res = scan_1d(ModelParams(N=20, U=1.0), "J", 10.0, 20.0, 11)
    assert res.S.max() / res.S.min() <= 1.05


def test_endpoint_consistency_with_single_shot():
    res = scan_1d(ModelParams(N=4, J=1.0), "U", 0.0, 1.0, 5)
    direct = averaged_entropy(ModelParams(N=4, J=1.0, U=0.0))
    assert res.S[0] == direct  # bitwise


def test_n_scan_matches_recomputation():
    res = scan_1d(ModelParams(N=2, J=1.0, U=1.0), "N", 2, 8, 7)
    for i, n in enumerate(res.axis.astype(int)):
        assert res.S[i] == averaged_entropy(ModelParams(N=int(n), J=1.0, U=1.0))


def test_scan_axis_validation():
    params = ModelParams(N=4, J=1.0, U=1.0)
    with pytest.raises(ParameterError):
        scan_1d(params, "J", 2.0, 1.0, 5)
    with pytest.raises(ParameterError):
        scan_1d(params, "J", 1.0, 2.0, 1)
    with pytest.raises(ParameterError, match="vary"):
        scan_1d(params, "Q", 1.0, 2.0, 5)


def test_scan_failure_names_point():
    # u-scan requires J > 0; the abort message must identify the bad point
    with pytest.raises(BjjError, match="u=1"):
        scan_1d(ModelParams(N=4, J=0.0, U=1.0), "u", 1.0, 2.0, 3)


def test_scan_workers_do_not_change_values():
    params = ModelParams(N=10, U=1.0)
    seq = scan_1d(params, "J", 0.5, 5.0, 8, workers=1)
    par = scan_1d(params, "J", 0.5, 5.0, 8, workers=4)
    assert np.array_equal(seq.S, par.S)


def test_grid_rows_match_1d_scan():
    params = ModelParams(N=6)
    grid = scan_2d(params, "J", (1.0, 2.0, 2), "U", (0.5, 1.5, 3))
    row = scan_1d(ModelParams(N=6, J=1.0), "U", 0.5, 1.5, 3)
    assert np.array_equal(grid.S[0, :], row.S)


def test_entropy_grows_with_tunneling_below_transition():
    grid = scan_2d(ModelParams(N=20), "J", (0.5, 4.0, 6), "U", (1.0, 2.0, 2))
    for iy in range(grid.y.size):
        col = grid.S[:, iy]
        assert np.all(np.diff(col) > 0.0)


def test_transition_locus_follows_hyperbola():
    # on a (U, N) grid the entropy ridge sits near constant u = U*N
    for n in (20, 40):
        res = scan_1d(ModelParams(N=n, J=1.0), "U", 0.5 / n, 8.0 / n, 40)
        peak_u = res.axis[np.argmax(res.S)] * n
        assert 2.0 <= peak_u <= 4.2


def test_normalized_scan_max_is_one():
    res = normalized_scan(ModelParams(N=10, U=1.0), 1.0, np.arange(10, 60, 10))
    assert res.S.max() == 1.0
    assert res.S_raw is not None


def test_normalized_scan_shapes():
    ns = np.arange(10, 101, 10)
    log_like = normalized_scan(ModelParams(N=10, U=1.0), 1.0, ns)
    lin_like = normalized_scan(ModelParams(N=10, U=1.0), 40.0, ns)
    # concave-increasing versus straight growth
    assert np.all(np.diff(log_like.S) > 0.0)
    assert np.all(np.diff(np.diff(log_like.S)) < 0.0)
    lin_fit_resid = np.polyfit(ns, lin_like.S, 1, full=True)[1][0]
    log_fit_resid = np.polyfit(np.log(ns), lin_like.S, 1, full=True)[1][0]
    assert lin_fit_resid < log_fit_resid


def test_normalized_scan_conventions_agree_on_scaling():
    ns = np.arange(10, 101, 10)
    for u, expected in ((1.0, "log"), (40.0, "linear")):
        for conv in ("fix-U", "fix-J"):
            fit = fit_scaling(ModelParams(N=10, J=1.0, U=1.0), u, ns, convention=conv)
            assert fit.preferred == expected


def test_normalized_scan_validation():
    params = ModelParams(N=10, U=1.0)
    with pytest.raises(ParameterError, match="u"):
        normalized_scan(params, 0.0, np.arange(10, 60, 10))
    with pytest.raises(ParameterError):
        normalized_scan(params, 1.0, [10])
    with pytest.raises(ParameterError, match="convention"):
        normalized_scan(params, 1.0, np.arange(10, 60, 10), convention="fix-s")


def test_quadratic_peak_recovers_parabola_vertex():
    x = np.linspace(0.0, 4.0, 9)
    y = -((x - 1.7) ** 2)
    i = int(np.argmax(y))
    assert quadratic_peak(x, y, i) == pytest.approx(1.7, abs=1e-12)


def test_locate_critical_argmax():
    est = locate_critical(ModelParams(N=4, J=3.0, U=0.4), mode="argmax", n_min=4, n_max=80)
    assert est.method == "argmax-quadratic"
    assert 3.3 <= est.u_c <= 4.1
    assert est.u_c < 4.0
    assert est.bracket[0] < est.u_c < est.bracket[1]
    assert est.curve.axis_name == "u"


def test_locate_critical_argmax_needs_coverage():
    with pytest.raises(ParameterError, match="span"):
        locate_critical(ModelParams(N=4, J=3.0, U=0.4), mode="argmax", n_min=4, n_max=30)


def test_locate_critical_knee():
    est = locate_critical(ModelParams(N=40, J=1.0, U=1.0), mode="knee")
    assert est.method == "knee"
    assert 0.24 <= est.details["j_knee"] / 40 <= 0.30
    assert est.u_c == pytest.approx(40.0 / est.details["j_knee"], rel=1e-12)


def test_locate_critical_knee_needs_plateau():
    # scanning only the rising branch leaves nothing to intersect
    with pytest.raises(BjjError):
        locate_critical(
            ModelParams(N=40, J=1.0, U=1.0), mode="knee", j_over_n_range=(0.01, 0.1), steps=12
        )


def test_fit_models_recovers_exact_line():
    ns = np.arange(10, 101, 10)
    model_log, model_lin = fit_models(ns, 0.1 * ns)
    assert model_lin.rms <= 1e-12
    assert model_lin.b == pytest.approx(0.1, abs=1e-12)
    assert model_log.rms > model_lin.rms


def test_fit_scaling_prefers_correct_model():
    ns = np.arange(10, 101, 10)
    assert fit_scaling(ModelParams(N=10, U=1.0), 1.0, ns).preferred == "log"
    assert fit_scaling(ModelParams(N=10, U=1.0), 40.0, ns).preferred == "linear"


def test_fit_scaling_needs_five_points():
    with pytest.raises(ParameterError):
        fit_scaling(ModelParams(N=10, U=1.0), 1.0, [10, 20, 30, 40])


def test_track_max_elements_frozen():
    trace = track_max_elements(ModelParams(N=6, J=0.0, U=1.0), 10.0, 0.1)
    expected = np.zeros(7)
    expected[0] = 1.0
    assert np.array_equal(trace.per_n_max, expected)
    assert trace.first_dominant == (0, 1.0)
    assert trace.second_dominant[1] == 0.0


def test_track_max_elements_localized_structure():
    # deep in the localized regime the evolution stays on a handful of
    # elements next to the initial state
    trace = track_max_elements(ModelParams(N=50, J=1.0, U=0.8), 200.0, 0.1)
    assert trace.first_dominant[0] == 0
    assert trace.first_dominant[1] >= trace.second_dominant[1]
    assert trace.per_n_max.min() >= 0.0
    assert trace.per_n_max.max() <= 1.0
    assert (trace.per_n_max > 0.02).sum() <= 5


def test_track_max_elements_validation():
    params = ModelParams(N=4, J=1.0, U=1.0)
    with pytest.raises(ParameterError):
        track_max_elements(params, 0.0, 0.1)
    with pytest.raises(ParameterError):
        track_max_elements(params, 10.0, -0.1)


def test_peak_collapse_across_sizes():
    # S-vs-u curves for different N peak at nearly the same u
    peaks = []
    for n in (40, 60, 80):
        res = scan_1d(ModelParams(N=n, J=1.0), "u", 2.0, 6.0, 33)
        i = int(np.argmax(res.S))
        peaks.append(quadratic_peak(res.axis, res.S, i))
    assert max(peaks) - min(peaks) <= 0.4


def test_two_state_entropy_relation_when_localized():
    # deep in the localized regime the averaged density has two dominant
    # elements and they alone reproduce the entropy
    for n in (50, 100, 150, 200):
        params = ModelParams(N=n, J=1.0, U=40.0 / n)
        avg = averaged_reduced_density(diagonalize(build_hamiltonian(params)), params.s)
        top = np.sort(avg.p_avg)[-2:]
        two_state = -np.log2((top**2).sum())
        full = renyi_entropy(avg.p_avg)
        assert abs(two_state - full) / full <= 0.15


def test_scan_results_reproducible():
    params = ModelParams(N=15, U=1.0)
    a = scan_1d(params, "J", 0.5, 6.0, 12)
    b = scan_1d(params, "J", 0.5, 6.0, 12)
    assert np.array_equal(a.S, b.S)
    assert np.array_equal(a.axis, b.axis)
