"""Parameter sweeps, critical-point locators, scaling fits, element tracking.

All sweeps drive the averaged-entropy pipeline point by point. Points are
independent pure computations, so an optional thread pool may evaluate them
concurrently; assembly always preserves axis order and results do not depend
on the worker count.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from datetime import datetime, timezone

import numpy as np

from ._version import __version__
from .dynamics import density_series
from .errors import BjjError, BracketError, NumericError, ParameterError
from .model import ModelParams, build_hamiltonian
from .spectral import diagonalize
from .timeavg import averaged_entropy

SCAN_AXES = ("J", "U", "N", "u")


@dataclass(frozen=True)
class ScanResult:
    """One observable swept along one axis, with the held parameters echoed."""

    axis_name: str
    axis: np.ndarray
    S: np.ndarray
    fixed: dict
    provenance: dict
    S_raw: np.ndarray | None = None

    def __post_init__(self):
        if self.axis.shape != self.S.shape:
            raise ParameterError("axis and S must have equal length")
        if self.axis.size > 1 and not np.all(np.diff(self.axis) > 0.0):
            raise ParameterError("axis must be strictly increasing")
        self.axis.setflags(write=False)
        self.S.setflags(write=False)
        if self.S_raw is not None:
            self.S_raw.setflags(write=False)


@dataclass(frozen=True)
class Scan2D:
    x_name: str
    x: np.ndarray
    y_name: str
    y: np.ndarray
    S: np.ndarray  # shape (len(x), len(y)), row-major in x
    fixed: dict
    provenance: dict

    def __post_init__(self):
        if self.S.shape != (self.x.size, self.y.size):
            raise ParameterError("S grid shape must be (len(x), len(y))")
        self.x.setflags(write=False)
        self.y.setflags(write=False)
        self.S.setflags(write=False)


@dataclass(frozen=True)
class CriticalEstimate:
    u_c: float
    method: str
    bracket: tuple
    curve: ScanResult
    details: dict

    def __post_init__(self):
        lo, hi = self.bracket
        if not lo < self.u_c < hi:
            raise NumericError(
                f"critical estimate u_c={self.u_c} outside bracket ({lo}, {hi})"
            )


@dataclass(frozen=True)
class LinearFit:
    a: float
    b: float
    rms: float


@dataclass(frozen=True)
class ScalingFit:
    model_log: LinearFit
    model_lin: LinearFit
    preferred: str
    scan: ScanResult


@dataclass(frozen=True)
class MaxElementTrace:
    """Per-element maxima of the evolving density over a sampled time window."""

    per_n_max: np.ndarray
    t_max: float
    dt: float
    first_dominant: tuple
    second_dominant: tuple

    def __post_init__(self):
        self.per_n_max.setflags(write=False)


def _provenance() -> dict:
    return {
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


def _fixed_echo(params: ModelParams, varied: str) -> dict:
    echo = {
        "N": params.N,
        "J": params.J,
        "U": params.U,
        "s": params.s,
        "alpha": params.alpha,
    }
    echo.pop(varied, None)
    if varied == "u":
        # u is swept by deriving U from u at fixed (J, N)
        echo.pop("U", None)
    return echo


def _point_params(params: ModelParams, vary: str, value) -> ModelParams:
    if vary == "J":
        return replace(params, J=float(value))
    if vary == "U":
        return replace(params, U=float(value))
    if vary == "N":
        return replace(params, N=int(value))
    if vary == "u":
        if params.J <= 0.0:
            raise ParameterError("varying u requires J > 0 (u = U*N/J)")
        return replace(params, U=float(value) * params.J / params.N)
    raise ParameterError(f"vary must be one of {SCAN_AXES}, got {vary!r}")


def _axis_values(vary: str, lo: float, hi: float, steps: int) -> np.ndarray:
    if steps < 2:
        raise ParameterError(f"steps must be >= 2, got {steps}")
    if not lo < hi:
        raise ParameterError(f"scan range must satisfy min < max, got [{lo}, {hi}]")
    if vary == "N":
        values = np.unique(np.round(np.linspace(lo, hi, steps)).astype(int))
        return values.astype(float)
    return np.linspace(lo, hi, steps)


def _map_points(fn, items, workers):
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=int(workers)) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _entropy_at(params: ModelParams, label: str) -> float:
    try:
        return averaged_entropy(params)
    except BjjError as exc:
        raise type(exc)(f"scan aborted at point {label}: {exc}") from exc


def _entropy_at_point(params: ModelParams, vary: str, value, label: str) -> float:
    try:
        point = _point_params(params, vary, value)
    except BjjError as exc:
        raise type(exc)(f"scan aborted at point {label}: {exc}") from exc
    return _entropy_at(point, label)


def scan_1d(
    params: ModelParams, vary: str, lo: float, hi: float, steps: int, workers: int = 1
) -> ScanResult:
    """Averaged entropy along one axis, all other parameters held."""
    axis = _axis_values(vary, lo, hi, steps)
    S = _map_points(
        lambda iv: _entropy_at_point(params, vary, axis[iv], f"{vary}={axis[iv]:g}"),
        range(axis.size),
        workers,
    )
    return ScanResult(
        axis_name=vary,
        axis=axis,
        S=np.asarray(S, dtype=float),
        fixed=_fixed_echo(params, vary),
        provenance=_provenance(),
    )


def scan_2d(
    params: ModelParams,
    vary_x: str,
    x_range: tuple,
    vary_y: str,
    y_range: tuple,
    workers: int = 1,
) -> Scan2D:
    """Averaged entropy on a row-major (x, y) grid."""
    if vary_x == vary_y:
        raise ParameterError("vary_x and vary_y must differ")
    xs = _axis_values(vary_x, *x_range)
    ys = _axis_values(vary_y, *y_range)
    pairs = [(ix, iy) for ix in range(xs.size) for iy in range(ys.size)]

    def point(idx):
        ix, iy = idx
        label = f"{vary_x}={xs[ix]:g},{vary_y}={ys[iy]:g}"
        try:
            p = _point_params(_point_params(params, vary_x, xs[ix]), vary_y, ys[iy])
        except BjjError as exc:
            raise type(exc)(f"scan aborted at point {label}: {exc}") from exc
        return _entropy_at(p, label)

    flat = _map_points(point, pairs, workers)
    grid = np.asarray(flat, dtype=float).reshape(xs.size, ys.size)
    fixed = _fixed_echo(params, vary_x)
    fixed.pop(vary_y, None)
    if "u" in (vary_x, vary_y):
        fixed.pop("U", None)
    return Scan2D(
        x_name=vary_x, x=xs, y_name=vary_y, y=ys, S=grid, fixed=fixed, provenance=_provenance()
    )


def normalized_scan(
    params: ModelParams,
    u: float,
    n_values,
    convention: str = "fix-U",
    workers: int = 1,
) -> ScanResult:
    """Entropy versus boson count at constant u, normalized to its maximum.

    convention 'fix-U' holds U from params and derives J = U*N/u per point;
    'fix-J' holds J and derives U = u*J/N. Both realize the same u and must
    produce the same collapse.
    """
    if not u > 0.0:
        raise ParameterError(f"u must be > 0, got {u}")
    n_values = np.asarray(n_values, dtype=int)
    if n_values.size < 2 or not np.all(np.diff(n_values) > 0):
        raise ParameterError("n_values must be >= 2 strictly increasing integers")
    if convention == "fix-U":
        if params.U <= 0.0:
            raise ParameterError("fix-U convention requires U > 0")
        points = [replace(params, N=int(n), J=params.U * int(n) / u) for n in n_values]
    elif convention == "fix-J":
        if params.J <= 0.0:
            raise ParameterError("fix-J convention requires J > 0")
        points = [replace(params, N=int(n), U=u * params.J / int(n)) for n in n_values]
    else:
        raise ParameterError(f"convention must be 'fix-U' or 'fix-J', got {convention!r}")
    S_raw = np.asarray(
        _map_points(
            lambda i: _entropy_at(points[i], f"N={n_values[i]}"), range(len(points)), workers
        ),
        dtype=float,
    )
    fixed = {"u": u, "s": params.s, "alpha": params.alpha, "convention": convention}
    fixed["U" if convention == "fix-U" else "J"] = (
        params.U if convention == "fix-U" else params.J
    )
    return ScanResult(
        axis_name="N",
        axis=n_values.astype(float),
        S=S_raw / S_raw.max(),
        fixed=fixed,
        provenance=_provenance(),
        S_raw=S_raw,
    )


def quadratic_peak(x: np.ndarray, y: np.ndarray, i: int) -> float:
    """Vertex of the parabola through points i-1, i, i+1 of a sampled curve."""
    x0, x1, x2 = x[i - 1], x[i], x[i + 1]
    y0, y1, y2 = y[i - 1], y[i], y[i + 1]
    denom = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0)
    if denom == 0.0:
        return float(x1)
    shift = 0.5 * ((x1 - x0) ** 2 * (y1 - y2) - (x1 - x2) ** 2 * (y1 - y0)) / denom
    return float(x1 - shift)


def _knee_split(xs: np.ndarray, ys: np.ndarray):
    """Two-segment change-point fit: rising line left, constant right.

    Chooses the split minimizing the combined squared residuals and returns
    (a, b, c, split_index): y = a + b*x left of the split, y = c right of it.
    """
    n = xs.size
    if n < 5:
        raise ParameterError(f"knee fit needs >= 5 points, got {n}")
    best = None
    for k in range(2, n - 1):
        design = np.column_stack([np.ones(k), xs[:k]])
        coef, *_ = np.linalg.lstsq(design, ys[:k], rcond=None)
        sse_left = ((ys[:k] - design @ coef) ** 2).sum()
        c = ys[k:].mean()
        sse = sse_left + ((ys[k:] - c) ** 2).sum()
        if best is None or sse < best[0]:
            best = (sse, float(coef[0]), float(coef[1]), float(c), k)
    _, a, b, c, k = best
    return a, b, c, k


def locate_critical(
    params: ModelParams,
    mode: str = "argmax",
    *,
    n_min: int = 4,
    n_max: int = 80,
    j_over_n_range: tuple = (0.05, 0.5),
    steps: int = 46,
    workers: int = 1,
) -> CriticalEstimate:
    """Locate the localization transition in u = U*N/J.

    mode 'argmax'  sweeps N at fixed (U, J); the entropy peaks at the
                   transition and the grid maximum is refined by quadratic
                   interpolation through its neighbors.
    mode 'knee'    sweeps J at fixed (U, N); the entropy rises roughly
                   linearly and then plateaus, and the knee is the
                   intersection of the two fitted segments.
    """
    if mode == "argmax":
        if params.J <= 0.0 or params.U <= 0.0:
            raise ParameterError("argmax mode requires J > 0 and U > 0")
        if n_min < 1 or n_min >= n_max:
            raise ParameterError(f"need 1 <= n_min < n_max, got [{n_min}, {n_max}]")
        ns = np.arange(n_min, n_max + 1)
        us = params.U * ns / params.J
        if us.min() > 2.0 or us.max() < 6.0:
            raise ParameterError(
                f"N sweep maps to u in [{us.min():.3g}, {us.max():.3g}]; must span [2, 6]"
            )
        if ((us >= 2.0) & (us <= 6.0)).sum() < 15:
            raise ParameterError("need >= 15 grid points with u in [2, 6]")
        points = [replace(params, N=int(n)) for n in ns]
        S = np.asarray(
            _map_points(lambda i: _entropy_at(points[i], f"N={ns[i]}"), range(len(points)), workers),
            dtype=float,
        )
        imax = int(np.argmax(S))
        if imax in (0, S.size - 1):
            raise BracketError(
                f"entropy maximum at u={us[imax]:.4g}, the edge of the scan; widen the range"
            )
        u_c = quadratic_peak(us, S, imax)
        curve = ScanResult(
            axis_name="u",
            axis=us.astype(float),
            S=S,
            fixed=_fixed_echo(params, "N"),
            provenance=_provenance(),
        )
        return CriticalEstimate(
            u_c=u_c,
            method="argmax-quadratic",
            bracket=(float(us[imax - 1]), float(us[imax + 1])),
            curve=curve,
            details={"N_at_peak": int(ns[imax])},
        )

    if mode == "knee":
        if params.U <= 0.0:
            raise ParameterError("knee mode requires U > 0")
        lo, hi = j_over_n_range
        js = np.linspace(lo * params.N, hi * params.N, steps)
        if js[0] <= 0.0:
            raise ParameterError("knee J grid must start above 0")
        points = [replace(params, J=float(j)) for j in js]
        S = np.asarray(
            _map_points(
                lambda i: _entropy_at(points[i], f"J={js[i]:g}"), range(len(points)), workers
            ),
            dtype=float,
        )
        a, b, c, split = _knee_split(js, S)
        if b <= 0.0:
            raise NumericError("knee fit found a non-rising left segment")
        j_knee = (c - a) / b
        if not js[0] < j_knee < js[-1]:
            raise BracketError(
                f"knee at J={j_knee:.4g} outside the scanned range [{js[0]:.4g}, {js[-1]:.4g}]"
            )
        u_c = params.U * params.N / j_knee
        h = js[1] - js[0]
        j_lo = max(j_knee - h, 0.5 * js[0])  # keep the bracket positive on coarse grids
        bracket = (params.U * params.N / (j_knee + h), params.U * params.N / j_lo)
        curve = ScanResult(
            axis_name="J",
            axis=js,
            S=S,
            fixed=_fixed_echo(params, "J"),
            provenance=_provenance(),
        )
        return CriticalEstimate(
            u_c=float(u_c),
            method="knee",
            bracket=bracket,
            curve=curve,
            details={"j_knee": float(j_knee), "split_index": split, "left_slope": b, "plateau": c},
        )

    raise ParameterError(f"mode must be 'argmax' or 'knee', got {mode!r}")


def fit_models(n_values, s_values) -> tuple:
    """Least-squares fits of a + b*log(N) and a + b*N to the same data."""
    ns = np.asarray(n_values, dtype=float)
    ys = np.asarray(s_values, dtype=float)
    fits = []
    for transform in (np.log(ns), ns):
        design = np.column_stack([np.ones(ns.size), transform])
        coef, *_ = np.linalg.lstsq(design, ys, rcond=None)
        rms = float(np.sqrt(((ys - design @ coef) ** 2).mean()))
        fits.append(LinearFit(a=float(coef[0]), b=float(coef[1]), rms=rms))
    return fits[0], fits[1]


def fit_scaling(
    params: ModelParams,
    u: float,
    n_values,
    convention: str = "fix-U",
    workers: int = 1,
) -> ScalingFit:
    """Decide whether normalized entropy grows like log(N) or like N."""
    n_values = np.asarray(n_values, dtype=int)
    if n_values.size < 5:
        raise ParameterError(f"scaling fit needs >= 5 N values, got {n_values.size}")
    scan = normalized_scan(params, u, n_values, convention=convention, workers=workers)
    if np.ptp(scan.S) < 1e-12:
        raise NumericError("normalized entropy is constant; scaling fit is degenerate")
    model_log, model_lin = fit_models(scan.axis, scan.S)
    if model_log.rms == model_lin.rms:
        raise NumericError("log and linear fits are indistinguishable")
    preferred = "log" if model_log.rms < model_lin.rms else "linear"
    return ScalingFit(model_log=model_log, model_lin=model_lin, preferred=preferred, scan=scan)


def track_max_elements(params: ModelParams, t_max: float, dt: float) -> MaxElementTrace:
    """Per-element maxima of the density diagonal over a sampled time window."""
    if not t_max > 0.0:
        raise ParameterError(f"t_max must be > 0, got {t_max}")
    if not dt > 0.0:
        raise ParameterError(f"dt must be > 0, got {dt}")
    spec = diagonalize(build_hamiltonian(params), tol=params.eig_tol)
    times = np.arange(0.0, t_max + 0.5 * dt, dt)
    per_n_max = np.zeros(spec.n_dim)
    for chunk in np.array_split(times, max(1, times.size // 2048)):
        p = density_series(spec, chunk, trace_tol=params.trace_tol)
        np.maximum(per_n_max, p.max(axis=1), out=per_n_max)
    order = np.argsort(-per_n_max, kind="stable")
    first = (int(order[0]), float(per_n_max[order[0]]))
    second = (int(order[1]), float(per_n_max[order[1]]))
    return MaxElementTrace(
        per_n_max=per_n_max, t_max=float(t_max), dt=float(dt),
        first_dominant=first, second_dominant=second,
    )
