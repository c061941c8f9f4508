"""Command-line surface: deterministic CSV/JSON datasets for every capability.

Output files are plain two/three-column tables with three leading comment
lines (tool version, parameters, format version). Floats are rendered at 12
significant digits so identical runs produce identical bytes.
"""

import argparse
import json
import os
import sys

import numpy as np

from ._version import __version__
from .dynamics import density_series, evolve_series, renyi_entropy
from .errors import NumericError, ParameterError
from .model import ModelParams, build_hamiltonian, characteristic_u
from .oracle import IntegratorConfig, integrate_state, quadrature_average
from .scans import (
    fit_scaling,
    locate_critical,
    normalized_scan,
    scan_1d,
    scan_2d,
    track_max_elements,
)
from .spectral import diagonalize
from .timeavg import averaged_reduced_density, entanglement_spectrum, spectrum_from_density

PARAM_CASTS = {"N": int, "J": float, "U": float, "s": float, "alpha": float}
CONFIG_KEYS = set(PARAM_CASTS) | {"workers", "format"}
WORKERS_ENV = "BJJSIM_WORKERS"

VISIBLE_COMMANDS = "{evolve,average,scan,critical,scaling,maxelems,figure}"


# ---------------------------------------------------------------- formatting

def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.12g}"


def _round12(value):
    if isinstance(value, (bool, np.bool_, int, np.integer)):
        return int(value)
    return float(f"{float(value):.12g}")


def _write_text(path, text):
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


def _write_table(path, fmt, params_line, columns, rows, trailers=(), json_extra=None):
    if fmt == "csv":
        lines = [
            f"# tool-version {__version__}",
            f"# params: {params_line}",
            "# format-version 1",
            ",".join(columns),
        ]
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        lines.extend(trailers)
        _write_text(path, "\n".join(lines) + "\n")
    else:
        doc = {
            "tool_version": __version__,
            "params": params_line,
            "format_version": 1,
            "columns": list(columns),
            "rows": [[_round12(v) for v in row] for row in rows],
        }
        if json_extra:
            doc.update(json_extra)
        _write_text(path, json.dumps(doc) + "\n")


def _params_line(params: ModelParams, **extra) -> str:
    parts = [
        f"N={params.N}",
        f"J={_fmt(params.J)}",
        f"U={_fmt(params.U)}",
        f"s={_fmt(params.s)}",
        f"alpha={_fmt(params.alpha)}",
    ]
    parts.extend(f"{k}={_fmt(v) if isinstance(v, (int, float, np.floating)) else v}"
                 for k, v in extra.items())
    return " ".join(parts)


# ------------------------------------------------------------- configuration

def _load_config(path) -> dict:
    cfg = {}
    with open(path) as fh:
        for ln, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ParameterError(f"config line {ln} is not key=value: {line!r}")
            key, val = (part.strip() for part in line.split("=", 1))
            if key not in CONFIG_KEYS:
                raise ParameterError(f"unknown config key {key!r} on line {ln}")
            cfg[key] = val
    return cfg


def _resolve(args, config, key, default, cast):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in config:
        try:
            return cast(config[key])
        except ValueError as exc:
            raise ParameterError(f"config value for {key} is not a {cast.__name__}") from exc
    return default


def _model_params(args, config, *, n_default=None, u_default=0.0, j_default=1.0) -> ModelParams:
    n = _resolve(args, config, "N", n_default, int)
    if n is None:
        raise ParameterError("N is required (pass --N or set N= in the config file)")
    return ModelParams(
        N=n,
        J=_resolve(args, config, "J", j_default, float),
        U=_resolve(args, config, "U", u_default, float),
        s=_resolve(args, config, "s", 1.0, float),
        alpha=_resolve(args, config, "alpha", 2.0, float),
    )


def _workers(args, config) -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        env_default = int(raw)
    except ValueError as exc:
        raise ParameterError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from exc
    return _resolve(args, config, "workers", env_default, int)


def _format(args, config) -> str:
    fmt = _resolve(args, config, "format", "csv", str)
    if fmt not in ("csv", "json"):
        raise ParameterError(f"format must be csv or json, got {fmt!r}")
    return fmt


# ----------------------------------------------------------------- commands

def _time_grid(tmax, dt):
    if not tmax > 0.0 or not dt > 0.0:
        raise ParameterError(f"tmax and dt must be > 0, got tmax={tmax} dt={dt}")
    count = int(np.floor(tmax / dt + 1e-9)) + 1
    return np.arange(count) * dt


def cmd_evolve(args, config) -> int:
    params = _model_params(args, config)
    times = _time_grid(args.tmax, args.dt)
    series = evolve_series(params, times)
    if args.full:
        spec = diagonalize(build_hamiltonian(params), tol=params.eig_tol)
        dens = density_series(spec, times, trace_tol=params.trace_tol)
        columns = ["t", "S"] + [f"p{n}" for n in range(params.n_dim)]
        rows = [
            [times[i], series.entropy[i], *dens[:, i]] for i in range(times.size)
        ]
    else:
        columns = ["t", "S"]
        rows = [[times[i], series.entropy[i]] for i in range(times.size)]
    line = _params_line(params, tmax=args.tmax, dt=args.dt)
    _write_table(args.out, _format(args, config), line, columns, rows)
    return 0


def cmd_average(args, config) -> int:
    params = _model_params(args, config)
    spec = diagonalize(build_hamiltonian(params), tol=params.eig_tol)
    avg = averaged_reduced_density(spec, params.s, trace_tol=params.trace_tol)
    esr = spectrum_from_density(avg, base=args.xi_base)
    entropy = renyi_entropy(avg.p_avg, params.alpha)
    u = characteristic_u(params) if params.J > 0.0 else float("nan")
    rows = [
        [n, avg.p_avg[n], esr.xi[n], bool(esr.floor_mask[n])] for n in range(params.n_dim)
    ]
    trailer = f"# S={_fmt(entropy)} u={_fmt(u) if u == u else 'nan'}"
    _write_table(
        args.out,
        _format(args, config),
        _params_line(params, xi_base=args.xi_base),
        ["n", "p_avg", "xi", "clamped"],
        rows,
        trailers=[trailer],
        json_extra={"S": _round12(entropy), "u": _round12(u) if u == u else None},
    )
    return 0


def cmd_scan(args, config) -> int:
    workers = _workers(args, config)
    two_d = args.vary2 is not None
    if two_d and None in (args.min2, args.max2, args.steps2):
        raise ParameterError("--vary2 requires --min2, --max2 and --steps2")
    n_default = int(args.min) if args.vary == "N" else None
    if two_d and args.vary2 == "N":
        n_default = int(args.min2)
    params = _model_params(args, config, n_default=n_default)
    if two_d:
        res = scan_2d(
            params,
            args.vary,
            (args.min, args.max, args.steps),
            args.vary2,
            (args.min2, args.max2, args.steps2),
            workers=workers,
        )
        columns = [args.vary, args.vary2, "S"]
        rows = [
            [res.x[ix], res.y[iy], res.S[ix, iy]]
            for ix in range(res.x.size)
            for iy in range(res.y.size)
        ]
        line = _params_line(
            params,
            vary=f"{args.vary}[{_fmt(args.min)},{_fmt(args.max)}]x{args.steps}",
            vary2=f"{args.vary2}[{_fmt(args.min2)},{_fmt(args.max2)}]x{args.steps2}",
        )
    else:
        res = scan_1d(params, args.vary, args.min, args.max, args.steps, workers=workers)
        columns = [args.vary, "S"]
        rows = [[res.axis[i], res.S[i]] for i in range(res.axis.size)]
        line = _params_line(
            params, vary=f"{args.vary}[{_fmt(args.min)},{_fmt(args.max)}]x{args.steps}"
        )
    _write_table(args.out, _format(args, config), line, columns, rows)
    return 0


def cmd_critical(args, config) -> int:
    workers = _workers(args, config)
    if args.mode == "argmax":
        params = _model_params(args, config, n_default=args.nmin, u_default=0.4, j_default=3.0)
        est = locate_critical(
            params, mode="argmax", n_min=args.nmin, n_max=args.nmax, workers=workers
        )
    else:
        params = _model_params(args, config, u_default=1.0)
        jn = (args.jmin / params.N if args.jmin is not None else 0.05,
              args.jmax / params.N if args.jmax is not None else 0.5)
        est = locate_critical(
            params, mode="knee", j_over_n_range=jn, steps=args.steps, workers=workers
        )
    ci = 0.5 * (est.bracket[1] - est.bracket[0])
    summary = f"u_c={est.u_c:.4g}±{ci:.2g}"
    if est.method == "knee":
        summary += f" J_knee={est.details['j_knee']:.4g}"
    print(summary)
    if args.out:
        rows = [[est.curve.axis[i], est.curve.S[i]] for i in range(est.curve.axis.size)]
        line = _params_line(params, mode=args.mode)
        _write_table(
            args.out,
            _format(args, config),
            line,
            [est.curve.axis_name, "S"],
            rows,
            trailers=[f"# u_c={_fmt(est.u_c)} bracket=({_fmt(est.bracket[0])},{_fmt(est.bracket[1])})"],
            json_extra={"u_c": _round12(est.u_c), "bracket": [_round12(b) for b in est.bracket]},
        )
    return 0


def cmd_scaling(args, config) -> int:
    workers = _workers(args, config)
    params = _model_params(args, config, n_default=args.nmin, u_default=1.0)
    n_values = np.unique(np.round(np.linspace(args.nmin, args.nmax, args.npoints)).astype(int))
    fit = fit_scaling(params, args.u, n_values, convention=args.convention, workers=workers)
    print(f"preferred={fit.preferred}")
    if args.out:
        scan = fit.scan
        rows = [[scan.axis[i], scan.S[i], scan.S_raw[i]] for i in range(scan.axis.size)]
        trailers = [
            f"# model_log a={_fmt(fit.model_log.a)} b={_fmt(fit.model_log.b)} rms={_fmt(fit.model_log.rms)}",
            f"# model_linear a={_fmt(fit.model_lin.a)} b={_fmt(fit.model_lin.b)} rms={_fmt(fit.model_lin.rms)}",
            f"# preferred={fit.preferred}",
        ]
        line = _params_line(params, u=args.u, convention=args.convention)
        _write_table(
            args.out,
            _format(args, config),
            line,
            ["N", "S_norm", "S_raw"],
            rows,
            trailers=trailers,
            json_extra={
                "preferred": fit.preferred,
                "model_log": [_round12(fit.model_log.a), _round12(fit.model_log.b), _round12(fit.model_log.rms)],
                "model_linear": [_round12(fit.model_lin.a), _round12(fit.model_lin.b), _round12(fit.model_lin.rms)],
            },
        )
    return 0


def cmd_maxelems(args, config) -> int:
    params = _model_params(args, config)
    trace = track_max_elements(params, args.tmax, args.dt)
    rows = [[n, trace.per_n_max[n]] for n in range(params.n_dim)]
    trailers = [
        f"# first={trace.first_dominant[0]}:{_fmt(trace.first_dominant[1])}"
        f" second={trace.second_dominant[0]}:{_fmt(trace.second_dominant[1])}"
    ]
    line = _params_line(params, tmax=args.tmax, dt=args.dt)
    _write_table(
        args.out, _format(args, config), line, ["n", "p_max"], rows, trailers=trailers,
        json_extra={
            "first": [trace.first_dominant[0], _round12(trace.first_dominant[1])],
            "second": [trace.second_dominant[0], _round12(trace.second_dominant[1])],
        },
    )
    return 0


def cmd_oracle(args, config) -> int:
    # debugging aid: direct-integration or quadrature reference values
    rng = np.random.default_rng(args.seed)
    n = _resolve(args, config, "N", 4, int)
    j = getattr(args, "J", None)
    u = getattr(args, "U", None)
    params = ModelParams(
        N=n,
        J=float(rng.uniform(0.05, 2.0)) if j is None else j,
        U=float(rng.uniform(0.0, 2.0)) if u is None else u,
        s=_resolve(args, config, "s", 1.0, float),
    )
    if args.avg:
        avg = quadrature_average(params, T=args.T)
        rows = [[i, avg.p_avg[i]] for i in range(params.n_dim)]
        line = _params_line(params, method="quadrature", T=40.0 / params.s)
        _write_table(args.out, "csv", line, ["n", "p_avg"], rows)
    else:
        cfg = IntegratorConfig(dt=args.dt) if args.dt else None
        dens = integrate_state(params, args.t, cfg)
        rows = [[i, dens.p[i]] for i in range(params.n_dim)]
        line = _params_line(params, method="rk4", t=args.t)
        _write_table(args.out, "csv", line, ["n", "p"], rows)
    return 0


# ------------------------------------------------------------ figure presets

def _rows_evolve(N, J, U, tmax, dt):
    params = ModelParams(N=N, J=J, U=U)
    times = _time_grid(tmax, dt)
    series = evolve_series(params, times)
    return [[times[i], series.entropy[i]] for i in range(times.size)]


def _rows_evolve_family(N, J, u_list, tmax, dt):
    rows = []
    for u_val in u_list:
        for row in _rows_evolve(N, J, u_val, tmax, dt):
            rows.append([u_val, *row])
    return rows


def _rows_scan2d(vary_x, x_range, vary_y, y_range, workers, **fixed):
    params = ModelParams(**fixed)
    res = scan_2d(params, vary_x, x_range, vary_y, y_range, workers=workers)
    return [
        [res.x[ix], res.y[iy], res.S[ix, iy]]
        for ix in range(res.x.size)
        for iy in range(res.y.size)
    ]


def _rows_family_scan(n_list, vary, lo, hi, steps, workers, **fixed):
    rows = []
    for n in n_list:
        params = ModelParams(N=n, **fixed)
        res = scan_1d(params, vary, lo, hi, steps, workers=workers)
        for i in range(res.axis.size):
            rows.append([n, res.axis[i], res.S[i]])
    return rows


def _rows_j_over_n(n_list, jn_lo, jn_hi, steps, workers, U):
    rows = []
    for n in n_list:
        res = scan_1d(ModelParams(N=n, U=U), "J", jn_lo * n, jn_hi * n, steps,
                      workers=workers)
        for i in range(res.axis.size):
            rows.append([n, res.axis[i] / n, res.S[i]])
    return rows


def _rows_rescaled_n_scan(values, key, n_range, workers, xval, **fixed):
    rows = []
    for v in values:
        params = ModelParams(N=n_range[0], **{key: v}, **fixed)
        res = scan_1d(params, "N", n_range[0], n_range[1], n_range[1] - n_range[0] + 1,
                      workers=workers)
        for i in range(res.axis.size):
            rows.append([v, xval(v, res.axis[i]), res.S[i]])
    return rows


def _rows_normalized(u, n_values, workers):
    res = normalized_scan(ModelParams(N=int(n_values[0]), U=1.0), u, n_values, workers=workers)
    return [[res.axis[i], res.S[i]] for i in range(res.axis.size)]


def _rows_normalized_grid(u_values, n_values, workers):
    rows = []
    for u in u_values:
        res = normalized_scan(ModelParams(N=int(n_values[0]), U=1.0), u, n_values,
                              workers=workers)
        for i in range(res.axis.size):
            rows.append([u, res.axis[i], res.S[i]])
    return rows


def _rows_spectrum_family(N, vary, values, workers, **fixed):
    rows = []
    for v in values:
        params = ModelParams(N=N, **{vary: v}, **fixed)
        esr = entanglement_spectrum(params)
        for n in range(N + 1):
            rows.append([v, n, esr.xi[n], bool(esr.floor_mask[n])])
    return rows


def _rows_maxelems(N, J, U, tmax, dt):
    trace = track_max_elements(ModelParams(N=N, J=J, U=U), tmax, dt)
    return [[n, trace.per_n_max[n]] for n in range(N + 1)]


def _rows_maxelems_family(n_list, J, u, tmax, dt):
    rows = []
    for n in n_list:
        for row in _rows_maxelems(n, J, u / n * J, tmax, dt):
            rows.append([n, *row])
    return rows


FIGURE_PRESETS = {
    "1a": ("entropy time series, N=100 J=1 U=0.01, t<=1000 dt=0.1",
           ["t", "S"], lambda w: _rows_evolve(100, 1.0, 0.01, 1000.0, 0.1)),
    "1b": ("entropy time series, N=100 J=1 U=0.1, t<=1000 dt=0.1",
           ["t", "S"], lambda w: _rows_evolve(100, 1.0, 0.1, 1000.0, 0.1)),
    "2b": ("averaged entropy vs J for N in {5,10,15,20}, U=1",
           ["N", "J", "S"],
           lambda w: _rows_family_scan([5, 10, 15, 20], "J", 0.25, 15.0, 60, w, U=1.0)),
    "2c": ("averaged entropy on a (J,U) grid at N=20",
           ["J", "U", "S"],
           lambda w: _rows_scan2d("J", (0.25, 15.0, 40), "U", (0.05, 2.0, 40), w, N=20)),
    "2d": ("averaged entropy on a (J,N) grid at U=1",
           ["J", "N", "S"],
           lambda w: _rows_scan2d("J", (0.25, 15.0, 40), "N", (2, 40, 20), w, N=2, U=1.0)),
    "2e": ("averaged entropy on a (U,N) grid at J=1",
           ["U", "N", "S"],
           lambda w: _rows_scan2d("U", (0.005, 0.5, 40), "N", (2, 40, 20), w, N=2, J=1.0)),
    "3a": ("averaged entropy vs J/N for N in {20,40,60,80}, U=1",
           ["N", "J_over_N", "S"],
           lambda w: _rows_j_over_n([20, 40, 60, 80], 0.05, 0.5, 46, w, U=1.0)),
    "3b": ("averaged entropy vs u=U*N for N in {20,40,60,80}, J=1",
           ["N", "u", "S"],
           lambda w: _rows_family_scan([20, 40, 60, 80], "u", 1.0, 8.0, 57, w, J=1.0)),
    "3c": ("averaged entropy vs N/J for J in {1,2,3}, U=0.4",
           ["J", "N_over_J", "S"],
           lambda w: _rows_rescaled_n_scan([1.0, 2.0, 3.0], "J", (4, 80), w,
                                           lambda j, n: n / j, U=0.4)),
    "3d": ("averaged entropy vs U*N for U in {0.2,0.4,0.8}, J=3",
           ["U", "UN", "S"],
           lambda w: _rows_rescaled_n_scan([0.2, 0.4, 0.8], "U", (4, 80), w,
                                           lambda u, n: u * n, J=3.0)),
    "4a": ("normalized entropy vs N at u=1 (fix U=1, J=U*N/u)",
           ["N", "S_norm"], lambda w: _rows_normalized(1.0, np.arange(10, 101, 5), w)),
    "4b": ("normalized entropy on a (u,N) grid",
           ["u", "N", "S_norm"],
           lambda w: _rows_normalized_grid(np.linspace(0.5, 8.0, 31),
                                           np.arange(10, 101, 10), w)),
    "4c": ("normalized entropy vs N at u=40 (fix U=1, J=U*N/u)",
           ["N", "S_norm"], lambda w: _rows_normalized(40.0, np.arange(10, 101, 5), w)),
    "5a": ("entanglement spectrum vs U at N=10, J=1",
           ["U", "n", "xi", "clamped"],
           lambda w: _rows_spectrum_family(10, "U", np.linspace(0.02, 2.0, 100), w, J=1.0)),
    "5b": ("entanglement spectrum vs J at N=10, U=1",
           ["J", "n", "xi", "clamped"],
           lambda w: _rows_spectrum_family(10, "J", np.linspace(0.05, 5.0, 100), w, U=1.0)),
    "11": ("entropy time series at N=100 J=1 for U in {0,0.01,0.1,0.5,1,2}",
           ["U", "t", "S"],
           lambda w: _rows_evolve_family(100, 1.0, [0.0, 0.01, 0.1, 0.5, 1.0, 2.0], 200.0, 0.02)),
    "12": ("entropy time series at N=100 J=1 for U in {0.01,0.1,1}, shared window",
           ["U", "t", "S"],
           lambda w: _rows_evolve_family(100, 1.0, [0.01, 0.1, 1.0], 100.0, 0.01)),
    "13a": ("per-element density maxima, N=100 J=1 U=0.01 (u=1), t<=2000",
            ["n", "p_max"], lambda w: _rows_maxelems(100, 1.0, 0.01, 2000.0, 0.1)),
    "13b": ("per-element density maxima at u=40, J=1, N in {50,100,150,200}, t<=2000",
            ["N", "n", "p_max"],
            lambda w: _rows_maxelems_family([50, 100, 150, 200], 1.0, 40.0, 2000.0, 0.1)),
}


def cmd_figure(args, config) -> int:
    preset = FIGURE_PRESETS.get(args.id)
    if preset is None:
        raise ParameterError(
            f"unknown figure id {args.id!r}; known: {', '.join(sorted(FIGURE_PRESETS))}"
        )
    desc, columns, builder = preset
    rows = builder(_workers(args, config))
    path = os.path.join(args.out, f"fig{args.id}.csv")
    _write_table(path, "csv", f"preset={args.id} {desc}", columns, rows)
    return 0


# ------------------------------------------------------------------- parser

def _add_param_flags(sub):
    sub.add_argument("--N", type=int, default=None, help="boson count")
    sub.add_argument("--J", type=float, default=None, help="tunneling rate")
    sub.add_argument("--U", type=float, default=None, help="interaction strength")
    sub.add_argument("--s", type=float, default=None, help="observation-time rate")
    sub.add_argument("--alpha", type=float, default=None, help="Renyi order")


def _add_common_flags(sub, out_required=True):
    sub.add_argument("--out", required=out_required, default=None,
                     help="output path ('-' for stdout)")
    sub.add_argument("--format", choices=("csv", "json"), default=None)
    sub.add_argument("--config", default=None, help="key=value config file")
    sub.add_argument("--workers", type=int, default=None,
                     help=f"scan concurrency (default ${WORKERS_ENV} or 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bjjsim",
        description="Entanglement dynamics of a two-site bosonic junction "
                    "(exact diagonalization).",
    )
    parser.add_argument("--version", action="version", version=f"bjjsim {__version__}")
    sub = parser.add_subparsers(dest="command", metavar=VISIBLE_COMMANDS, required=True)

    p = sub.add_parser("evolve", help="entropy time series")
    _add_param_flags(p)
    p.add_argument("--tmax", type=float, default=1000.0)
    p.add_argument("--dt", type=float, default=0.1)
    p.add_argument("--full", action="store_true", help="append density columns p0..pN")
    _add_common_flags(p)

    p = sub.add_parser("average", help="observation-time-averaged density and spectrum")
    _add_param_flags(p)
    p.add_argument("--xi-base", dest="xi_base", choices=("e", "2"), default="e")
    _add_common_flags(p)

    p = sub.add_parser("scan", help="1D or 2D parameter sweep of the averaged entropy")
    _add_param_flags(p)
    p.add_argument("--vary", required=True, choices=("J", "U", "N", "u"))
    p.add_argument("--min", type=float, required=True)
    p.add_argument("--max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--vary2", choices=("J", "U", "N", "u"), default=None)
    p.add_argument("--min2", type=float, default=None)
    p.add_argument("--max2", type=float, default=None)
    p.add_argument("--steps2", type=int, default=None)
    _add_common_flags(p)

    p = sub.add_parser("critical", help="locate the localization transition u_c")
    _add_param_flags(p)
    p.add_argument("--mode", required=True, choices=("argmax", "knee"))
    p.add_argument("--nmin", type=int, default=4)
    p.add_argument("--nmax", type=int, default=80)
    p.add_argument("--jmin", type=float, default=None, help="knee mode J range start")
    p.add_argument("--jmax", type=float, default=None, help="knee mode J range end")
    p.add_argument("--steps", type=int, default=46, help="knee mode J grid size")
    _add_common_flags(p, out_required=False)

    p = sub.add_parser("scaling", help="log-vs-linear scaling of normalized entropy")
    _add_param_flags(p)
    p.add_argument("--u", type=float, required=True)
    p.add_argument("--nmin", type=int, default=10)
    p.add_argument("--nmax", type=int, default=100)
    p.add_argument("--npoints", type=int, default=10)
    p.add_argument("--convention", choices=("fix-U", "fix-J"), default="fix-U")
    _add_common_flags(p, out_required=False)

    p = sub.add_parser("maxelems", help="per-element density maxima over a time window")
    _add_param_flags(p)
    p.add_argument("--tmax", type=float, default=2000.0)
    p.add_argument("--dt", type=float, default=0.1)
    _add_common_flags(p)

    p = sub.add_parser("figure", help="write a preset dataset as fig<id>.csv")
    p.add_argument("--id", required=True, choices=sorted(FIGURE_PRESETS),
                   metavar="ID", help="preset id, e.g. 2c")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--config", default=None)
    p.add_argument("--workers", type=int, default=None)
    _add_param_flags(p)

    # undocumented: brute-force reference values for debugging
    p = sub.add_parser("oracle")
    _add_param_flags(p)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--dt", type=float, default=None)
    p.add_argument("--T", type=float, default=None)
    p.add_argument("--avg", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    _add_common_flags(p, out_required=False)
    p.set_defaults(out="-")

    return parser


DISPATCH = {
    "evolve": cmd_evolve,
    "average": cmd_average,
    "scan": cmd_scan,
    "critical": cmd_critical,
    "scaling": cmd_scaling,
    "maxelems": cmd_maxelems,
    "figure": cmd_figure,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = _load_config(args.config) if getattr(args, "config", None) else {}
        return DISPATCH[args.command](args, config)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 4


def entry():  # console-script hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
