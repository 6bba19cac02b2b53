"""Command-line front end emitting machine-readable artifacts.

Subcommands: ``coeffs``, ``dispersion``, ``modified``, ``soliton``,
``simulate``, ``report``.  Options may come from a key/value config file
(INI, section ``[drpkit]``); flags override file values, built-in defaults
fill the rest, and the effective configuration is echoed into every JSON
artifact.  Exit codes: 0 success, 2 configuration error, 3 numerical
failure.  Relative output paths land in $DRPKIT_OUTPUT_DIR when it is set.

All artifacts are deterministic: floats are written with full round-trip
precision via repr, JSON keys are sorted, and nothing records wall-clock
time, so fixed configs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import configparser
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__, sim, wave
from .errors import (
    BlowUpError,
    ConfigError,
    DrpkitError,
    LostFrontError,
    NormGuardError,
    SingularSystemError,
)
from .modeq import (
    DifferentialApproximation,
    SchemeParams,
    discrete_symbol,
    nondimensionalize,
    taylor_expand_scheme,
)
from .stencil import (
    MAX_HALF_WIDTH,
    dispersion_samples,
    effective_wavenumber,
    integrated_error,
    optimize_coefficients,
)

_CONFIG_SECTION = "drpkit"
_OUTPUT_DIR_ENV = "DRPKIT_OUTPUT_DIR"


def _fmt(value: float) -> str:
    """Full round-trip decimal rendering of a float."""
    return repr(float(value))


def _resolve_output(raw: str) -> Path:
    path = Path(raw)
    base = os.environ.get(_OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    return path


def _out_path(raw: str) -> Path:
    path = _resolve_output(raw)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _out_dir(raw: str) -> Path:
    path = _resolve_output(raw)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write_text(path: Path, text: str):
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


def _write_json(path: Path, payload: dict):
    _write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _load_config_file(path: str | None) -> dict[str, str]:
    if not path:
        return {}
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigError(f"config file {path!r} not found or unreadable")
    if not parser.has_section(_CONFIG_SECTION):
        raise ConfigError(f"config file {path!r} has no [{_CONFIG_SECTION}] section")
    return dict(parser.items(_CONFIG_SECTION))


class _Options:
    """Flag > config-file > default resolution with type casting."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.file_values = _load_config_file(getattr(args, "config", None))

    def get(self, name: str, cast, default=None):
        flag = getattr(self.args, name, None)
        if flag is not None:
            return flag
        if name in self.file_values:
            raw = self.file_values[name]
            try:
                return cast(raw)
            except ValueError as exc:
                raise ConfigError(f"config key {name!r}: cannot parse {raw!r}") from exc
        return default


def _require_positive(name: str, value: float) -> float:
    if value is None or not math.isfinite(value) or value <= 0.0:
        raise ConfigError(f"{name} must be finite and positive, got {value!r}")
    return float(value)


def _resolve_half_width(opts: _Options) -> int:
    m = opts.get("m", int, 1)
    if not isinstance(m, int) or m < 1 or m > MAX_HALF_WIDTH:
        raise ConfigError(f"half-width m must be an integer in [1, {MAX_HALF_WIDTH}], got {m!r}")
    return m


def _resolve_params(opts: _Options, default_sigma: float) -> tuple[SchemeParams, dict]:
    """Build SchemeParams from (sigma | tau) with h, c, mu, re_h.

    Any one of sigma and tau is derivable from the other through
    sigma = c tau / h; when both are given they must agree.
    """
    h = _require_positive("h", opts.get("h", float, 1.0))
    c = _require_positive("c", opts.get("c", float, 1.0))
    mu = _require_positive("mu", opts.get("mu", float, 1.0))
    re_h = _require_positive("re_h", opts.get("re_h", float, 1.0))
    sigma = opts.get("sigma", float)
    tau = opts.get("tau", float)
    if sigma is None and tau is None:
        sigma = default_sigma
        tau = sigma * h / c
    elif sigma is None:
        tau = _require_positive("tau", tau)
        sigma = c * tau / h
    elif tau is None:
        sigma = _require_positive("sigma", sigma)
        tau = sigma * h / c
    else:
        sigma = _require_positive("sigma", sigma)
        tau = _require_positive("tau", tau)
        if not math.isclose(sigma, c * tau / h, rel_tol=1e-12):
            raise ConfigError(
                f"inconsistent dynamics: sigma={sigma!r} but c*tau/h={c * tau / h!r}"
            )
    U0 = re_h * mu / h
    try:
        params = SchemeParams(
            c=c, mu=mu, tau=tau, h=h, sigma=sigma, U0=U0, tau0=h / U0, h0=h, re_h=re_h
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    echo = {"sigma": params.sigma, "tau": params.tau, "h": params.h, "c": params.c,
            "mu": params.mu, "re_h": params.re_h, "U0": params.U0, "tau0": params.tau0,
            "h0": params.h0}
    return params, echo


def _table_json(da: DifferentialApproximation) -> dict:
    return {
        "truncation": list(da.truncation),
        "terms": [
            {"t_order": s, "x_order": r, "coefficient": da.terms[(s, r)]}
            for (s, r) in sorted(da.terms)
        ],
    }


def _print_table(label: str, da: DifferentialApproximation):
    print(f"{label} (p={da.truncation[0]}, q={da.truncation[1]}):")
    for (s, r) in sorted(da.terms):
        name = "u" + "_t" * s + "_x" * r
        print(f"  {name:<10s} {_fmt(da.terms[(s, r)])}")


# ----------------------------------------------------------------- coeffs


def cmd_coeffs(args) -> int:
    opts = _Options(args)
    m = _resolve_half_width(opts)
    coeffs = optimize_coefficients(m)
    error = integrated_error(coeffs)
    print(f"half-width m = {m}")
    for k, g in enumerate(coeffs.gamma, start=1):
        print(f"gamma_{k} = {_fmt(g)}")
    print(f"integrated_error = {_fmt(error)}")
    if args.json:
        payload = {
            "m": m,
            "gamma": list(coeffs.gamma),
            "E": error,
            "config": {"m": m},
        }
        _write_json(_out_path(args.json), payload)
    return 0


# ------------------------------------------------------------- dispersion


def cmd_dispersion(args) -> int:
    opts = _Options(args)
    m = _resolve_half_width(opts)
    samples = opts.get("samples", int, 101)
    if samples < 2:
        raise ConfigError(f"samples must be at least 2, got {samples}")
    coeffs = optimize_coefficients(m)
    rows = dispersion_samples(coeffs, samples)
    lines = [f"# m={m} samples={samples}", "zeta,lambda_bar_h,error"]
    lines += [f"{_fmt(r.zeta)},{_fmt(r.lambda_bar_h)},{_fmt(r.error)}" for r in rows]
    text = "\n".join(lines) + "\n"
    if args.csv:
        _write_text(_out_path(args.csv), text)
    else:
        sys.stdout.write(text)
    return 0


# --------------------------------------------------------------- modified


def cmd_modified(args) -> int:
    opts = _Options(args)
    m = _resolve_half_width(opts)
    params, echo = _resolve_params(opts, default_sigma=1.0)
    p = opts.get("p", int, 2)
    q = opts.get("q", int, 1)
    coeffs = optimize_coefficients(m)
    try:
        dimensional = taylor_expand_scheme(coeffs, params, p, q)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    # the nondimensional form is defined for the reference truncation only
    reference = dimensional if (p, q) == (2, 1) else taylor_expand_scheme(coeffs, params, 2, 1)
    nondim = nondimensionalize(reference, params)
    _print_table("dimensional", dimensional)
    _print_table("nondimensional", nondim)
    if args.json:
        payload = {
            "dimensional": _table_json(dimensional),
            "nondimensional": _table_json(nondim),
            "config": {**echo, "m": m, "p": p, "q": q},
        }
        _write_json(_out_path(args.json), payload)
    return 0


# ---------------------------------------------------------------- soliton


def _soliton_payload(params, echo, coeffs, C, C1, V0, verify, xi_max, xi_samples) -> dict:
    sol = wave.closed_form_kink(params, coeffs, C=C, C1=C1, V0=V0).canonical()
    nondim = nondimensionalize(taylor_expand_scheme(coeffs, params, 2, 1), params)
    ode = wave.reduce_to_ode(nondim, params, v=sol.v, C=C)
    payload: dict = {
        "solution": {"v": sol.v, "U1": sol.U1, "V1": 0.0, "V0": sol.V0, "C1": sol.C1, "C": sol.C},
        "config": {**echo, "m": coeffs.m, "C": C, "C1": C1, "V0": V0},
    }
    if verify:
        report = wave.verify_condensed_system(params, coeffs, C=C, C1=sol.C1, V0=sol.V0)
        ansatz = wave.HyperbolicAnsatz(U1=sol.U1, V1=0.0, V0=sol.V0, C1=sol.C1, v=sol.v)
        derived = wave.collect_system(wave.substitute_ansatz(ode, ansatz))
        derived_res = wave.evaluate_system(derived, report.values)
        xi = np.linspace(-xi_max, xi_max, xi_samples)
        r = wave.residual(ode, sol, xi)
        payload["condensed_system"] = {
            "residuals": list(report.residuals),
            "max_abs": float(np.max(np.abs(report.residuals))),
            "ok": report.ok,
        }
        payload["derived_system"] = {
            "residuals": [float(x) for x in derived_res],
            "max_abs": float(np.max(np.abs(derived_res))),
        }
        payload["ode_residual"] = {
            "xi": [float(x) for x in xi],
            "r": [float(x) for x in r],
            "limit": -C,
        }
        payload["branches"] = {
            "derived": [b.to_json() for b in wave.solve_system(derived)],
            "condensed": [
                b.to_json()
                for b in wave.solve_system(
                    wave.condensed_coefficient_system(params, coeffs, sol.C1)
                )
            ],
            "summary": {
                "derived": wave.describe_solution_set(wave.solve_system(derived)),
                "condensed": wave.describe_solution_set(
                    wave.solve_system(wave.condensed_coefficient_system(params, coeffs, sol.C1))
                ),
            },
        }
    return payload


def cmd_soliton(args) -> int:
    opts = _Options(args)
    m = _resolve_half_width(opts)
    params, echo = _resolve_params(opts, default_sigma=1.0)
    C = opts.get("C", float, 1.0)
    C1 = opts.get("C1", float, 1.0)
    V0 = opts.get("V0", float, 0.0)
    if C1 == 0.0:
        raise ConfigError("C1 must be nonzero")
    coeffs = optimize_coefficients(m)
    try:
        payload = _soliton_payload(
            params, echo, coeffs, C, C1, V0, args.verify, args.xi_max, args.xi_samples
        )
    except ZeroDivisionError as exc:
        raise ConfigError(str(exc)) from exc
    sol = payload["solution"]
    print(f"kink speed v = {_fmt(sol['v'])}")
    print(f"amplitude U1 = {_fmt(sol['U1'])}")
    print(f"offset V0 = {_fmt(sol['V0'])}, inverse width C1 = {_fmt(sol['C1'])}")
    if args.verify:
        print(f"condensed-system residual max = {_fmt(payload['condensed_system']['max_abs'])}")
        print(f"derived-system residual max = {_fmt(payload['derived_system']['max_abs'])}")
    if args.json:
        _write_json(_out_path(args.json), payload)
    return 0


# --------------------------------------------------------------- simulate


def _build_initial(opts, grid, params, coeffs):
    """Initial state plus (kink solution or None, tracking level or None, echo)."""
    init = opts.get("init", str, "kink")
    if init == "constant":
        value = opts.get("value", float, 1.0)
        return sim.inject_constant(grid, value), None, None, {"init": init, "value": value}
    if init == "kink":
        C = opts.get("C", float, 1.0)
        C1 = opts.get("C1", float, 0.25)
        V0 = opts.get("V0", float, 0.0)
        try:
            sol = wave.closed_form_kink(params, coeffs, C=C, C1=C1, V0=V0)
        except ZeroDivisionError as exc:
            raise ConfigError(str(exc)) from exc
        level = opts.get("level", float, sol.V0)
        echo = {"init": init, "C": C, "C1": C1, "V0": V0, "level": level}
        return sim.inject_kink(grid, sol), sol, level, echo
    if init == "gaussian":
        amplitude = opts.get("amplitude", float, 1.0)
        width = opts.get("width", float, grid.length / 12.0)
        center = opts.get("center", float, grid.length / 2.0)
        level = opts.get("level", float, amplitude / 2.0)
        echo = {"init": init, "amplitude": amplitude, "width": width,
                "center": center, "level": level}
        return sim.inject_gaussian(grid, amplitude, width, center), None, level, echo
    if init == "mode":
        p = opts.get("mode_p", int, 1)
        amplitude = opts.get("amplitude", float, 1.0)
        level = opts.get("level", float)
        echo = {"init": init, "mode_p": p, "amplitude": amplitude, "level": level}
        return sim.inject_mode(grid, p, amplitude), None, level, echo
    if init == "random":
        seed = opts.get("seed", int, 0)
        amplitude = opts.get("amplitude", float, 1.0)
        level = opts.get("level", float)
        echo = {"init": init, "seed": seed, "amplitude": amplitude, "level": level}
        return sim.inject_random(grid, seed, amplitude), None, level, echo
    raise ConfigError(f"unknown init {init!r}")


def _dominant_mode_speed(state, coeffs, params, grid) -> float | None:
    """Phase speed (x units per time) at the strongest nonzero Fourier mode."""
    spectrum = np.abs(np.fft.fft(state.values))
    half = grid.N // 2
    if half < 1:
        return None
    p_star = 1 + int(np.argmax(spectrum[1 : half + 1]))
    zeta = 2.0 * math.pi * p_star / grid.N
    g = discrete_symbol(coeffs, params, zeta)
    return -float(np.angle(g)) * grid.h / (params.tau * zeta)


def _snapshot_csv(state, grid) -> str:
    lines = [f"# t={_fmt(state.t)} N={grid.N} h={_fmt(grid.h)}"]
    x = grid.nodes()
    for i in range(grid.N):
        lines.append(f"{i},{_fmt(x[i])},{_fmt(state.values[i])}")
    return "\n".join(lines) + "\n"


def cmd_simulate(args) -> int:
    opts = _Options(args)
    m = _resolve_half_width(opts)
    params, echo = _resolve_params(opts, default_sigma=0.1)
    N = opts.get("N", int, 256)
    steps = opts.get("steps", int, 200)
    snap_every = opts.get("snap_every", int, 10)
    if steps < 1 or snap_every < 1:
        raise ConfigError("steps and snap_every must be positive")
    try:
        grid = sim.Grid1D(N=N, h=params.h)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    coeffs = optimize_coefficients(m)
    if grid.N <= 2 * coeffs.m:
        raise ConfigError(f"N={grid.N} too small for half-width {coeffs.m}")
    initial, sol, level, init_echo = _build_initial(opts, grid, params, coeffs)

    predicted = None
    if sol is not None:
        predicted = params.U0 * sol.v
        budget = sim.horizon_steps(grid, predicted, params)
        if steps > budget:
            print(
                f"warning: {steps} steps exceed the front-interaction horizon "
                f"({budget:.0f} steps)",
                file=sys.stderr,
            )
    elif init_echo["init"] in ("gaussian", "mode", "random"):
        predicted = _dominant_mode_speed(initial, coeffs, params, grid)

    history = sim.run(
        initial, coeffs, params, n_steps=steps, snap_every=snap_every,
        use_oracle=args.oracle,
    )

    base = _out_dir(opts.get("outdir", str, "."))
    for snap in history:
        _write_text(base / f"snapshot_{snap.step_count:06d}.csv", _snapshot_csv(snap, grid))

    measured = None
    if level is not None:
        try:
            measured = sim.measure_speed(history, level) * grid.h
        except (LostFrontError, ValueError):
            measured = None

    shape_series = None
    if sol is not None:
        persistence = sim.measure_persistence(history, grid, sol)
        shape_series = [
            {"t": t, "shift": s, "error": e}
            for t, s, e in zip(persistence.times, persistence.shifts, persistence.shape_errors)
        ]

    payload = {
        "predicted_v": predicted,
        "measured_v": measured,
        "shape_error_series": shape_series,
        "norm_series": [{"t": snap.t, "l2": snap.l2_norm()} for snap in history],
        "config": {
            **echo,
            **init_echo,
            "m": m,
            "N": N,
            "steps": steps,
            "snap_every": snap_every,
            "oracle": bool(args.oracle),
            "backend": sim.KERNEL_BACKEND,
        },
    }
    _write_json(base / "measurements.json", payload)
    print(f"wrote {len(history)} snapshots and measurements.json to {base}")
    if predicted is not None:
        print(f"predicted_v = {_fmt(predicted)}")
    if measured is not None:
        print(f"measured_v = {_fmt(measured)}")
    return 0


# ----------------------------------------------------------------- report


def cmd_report(args) -> int:
    opts = _Options(args)
    m = _resolve_half_width(opts)
    params, echo = _resolve_params(opts, default_sigma=1.0)
    C = opts.get("C", float, 1.0)
    C1 = opts.get("C1", float, 1.0)
    V0 = opts.get("V0", float, 0.0)
    samples = opts.get("samples", int, 101)
    coeffs = optimize_coefficients(m)

    rows = dispersion_samples(coeffs, samples)
    errors = np.array([r.error for r in rows])
    band_edge = effective_wavenumber(coeffs, math.pi / 2.0)

    dimensional = taylor_expand_scheme(coeffs, params, 2, 1)
    nondim = nondimensionalize(dimensional, params)

    soliton = _soliton_payload(
        params, echo, coeffs, C, C1, V0, verify=True, xi_max=10.0, xi_samples=41
    )
    sol_block = {
        "solution": soliton["solution"],
        "condensed_residuals": soliton["condensed_system"]["residuals"],
        "derived_residuals": soliton["derived_system"]["residuals"],
        "ode_residual_at_zero": soliton["ode_residual"]["r"][len(soliton["ode_residual"]["r"]) // 2],
        "ode_residual_limit": soliton["ode_residual"]["limit"],
        "branch_summary": soliton["branches"]["summary"],
    }

    simulation = None
    if not args.no_sim:
        # a small kink run at a milder default CFL number
        sim_params, _ = _resolve_params(opts, default_sigma=0.1)
        N = opts.get("N", int, 128)
        steps = opts.get("steps", int, 100)
        snap_every = opts.get("snap_every", int, 10)
        grid = sim.Grid1D(N=N, h=sim_params.h)
        try:
            kink = wave.closed_form_kink(sim_params, coeffs, C=C, C1=0.25, V0=V0)
        except ZeroDivisionError as exc:
            raise ConfigError(str(exc)) from exc
        initial = sim.inject_kink(grid, kink)
        history = sim.run(initial, coeffs, sim_params, n_steps=steps, snap_every=snap_every)
        try:
            measured = sim.measure_speed(history, kink.V0) * grid.h
        except (LostFrontError, ValueError):
            measured = None
        persistence = sim.measure_persistence(history, grid, kink)
        simulation = {
            "predicted_v": sim_params.U0 * kink.v,
            "measured_v": measured,
            "shape_error_series": [
                {"t": t, "shift": s, "error": e}
                for t, s, e in zip(
                    persistence.times, persistence.shifts, persistence.shape_errors
                )
            ],
            "norm_series": [{"t": snap.t, "l2": snap.l2_norm()} for snap in history],
            "config": {"N": N, "steps": steps, "snap_every": snap_every,
                       "sigma": sim_params.sigma, "tau": sim_params.tau},
        }

    payload = {
        "config": {**echo, "m": m, "C": C, "C1": C1, "V0": V0, "samples": samples},
        "coefficients": {
            "m": m,
            "gamma": list(coeffs.gamma),
            "integrated_error": integrated_error(coeffs),
        },
        "dispersion": {
            "samples": samples,
            "max_abs_error": float(np.max(np.abs(errors))),
            "band_edge_lambda_bar_h": float(band_edge),
        },
        "modified_equation": {
            "dimensional": _table_json(dimensional),
            "nondimensional": _table_json(nondim),
        },
        "soliton": sol_block,
        "simulation": simulation,
    }
    path = _out_path(args.json or "report.json")
    _write_json(path, payload)
    print(f"wrote {path}")
    return 0


# ------------------------------------------------------------------ main


def _add_common(sub, *names):
    if "config" in names:
        sub.add_argument("--config", help="INI config file with a [drpkit] section")
    if "m" in names:
        sub.add_argument("--m", type=int, help="stencil half-width")
    if "params" in names:
        sub.add_argument("--sigma", type=float, help="CFL number sigma = c tau / h")
        sub.add_argument("--tau", type=float, help="time step")
        sub.add_argument("--h", type=float, help="mesh size (default 1)")
        sub.add_argument("--c", type=float, help="advection constant (default 1)")
        sub.add_argument("--mu", type=float, help="viscosity (default 1)")
        sub.add_argument("--re-h", dest="re_h", type=float, help="mesh Reynolds number (default 1)")
    if "kink" in names:
        sub.add_argument("--C", type=float, help="integration constant (default 1)")
        sub.add_argument("--C1", type=float, help="inverse kink width (default 1)")
        sub.add_argument("--V0", type=float, help="kink offset (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drpkit",
        description="Band-optimized stencils, modified equations, spurious-wave diagnostics",
    )
    parser.add_argument("--version", action="version", version=f"drpkit {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("coeffs", help="optimal stencil weights and their integrated error")
    _add_common(p, "config", "m")
    p.add_argument("--json", help="write {m, gamma, E} JSON here")
    p.set_defaults(func=cmd_coeffs)

    p = subs.add_parser("dispersion", help="CSV of (zeta, lambda_bar_h, error) over the band")
    _add_common(p, "config", "m")
    p.add_argument("--samples", type=int, help="number of zeta samples (default 101)")
    p.add_argument("--csv", help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_dispersion)

    p = subs.add_parser("modified", help="modified-equation tables, dimensional and nondimensional")
    _add_common(p, "config", "m", "params")
    p.add_argument("--p", type=int, help="time truncation order (default 2)")
    p.add_argument("--q", type=int, help="space truncation order (default 1)")
    p.add_argument("--json", help="write both tables as JSON here")
    p.set_defaults(func=cmd_modified)

    p = subs.add_parser("soliton", help="closed-form kink and its residual diagnostics")
    _add_common(p, "config", "m", "params", "kink")
    p.add_argument("--verify", action="store_true", help="emit both system-residual blocks")
    p.add_argument("--xi-max", dest="xi_max", type=float, default=10.0)
    p.add_argument("--xi-samples", dest="xi_samples", type=int, default=41)
    p.add_argument("--json", help="write the JSON record here")
    p.set_defaults(func=cmd_soliton)

    p = subs.add_parser("simulate", help="run the scheme, write snapshots and measurements")
    _add_common(p, "config", "m", "params", "kink")
    p.add_argument("--N", type=int, help="grid nodes (default 256)")
    p.add_argument("--steps", type=int, help="time steps (default 200)")
    p.add_argument("--snap-every", dest="snap_every", type=int, help="snapshot stride (default 10)")
    p.add_argument("--init", choices=["kink", "gaussian", "constant", "mode", "random"],
                   help="initial condition (default kink)")
    p.add_argument("--amplitude", type=float)
    p.add_argument("--width", type=float)
    p.add_argument("--center", type=float)
    p.add_argument("--value", type=float, help="constant-init value")
    p.add_argument("--mode-p", dest="mode_p", type=int, help="mode number for --init mode")
    p.add_argument("--seed", type=int, help="RNG seed for --init random")
    p.add_argument("--level", type=float, help="tracking level for speed measurement")
    p.add_argument("--oracle", action="store_true", help="use the spectral oracle instead of stepping")
    p.add_argument("--outdir", help="output directory (default .)")
    p.set_defaults(func=cmd_simulate)

    p = subs.add_parser("report", help="single JSON bundling the whole pipeline")
    _add_common(p, "config", "m", "params", "kink")
    p.add_argument("--samples", type=int, help="dispersion samples (default 101)")
    p.add_argument("--N", type=int, help="simulation grid nodes (default 128)")
    p.add_argument("--steps", type=int, help="simulation steps (default 100)")
    p.add_argument("--snap-every", dest="snap_every", type=int)
    p.add_argument("--no-sim", action="store_true", help="skip the simulation block")
    p.add_argument("--json", help="output path (default report.json)")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"drpkit: configuration error: {exc}", file=sys.stderr)
        return 2
    except (BlowUpError, NormGuardError, SingularSystemError) as exc:
        print(f"drpkit: numerical failure: {exc}", file=sys.stderr)
        return 3
    except DrpkitError as exc:
        print(f"drpkit: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
