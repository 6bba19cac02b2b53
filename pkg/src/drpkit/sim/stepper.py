"""Time stepping for the explicit stencil scheme, with a spectral oracle.

The scheme is weakly unstable (|g| >= 1 for every mode), so long runs are
bounded by a norm-growth guard instead of pretending stability.  The hot
kernel is compiled when the extension built; a NumPy fallback with the
same floating-point operation order is selected at import otherwise, so
results are identical either way.
"""

from __future__ import annotations

import math
import os

import numpy as np

from ..errors import BlowUpError, NormGuardError
from ..modeq import SchemeParams, discrete_symbol
from ..stencil import StencilCoefficients
from . import _fallback
from .grid import FieldState, Grid1D

if os.environ.get("DRPKIT_FORCE_FALLBACK"):
    _kernel_step_many = None
else:
    try:
        from ._kernels import step_many as _kernel_step_many
    except ImportError:
        _kernel_step_many = None

COMPILED_AVAILABLE = _kernel_step_many is not None
KERNEL_BACKEND = "compiled" if COMPILED_AVAILABLE else "numpy"
step_many = _kernel_step_many if COMPILED_AVAILABLE else _fallback.step_many

#: Abort threshold for the L2 growth guard.
NORM_GUARD_FACTOR = 1e3


def _check_compatible(n_nodes: int, coeffs: StencilCoefficients):
    if n_nodes <= 2 * coeffs.m:
        raise ValueError(
            f"grid of {n_nodes} nodes cannot carry a half-width {coeffs.m} stencil "
            "without self-wrap"
        )


def step(state: FieldState, coeffs: StencilCoefficients, params: SchemeParams) -> FieldState:
    """One explicit update u_i <- u_i + (tau/h) * sum_k gamma_k u_{i+k} (periodic).

    Returns a new state with t advanced by tau; raises BlowUpError if any
    value stops being finite.
    """
    _check_compatible(state.values.shape[0], coeffs)
    new_values = step_many(state.values, coeffs.gamma_array, params.tau / params.h, 1)
    if not np.all(np.isfinite(new_values)):
        raise BlowUpError(
            f"field blew up at step {state.step_count + 1}", step_count=state.step_count + 1
        )
    return FieldState(values=new_values, t=state.t + params.tau, step_count=state.step_count + 1)


def spectral_oracle(
    initial: FieldState,
    coeffs: StencilCoefficients,
    params: SchemeParams,
    n_steps: int,
) -> FieldState:
    """Exact evolution: per-mode multiplication by g(zeta_p)^n_steps.

    Algebraically identical to n_steps applications of ``step``; serves as
    the independent correctness oracle for the stepping kernels.
    """
    if n_steps < 0:
        raise ValueError("n_steps must be nonnegative")
    _check_compatible(initial.values.shape[0], coeffs)
    if n_steps == 0:
        return initial
    n = initial.values.shape[0]
    zetas = 2.0 * math.pi * np.arange(n) / n
    g = discrete_symbol(coeffs, params, zetas)
    spectrum = np.fft.fft(initial.values) * g**n_steps
    values = np.fft.ifft(spectrum).real
    return FieldState(
        values=values,
        t=initial.t + n_steps * params.tau,
        step_count=initial.step_count + n_steps,
    )


def horizon_steps(grid: Grid1D, speed: float, params: SchemeParams) -> float:
    """Step budget before the two mirrored fronts can meet: N h / (4 |v| tau)."""
    if speed == 0.0:
        return math.inf
    return grid.N * grid.h / (4.0 * abs(speed) * params.tau)


def run(
    initial: FieldState,
    coeffs: StencilCoefficients,
    params: SchemeParams,
    n_steps: int,
    snap_every: int = 1,
    use_oracle: bool = False,
    norm_guard: float = NORM_GUARD_FACTOR,
) -> list[FieldState]:
    """Advance the field and collect snapshots every ``snap_every`` steps.

    The initial state is snapshot zero.  Aborts with NormGuardError once
    the L2 norm exceeds ``norm_guard`` times its initial value, and with
    BlowUpError on non-finite values.  With ``use_oracle`` every snapshot
    is computed spectrally from the initial state instead of by stepping.
    """
    if snap_every < 1:
        raise ValueError("snap_every must be at least 1")
    _check_compatible(initial.values.shape[0], coeffs)
    snapshots = [initial]
    initial_norm = initial.l2_norm()
    guard_limit = norm_guard * initial_norm if initial_norm > 0.0 else math.inf
    coef = params.tau / params.h
    current = initial.values
    done = 0
    while done < n_steps:
        chunk = min(snap_every, n_steps - done)
        done += chunk
        if use_oracle:
            state = spectral_oracle(initial, coeffs, params, done)
        else:
            current = step_many(current, coeffs.gamma_array, coef, chunk)
            if not np.all(np.isfinite(current)):
                raise BlowUpError(f"field blew up by step {done}", step_count=done)
            state = FieldState(
                values=current,
                t=initial.t + done * params.tau,
                step_count=initial.step_count + done,
            )
        if state.l2_norm() > guard_limit:
            raise NormGuardError(
                f"L2 norm exceeded {norm_guard:g} x initial by step {done}", step_count=done
            )
        snapshots.append(state)
    return snapshots
