"""Empirical front-speed and shape-persistence measurements."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import LostFrontError
from ..wave.ansatz import KinkSolution
from .grid import FieldState, Grid1D, mirrored_kink_profile

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _rising_crossings(values: np.ndarray, level: float) -> list[float]:
    """Interpolated positions (index units) where the field rises through the level."""
    n = values.shape[0]
    nxt = np.roll(values, -1)
    out = []
    for i in range(n):
        lo, hi = values[i], nxt[i]
        if lo < level <= hi and hi > lo:
            out.append(i + (level - lo) / (hi - lo))
    return out


def measure_speed(history: list[FieldState], level: float) -> float:
    """Front speed from the rising level crossing, in grid-index units per unit time.

    The rising crossing is tracked snapshot to snapshot (nearest periodic
    image to the previous position; the steepest one seeds the track),
    unwrapped, and fit against time by least squares.  The mirrored front
    of a kink crosses the level falling, so it is excluded by construction.
    Raises LostFrontError when a snapshot has no rising crossing.
    """
    if len(history) < 2:
        raise ValueError("need at least two snapshots to fit a speed")
    n = history[0].values.shape[0]
    times = []
    positions = []
    previous = None
    for snap in history:
        crossings = _rising_crossings(np.asarray(snap.values), level)
        if not crossings:
            raise LostFrontError(
                f"no rising crossing of level {level!r} at t={snap.t!r}"
            )
        if previous is None:
            slopes = []
            for pos in crossings:
                i = int(pos) % n
                slopes.append(snap.values[(i + 1) % n] - snap.values[i])
            pos = crossings[int(np.argmax(slopes))]
        else:
            # nearest periodic image of the previous position, kept unwrapped
            wrapped = previous % n
            deltas = [(c - wrapped + n / 2.0) % n - n / 2.0 for c in crossings]
            pos = previous + deltas[int(np.argmin(np.abs(deltas)))]
        previous = pos
        times.append(snap.t)
        positions.append(pos)
    slope, _ = np.polyfit(np.asarray(times), np.asarray(positions), 1)
    return float(slope)


@dataclass(frozen=True)
class PersistenceReport:
    """Best-fit shape error and shift of each snapshot against a kink template."""

    times: tuple[float, ...]
    shifts: tuple[float, ...]
    shape_errors: tuple[float, ...]


def _shape_error(values: np.ndarray, grid: Grid1D, sol: KinkSolution, shift: float, ac_norm: float) -> float:
    template = mirrored_kink_profile(grid, sol, shift=shift)
    return float(np.sqrt(np.sum((values - template) ** 2))) / ac_norm


def measure_persistence(
    history: list[FieldState], grid: Grid1D, sol: KinkSolution
) -> PersistenceReport:
    """How long the field keeps the injected kink shape.

    Per snapshot, minimizes ||u - kink(. - s)||_2 over the shift s (integer
    part by circular cross-correlation, fractional part by golden-section
    refinement over one cell each way).  Errors are normalized by the AC
    norm ||kink - V0||_2 of the unshifted template, so adding the same
    constant to the field and to V0 leaves them unchanged.
    """
    template = mirrored_kink_profile(grid, sol) - sol.V0
    ac_norm = float(np.sqrt(np.sum(template**2)))
    if ac_norm == 0.0:
        raise ValueError("constant kink template has no shape to match")
    spectrum_t = np.conj(np.fft.fft(template))
    times = []
    shifts = []
    errors = []
    for snap in history:
        values = np.asarray(snap.values)
        centered = values - np.mean(values)
        corr = np.fft.ifft(np.fft.fft(centered) * spectrum_t).real
        s0 = int(np.argmax(corr)) * grid.h
        lo, hi = s0 - grid.h, s0 + grid.h
        a, b = lo, hi
        c = b - _GOLDEN * (b - a)
        d = a + _GOLDEN * (b - a)
        fc = _shape_error(values, grid, sol, c, ac_norm)
        fd = _shape_error(values, grid, sol, d, ac_norm)
        for _ in range(48):
            if fc < fd:
                b, d, fd = d, c, fc
                c = b - _GOLDEN * (b - a)
                fc = _shape_error(values, grid, sol, c, ac_norm)
            else:
                a, c, fc = c, d, fd
                d = a + _GOLDEN * (b - a)
                fd = _shape_error(values, grid, sol, d, ac_norm)
        best_shift = (a + b) / 2.0
        times.append(float(snap.t))
        shifts.append(float(best_shift % grid.length))
        errors.append(_shape_error(values, grid, sol, best_shift, ac_norm))
    return PersistenceReport(
        times=tuple(times), shifts=tuple(shifts), shape_errors=tuple(errors)
    )
