"""Pure NumPy stencil kernel, same contract and FP order as the compiled one."""

from __future__ import annotations

import numpy as np


def step_many(u: np.ndarray, gamma: np.ndarray, coef: float, n_steps: int) -> np.ndarray:
    """Advance the periodic field n_steps times; returns a new array.

    u_new[i] = u[i] + coef * sum_k gamma[k-1] * (u[i+k] - u[i-k]) with
    periodic indexing; coef is tau/h.
    """
    u = np.array(u, dtype=np.float64, copy=True)
    gamma = np.asarray(gamma, dtype=np.float64)
    if u.shape[0] <= 2 * gamma.shape[0]:
        raise ValueError("grid too small for the stencil half-width")
    for _ in range(n_steps):
        acc = np.zeros_like(u)
        for k in range(1, gamma.shape[0] + 1):
            acc += gamma[k - 1] * (np.roll(u, -k) - np.roll(u, k))
        u = u + coef * acc
    return u
