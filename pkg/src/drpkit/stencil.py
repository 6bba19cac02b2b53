"""Stencil weights that minimize the band-integrated wavenumber error.

A centered antisymmetric stencil of half-width ``m`` carries weights
``gamma_1 .. gamma_m``; ``gamma_0 = 0`` and ``gamma_{-k} = -gamma_k`` are
implied by the representation, so the full weight sum vanishes exactly.
Its reduced Fourier symbol is

    lambda_bar_h(zeta) = 2 * sum_k gamma_k * sin(k * zeta),

and the weights are chosen so that the squared mismatch against the exact
symbol ``zeta``, integrated over the resolved band ``|zeta| <= pi/2``
(wavelengths of four cells and longer), is minimal.  The minimizer solves a
small dense normal-equation system whose entries have closed forms built
from

    S(p) = integral_0^{pi/2} cos(p z) dz,
    b(i) = integral_0^{pi/2} z sin(i z) dz.

Closed forms are used for assembly; Gauss-Legendre quadrature is used only
to validate the objective value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SingularSystemError

#: Largest supported half-width.  Conditioning of the normal equations grows
#: with m and nothing at desk scale needs wider stencils.
MAX_HALF_WIDTH = 16

_BAND_EDGE = math.pi / 2.0
_COND_LIMIT = 1e12

# sin(p*pi/2) and cos(p*pi/2) for integer p, computed exactly.
_SIN_QUARTER = (0.0, 1.0, 0.0, -1.0)
_COS_QUARTER = (1.0, 0.0, -1.0, 0.0)


def _sin_half_pi(p: int) -> float:
    return _SIN_QUARTER[p % 4]


def _cos_half_pi(p: int) -> float:
    return _COS_QUARTER[p % 4]


def cosine_band_integral(p: int) -> float:
    """S(p): integral of cos(p*z) over the half band [0, pi/2]."""
    if p == 0:
        return _BAND_EDGE
    return _sin_half_pi(p) / p


def ramp_sine_moment(i: int) -> float:
    """b(i): integral of z*sin(i*z) over the half band [0, pi/2]."""
    return _sin_half_pi(i) / (i * i) - _BAND_EDGE * _cos_half_pi(i) / i


@dataclass(frozen=True)
class StencilCoefficients:
    """Antisymmetric first-derivative weights gamma_1..gamma_m.

    Only the positive-offset weights are stored; the zero and negative
    offsets are implied, which makes the antisymmetry identities hold by
    construction rather than by numerical accident.
    """

    m: int
    gamma: tuple[float, ...]

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"half-width m must be a positive integer, got {self.m!r}")
        gamma = tuple(float(g) for g in self.gamma)
        if len(gamma) != self.m:
            raise ValueError(f"expected {self.m} weights, got {len(gamma)}")
        if not all(math.isfinite(g) for g in gamma):
            raise ValueError("stencil weights must be finite")
        object.__setattr__(self, "gamma", gamma)

    @property
    def gamma_array(self) -> np.ndarray:
        return np.asarray(self.gamma, dtype=float)

    def full_weights(self) -> np.ndarray:
        """All 2m+1 weights gamma_{-m}..gamma_m in offset order."""
        pos = self.gamma_array
        return np.concatenate([-pos[::-1], [0.0], pos])

    def index_moment(self, r: int) -> float:
        """Sum of k^r * gamma_k over the full stencil.

        Vanishes identically for even r (antisymmetry); for odd r it equals
        twice the one-sided sum, which is what is returned.
        """
        if r % 2 == 0:
            return 0.0
        ks = np.arange(1, self.m + 1, dtype=float)
        return 2.0 * float(self.gamma_array @ ks**r)


@dataclass(frozen=True)
class DispersionSample:
    """One point of the symbol diagnostic: reduced wavenumber, its image, their gap."""

    zeta: float
    lambda_bar_h: float
    error: float


def assemble_normal_equations(m: int) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form normal-equation system M g = b for the band fit.

    M[i, k] = S(k - i) - S(k + i) and b[i] = b(i) with 1-based i, k.
    """
    idx = range(1, m + 1)
    M = np.array(
        [[cosine_band_integral(k - i) - cosine_band_integral(k + i) for k in idx] for i in idx]
    )
    b = np.array([ramp_sine_moment(i) for i in idx])
    return M, b


def optimize_coefficients(m: int) -> StencilCoefficients:
    """Weights minimizing the integrated band error for half-width m.

    Solves the closed-form normal equations by direct factorization with
    partial pivoting.  Raises SingularSystemError (with the condition
    estimate) if the system is numerically singular, and ValueError for
    m outside [1, MAX_HALF_WIDTH].
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"half-width m must be a positive integer, got {m!r}")
    if m > MAX_HALF_WIDTH:
        raise ValueError(f"half-width m={m} exceeds the supported maximum {MAX_HALF_WIDTH}")
    M, b = assemble_normal_equations(m)
    condition = float(np.linalg.cond(M))
    if not math.isfinite(condition) or condition > _COND_LIMIT:
        raise SingularSystemError(
            f"normal-equation system for m={m} is near-singular "
            f"(condition estimate {condition:.3e})",
            condition=condition,
        )
    gamma = np.linalg.solve(M, b)
    return StencilCoefficients(m=m, gamma=tuple(float(g) for g in gamma))


def effective_wavenumber(coeffs: StencilCoefficients, zeta):
    """Reduced symbol lambda_bar_h = 2 sum_k gamma_k sin(k zeta).

    Odd in zeta by construction (the sign is factored out before the sine
    sum, so negating zeta negates the result exactly).  Accepts scalars or
    arrays.
    """
    z = np.asarray(zeta, dtype=float)
    sign = np.sign(z)
    az = np.abs(z)
    ks = np.arange(1, coeffs.m + 1, dtype=float)
    val = 2.0 * (np.sin(az[..., None] * ks) @ coeffs.gamma_array)
    out = sign * val
    if np.isscalar(zeta) or z.ndim == 0:
        return float(out)
    return out


def _band_quadrature() -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(64)
    half = _BAND_EDGE / 2.0
    return half * (nodes + 1.0), half * weights


_QUAD_NODES, _QUAD_WEIGHTS = _band_quadrature()


def integrated_error(coeffs: StencilCoefficients) -> float:
    """Band-integrated squared symbol mismatch, by 64-node Gauss-Legendre.

    E = 2 * integral_0^{pi/2} (zeta - lambda_bar_h(zeta))^2 dzeta.  The
    integrand is entire, so the fixed rule is exact to well below 1e-12.
    """
    mismatch = _QUAD_NODES - effective_wavenumber(coeffs, _QUAD_NODES)
    return 2.0 * float(_QUAD_WEIGHTS @ mismatch**2)


def integrated_error_closed_form(coeffs: StencilCoefficients) -> float:
    """Same objective through the closed-form expansion E = pi^3/12 - 8 g.b + 4 g.M.g."""
    M, b = assemble_normal_equations(coeffs.m)
    g = coeffs.gamma_array
    return math.pi**3 / 12.0 - 8.0 * float(g @ b) + 4.0 * float(g @ M @ g)


def dispersion_samples(coeffs: StencilCoefficients, n: int) -> list[DispersionSample]:
    """Uniform symbol samples over the full band [-pi/2, pi/2].

    For odd n the grid is built by mirroring the positive half, so zero and
    the band edges are hit exactly and the sample set is exactly symmetric.
    """
    if n < 2:
        raise ValueError("need at least two samples")
    if n % 2:
        half = np.linspace(0.0, _BAND_EDGE, (n + 1) // 2)
        zetas = np.concatenate([-half[:0:-1], half])
    else:
        zetas = np.linspace(-_BAND_EDGE, _BAND_EDGE, n)
    lams = effective_wavenumber(coeffs, zetas)
    return [
        DispersionSample(zeta=float(z), lambda_bar_h=float(l), error=float(z - l))
        for z, l in zip(zetas, lams)
    ]
