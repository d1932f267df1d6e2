"""Transverse Laguerre-Gaussian / Bessel-Gaussian fields with circular polarization.

The instantaneous electric field of a circularly polarized vortex beam,
E = Re[(x_hat + i*s*y_hat)/sqrt2 * u(r,phi)] at t = 0 with u carrying the
exp(i*l*phi) winding, has |l+s|-fold rotational symmetry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate, special

#: symmetry_order() result for l + s = 0 (pattern invariant under any rotation)
CONTINUOUS_SYMMETRY = 0

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class BeamMode:
    """A fixed-plane transverse mode carrying topological charge l."""

    family: str  # "lg" or "bg"
    l: int
    p: int = 0
    waist: float = 1.0
    k_r: float | None = None

    def __post_init__(self):
        if self.family not in ("lg", "bg"):
            raise ValueError("family must be 'lg' or 'bg'")
        if self.waist <= 0:
            raise ValueError("waist must be positive")
        if self.p < 0:
            raise ValueError("radial index p must be >= 0")
        if self.family == "bg" and not (self.k_r and self.k_r > 0):
            raise ValueError("Bessel-Gaussian mode requires k_r > 0")


@dataclass(frozen=True)
class FieldGrid:
    """Square, centered grid of real field components at t = 0 (waist units)."""

    extent: float
    resolution: int
    x: np.ndarray
    y: np.ndarray
    e_x: np.ndarray
    e_y: np.ndarray


@lru_cache(maxsize=None)
def _norm_const(mode: BeamMode) -> float:
    """Amplitude constant giving unit total power over the transverse plane."""
    w = mode.waist
    if mode.family == "lg":
        return math.sqrt(
            2.0 * math.factorial(mode.p)
            / (math.pi * math.factorial(mode.p + abs(mode.l)))
        ) / w

    def integrand(r):
        return special.jv(mode.l, mode.k_r * r) ** 2 * np.exp(-2 * r**2 / w**2) * r

    power, _ = integrate.quad(integrand, 0.0, np.inf, limit=200)
    return 1.0 / math.sqrt(2.0 * math.pi * power)


def scalar_amplitude(mode: BeamMode, r, phi):
    """Complex scalar amplitude u(r, phi) of the mode, unit total power."""
    r = np.asarray(r, dtype=float)
    phi = np.asarray(phi, dtype=float)
    w = mode.waist
    c = _norm_const(mode)
    if mode.family == "lg":
        x = 2 * r**2 / w**2
        radial = (
            (math.sqrt(2.0) * r / w) ** abs(mode.l)
            * special.eval_genlaguerre(mode.p, abs(mode.l), x)
            * np.exp(-(r**2) / w**2)
        )
    else:
        radial = special.jv(mode.l, mode.k_r * r) * np.exp(-(r**2) / w**2)
    return c * radial * np.exp(1j * mode.l * phi)


def vector_field_at(mode: BeamMode, s: int, x, y) -> tuple[np.ndarray, np.ndarray]:
    """Real (E_x, E_y) at t = 0 for spin s = +1 (left) or -1 (right) circular."""
    if s not in (1, -1):
        raise ValueError("spin must be +1 or -1")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    u = scalar_amplitude(mode, np.hypot(x, y), np.arctan2(y, x))
    # E = Re[(x_hat + i*s*y_hat)/sqrt2 * u]
    return np.real(u) * _INV_SQRT2, -s * np.imag(u) * _INV_SQRT2


def transverse_field(
    mode: BeamMode, s: int, extent: float = 3.0, resolution: int = 32
) -> FieldGrid:
    """Evaluate the vector field on a centered square grid (waist units)."""
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    if extent <= 0:
        raise ValueError("extent must be positive")
    axis = np.linspace(-extent, extent, resolution)
    x, y = np.meshgrid(axis, axis)
    e_x, e_y = vector_field_at(mode, s, x, y)
    return FieldGrid(extent=extent, resolution=resolution, x=x, y=y, e_x=e_x, e_y=e_y)


def symmetry_order(l: int, s: int) -> int:
    """Rotational symmetry order |l+s|; 0 flags continuous symmetry."""
    if s not in (1, -1):
        raise ValueError("spin must be +1 or -1")
    return abs(l + s) if l + s != 0 else CONTINUOUS_SYMMETRY
