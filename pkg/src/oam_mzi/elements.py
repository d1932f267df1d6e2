"""Optical-element operators: Dove prism, wave plate, beam splitter, mirror.

The Dove prism flips the transverse profile about its base plane; rotated by
alpha it acts as |l> -> exp(i2l*alpha)|-l>.  Its polarization response
diag(d_x, d_y) comes from two Fresnel refractions and one total internal
reflection.  Together with a wave plate diag(w_x, w_y) the rotated pair acts
as D(alpha) (x) [a*I + b*P_HW(alpha)] where P_HW is the half-wave operator.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .states import Basis, PhotonState, PolVector, SQRT2, convert_basis

_TOL = 1e-12


def rotation(theta: float) -> np.ndarray:
    """Real rotation matrix acting on XY polarization components."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


@dataclass(frozen=True)
class ElementParams:
    """Prism response d, wave-plate response w, both diagonal in XY."""

    d_x: complex = 1.0
    d_y: complex = 1.0
    w_x: complex = 1.0
    w_y: complex = -1.0

    def __post_init__(self):
        for w in (self.w_x, self.w_y):
            if abs(abs(w) - 1.0) > _TOL:
                raise ValueError("wave-plate factors must be unimodular")
        for d in (self.d_x, self.d_y):
            if abs(d) > 1.0 + _TOL:
                raise ValueError("prism response magnitudes cannot exceed 1")


def ideal_params() -> ElementParams:
    """Lossless prism plus wave plate combining to a pure half-wave action."""
    return ElementParams(1.0, 1.0, 1.0, -1.0)


@dataclass(frozen=True)
class PrismGeometry:
    """Dove prism geometry: entrance-face and base incidence angles, radians."""

    refractive_index: float = 1.5168
    face_incidence_angle: float = math.radians(45.0)
    base_incidence_angle: float = math.radians(67.5)

    def __post_init__(self):
        n = self.refractive_index
        if not n > 1.0:
            raise ValueError("refractive index must exceed 1")
        if not 0.0 < self.face_incidence_angle < math.pi / 2:
            raise ValueError("face incidence angle must lie in (0, pi/2)")
        if math.sin(self.base_incidence_angle) * n <= 1.0:
            raise ValueError(
                "base incidence below the critical angle: no total internal "
                "reflection, prism model invalid"
            )


def fresnel_dove(geom: PrismGeometry) -> tuple[complex, complex]:
    """Polarization response (d_x, d_y) of the prism from Fresnel formulas.

    x is parallel to the prism base, so it is s-polarized at every internal
    surface; y is p-polarized.  d = t(entry) * r(base TIR) * t(exit).
    """
    n = geom.refractive_index
    th1 = geom.face_incidence_angle
    th2 = math.asin(math.sin(th1) / n)
    thb = geom.base_incidence_angle

    ts_in = 2 * math.cos(th1) / (math.cos(th1) + n * math.cos(th2))
    tp_in = 2 * math.cos(th1) / (n * math.cos(th1) + math.cos(th2))
    ts_out = 2 * n * math.cos(th2) / (n * math.cos(th2) + math.cos(th1))
    tp_out = 2 * n * math.cos(th2) / (math.cos(th2) + n * math.cos(th1))

    # Total internal reflection: unimodular coefficients with s/p phases.
    g = math.sqrt((n * math.sin(thb)) ** 2 - 1.0)
    r_s = (n * math.cos(thb) - 1j * g) / (n * math.cos(thb) + 1j * g)
    r_p = (math.cos(thb) - 1j * n * g) / (math.cos(thb) + 1j * n * g)

    return ts_in * r_s * ts_out, tp_in * r_p * tp_out


class Decomposition(NamedTuple):
    a: complex
    b: complex
    scale: float  # discarded common amplitude scale (loss factor)


def decompose_joint(params: ElementParams) -> Decomposition:
    """Split diag(w_x d_x, w_y d_y) into a*I + b*P_HW with |a|^2+|b|^2 = 1."""
    u = params.w_x * params.d_x
    v = params.w_y * params.d_y
    a_raw = (u + v) / 2
    b_raw = (u - v) / 2
    scale = math.hypot(abs(a_raw), abs(b_raw))
    if scale == 0.0:
        raise ValueError("both prism responses vanish: decomposition undefined")
    return Decomposition(a_raw / scale, b_raw / scale, scale)


class WaveplateChoice(NamedTuple):
    w_x: complex
    w_y: complex
    ratio: float | None  # |b/a|; None when unbounded
    unbounded: bool


def optimize_waveplate(d_x: complex, d_y: complex) -> WaveplateChoice:
    """Unimodular wave-plate factors minimizing |a| for the given prism.

    Sets arg(w_x d_x) - arg(w_y d_y) = pi, giving
    |b/a| = (|d_x| + |d_y|) / ||d_x| - |d_y||.
    """
    if d_x == 0 or d_y == 0:
        raise ValueError("prism responses must be nonzero")
    w_x = cmath.exp(-1j * cmath.phase(d_x))
    w_y = -cmath.exp(-1j * cmath.phase(d_y))
    num = abs(d_x) + abs(d_y)
    den = abs(abs(d_x) - abs(d_y))
    if den == 0.0:
        return WaveplateChoice(w_x, w_y, None, True)
    return WaveplateChoice(w_x, w_y, num / den, False)


def hwp_rotated(theta: float) -> np.ndarray:
    """Half-wave plate rotated by theta: [[cos2t, sin2t], [sin2t, -cos2t]]."""
    return _joint_matrix(theta, None, "ideal")


def _joint_matrix(alpha: float, params: ElementParams | None, mode: str) -> np.ndarray:
    if mode == "ideal":
        m = np.diag([1.0 + 0j, -1.0 + 0j])
    elif mode == "exact":
        m = np.diag([params.w_x * params.d_x, params.w_y * params.d_y])
    else:
        raise ValueError(f"unknown mode {mode!r}")
    r = rotation(alpha)
    return r @ m @ r.T


def dove_apply(alpha: float, state: PhotonState) -> PhotonState:
    """Rotated Dove prism on the profile: |l> -> exp(i2l*alpha)|-l>."""
    out = {}
    for (path, l), v in state.terms.items():
        out[(path, -l)] = v.scaled(cmath.exp(2j * l * alpha))
    return PhotonState(out)


def joint_apply(
    alpha: float,
    params: ElementParams,
    state: PhotonState,
    mode: str = "ideal",
) -> PhotonState:
    """Rotated Dove prism plus wave plate, termwise.

    Ideal mode forces the pure half-wave action (a=0, b=1); exact mode keeps
    the physical sub-unitary matrix, so output norm may fall below 1.
    """
    m = _joint_matrix(alpha, params, mode)
    out = {}
    for (path, l), v in state.terms.items():
        phase = cmath.exp(2j * l * alpha)
        xy = m @ v.xy_components() * phase
        key = (path, -l)
        if key in out:
            prev = out[key].components()
            xy = xy + prev
        out[key] = PolVector(Basis.XY, complex(xy[0]), complex(xy[1]))
    return PhotonState(out)


def beamsplitter_combine(
    arm_a: PhotonState, arm_b: PhotonState, port: str
) -> PhotonState:
    """50/50 recombination: port '+' gets (A+B)/sqrt2, port '-' gets (A-B)/sqrt2."""
    if port not in ("+", "-"):
        raise ValueError("port must be '+' or '-'")
    sign = 1.0 if port == "+" else -1.0
    acc: dict[int, np.ndarray] = {}
    for state, factor in ((arm_a, 1.0), (arm_b, sign)):
        for (_path, l), v in state.terms.items():
            xy = v.xy_components() * (factor / SQRT2)
            if l in acc:
                acc[l] = acc[l] + xy
            else:
                acc[l] = xy
    return PhotonState(
        {
            ("single", l): PolVector(Basis.XY, complex(xy[0]), complex(xy[1]))
            for l, xy in acc.items()
        }
    )


def mirror_apply(state: PhotonState) -> PhotonState:
    """Idealized plane mirror: |l> -> |-l>, R <-> L, global phase pi."""
    out = {}
    for (path, l), v in state.terms.items():
        rl = convert_basis(v, Basis.RL)
        out[(path, -l)] = PolVector(Basis.RL, -rl.c1, -rl.c0)
    return PhotonState(out)
