"""Full Mach-Zehnder pipeline with rotated Dove prism + wave plate per arm.

BS1 splits the input |l> (x) (c1|R> + c2|L>) equally; the joint element is
rotated by +alpha/4 in arm A and -alpha/4 in arm B; BS2 recombines; each
output port is measured in the +-45 degree linear basis, giving four
detection events (port, polarization).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import elements
from .states import (
    SQRT2,
    Basis,
    L_MAX,
    PhotonState,
    PolVector,
    convert_basis,
    inner_product,
    KET_P45,
)

_TOL = 1e-12
_INV_SQRT2 = 1.0 / SQRT2


@dataclass(frozen=True)
class MZIConfig:
    """One interferometer run: OAM index, RL input amplitudes, rotation alpha."""

    l: int
    c1: complex = _INV_SQRT2
    c2: complex = _INV_SQRT2
    alpha: float = 0.0
    element_params: elements.ElementParams = field(
        default_factory=elements.ideal_params
    )
    mode: str = "ideal"
    mirrors: bool = False

    def __post_init__(self):
        if abs(self.l) > L_MAX:
            raise ValueError(f"|l| exceeds cap {L_MAX}")
        if self.mode not in ("ideal", "exact"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not math.isfinite(self.alpha):
            raise ValueError("alpha must be finite")
        nrm = abs(self.c1) ** 2 + abs(self.c2) ** 2
        if abs(nrm - 1.0) > _TOL:
            raise ValueError(
                f"input amplitudes must satisfy |c1|^2+|c2|^2=1, got {nrm!r}"
            )

    def input_polarization(self) -> PolVector:
        return PolVector(Basis.RL, self.c1, self.c2)


@dataclass(frozen=True)
class OutcomeDistribution:
    """Probabilities of the four detection events plus the exact-mode loss."""

    p_plus_p45: float
    p_plus_m45: float
    p_minus_p45: float
    p_minus_m45: float
    loss: float = 0.0

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.p_plus_p45, self.p_plus_m45, self.p_minus_p45, self.p_minus_m45)

    def total(self) -> float:
        return sum(self.as_tuple()) + self.loss


@dataclass(frozen=True)
class ArmStates:
    """Per-arm polarization just before BS2 and the arm-common OAM phases.

    The Dove flip contributes exp(+-i*l*alpha/2) per arm; these phases are
    kept separately because the polarization states alone do not produce the
    interference pattern.
    """

    psi_a: PolVector
    psi_b: PolVector
    phase_a: complex
    phase_b: complex


def run(config: MZIConfig) -> tuple[OutcomeDistribution, ArmStates]:
    """Propagate one photon through the interferometer."""
    psi = config.input_polarization()
    split = psi.scaled(_INV_SQRT2)
    arm_a = PhotonState({("A", config.l): split})
    arm_b = PhotonState({("B", config.l): split})

    arm_a = elements.joint_apply(
        config.alpha / 4, config.element_params, arm_a, config.mode
    )
    arm_b = elements.joint_apply(
        -config.alpha / 4, config.element_params, arm_b, config.mode
    )
    if config.mirrors:
        arm_a = elements.mirror_apply(arm_a)
        arm_b = elements.mirror_apply(arm_b)

    port_plus = elements.beamsplitter_combine(arm_a, arm_b, "+")
    port_minus = elements.beamsplitter_combine(arm_a, arm_b, "-")

    probs = []
    for port_state in (port_plus, port_minus):
        p45 = m45 = 0.0
        for v in port_state.terms.values():
            d = convert_basis(v, Basis.DIAG)
            p45 += abs(d.c0) ** 2
            m45 += abs(d.c1) ** 2
        probs.extend((p45, m45))

    if config.mode == "ideal":
        loss = 0.0
    else:
        loss = max(0.0, 1.0 - sum(probs))
    dist = OutcomeDistribution(*probs, loss=loss)

    psi_xy = psi.xy_components()
    m_a = elements.hwp_rotated(config.alpha / 4) @ psi_xy
    m_b = elements.hwp_rotated(-config.alpha / 4) @ psi_xy
    arms = ArmStates(
        psi_a=PolVector(Basis.XY, complex(m_a[0]), complex(m_a[1])),
        psi_b=PolVector(Basis.XY, complex(m_b[0]), complex(m_b[1])),
        phase_a=cmath.exp(1j * config.l * config.alpha / 2),
        phase_b=cmath.exp(-1j * config.l * config.alpha / 2),
    )
    return dist, arms


def p_plus(config: MZIConfig) -> float:
    """Total detection probability at the (+) port, any polarization."""
    if config.mode != "ideal":
        raise ValueError("p_plus is defined for ideal mode")
    dist, _ = run(config)
    return dist.p_plus_p45 + dist.p_plus_m45


def p_plus_sweep(l: int, c1: complex, c2: complex, alphas) -> np.ndarray:
    """Vectorized pipeline: the same operator sequence as run(), batched over alpha."""
    alphas = np.asarray(alphas, dtype=float)
    psi = PolVector(Basis.RL, c1, c2).xy_components()
    t = alphas / 4
    c2t, s2t = np.cos(2 * t), np.sin(2 * t)
    # Half-wave action at +-alpha/4 on the XY components.
    a0 = c2t * psi[0] + s2t * psi[1]
    a1 = s2t * psi[0] - c2t * psi[1]
    b0 = c2t * psi[0] - s2t * psi[1]
    b1 = -s2t * psi[0] - c2t * psi[1]
    # Arm-common Dove phases; the two 1/sqrt2 splitter factors give 1/2.
    pa = np.exp(1j * l * alphas / 2)
    pb = np.conj(pa)
    plus0 = (pa * a0 + pb * b0) / 2
    plus1 = (pa * a1 + pb * b1) / 2
    return np.abs(plus0) ** 2 + np.abs(plus1) ** 2


def which_way_guess(event: tuple[str, str]) -> str:
    """Guess the arm from the detected polarization, ignoring the port."""
    _port, pol = event
    if pol == "+45":
        return "A"
    if pol == "-45":
        return "B"
    raise ValueError(f"unknown polarization outcome {pol!r}")


def likelihood(config: MZIConfig) -> float:
    """Probability that the +-45 guessing rule names the arm correctly.

    Equals |<+45|psi_A>|^2; coincides with |<-45|psi_B>|^2 whenever the
    relative phase of (c1, c2) is real.
    """
    if config.mode != "ideal":
        raise ValueError("likelihood is defined for ideal mode")
    _, arms = run(config)
    return abs(inner_product(KET_P45, arms.psi_a)) ** 2
