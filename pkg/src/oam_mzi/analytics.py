"""Closed-form interferometry quantities and photon-budget calculators.

The two-wavenumber (TIE) formulas and their photon analog are linked by the
correspondence k1*L <-> (l-1)*alpha, k2*L <-> (l+1)*alpha: the circular
polarization components acquire spatial phases exp[i2(l-+1)*(alpha/4)] in one
arm and the conjugate in the other, so the photon quantities are the TIE
formulas evaluated at k1 = l-1, k2 = l+1, L = alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_TOL = 1e-12

#: Returned by correspondence() for l = 1 (diverging wavenumber ratio).
KAPPA_UNBOUNDED = math.inf


@dataclass(frozen=True)
class TIEState:
    """Superposition of two internal states riding different wavenumbers."""

    k1: float
    k2: float
    c1: complex
    c2: complex

    def __post_init__(self):
        nrm = abs(self.c1) ** 2 + abs(self.c2) ** 2
        if abs(nrm - 1.0) > _TOL:
            raise ValueError("|c1|^2 + |c2|^2 must equal 1")


@dataclass(frozen=True)
class DualityPoint:
    """A (distinguishability, visibility) pair on or under the duality circle."""

    d: float
    v: float

    def __post_init__(self):
        if self.d < 0 or self.v < 0 or self.d**2 + self.v**2 > 1.0 + _TOL:
            raise ValueError("require d, v >= 0 and d^2 + v^2 <= 1")


@dataclass(frozen=True)
class BudgetReport:
    """Mean photon number to resolve a phase shift, and the which-way cost.

    n_photons is set by the unit signal-to-noise criterion: the mean count
    shift produced by the phase displacement equals one binomial standard
    deviation.  diverges flags a zero-slope (or zero-visibility) operating
    point instead of reporting a raw infinity.
    """

    n_photons: float | None
    expected_wrong: float | None
    operating_alpha: float
    phase_shift: float
    diverges: bool = False
    criterion: str = "unit-SNR"

    def as_dict(self) -> dict:
        return {
            "n_photons": self.n_photons,
            "expected_wrong": self.expected_wrong,
            "operating_alpha": self.operating_alpha,
            "phase_shift": self.phase_shift,
            "diverges": self.diverges,
            "criterion": self.criterion,
        }


def tie_p_plus(s: TIEState, length):
    """Detection probability at the (+) port after traversing length L."""
    w1, w2 = abs(s.c1) ** 2, abs(s.c2) ** 2
    return 0.5 + (w1 * np.cos(s.k1 * length) + w2 * np.cos(s.k2 * length)) / 2


def tie_slope(s: TIEState, length):
    """dP+/dL, analytic."""
    w1, w2 = abs(s.c1) ** 2, abs(s.c2) ** 2
    return -(w1 * s.k1 * np.sin(s.k1 * length) + w2 * s.k2 * np.sin(s.k2 * length)) / 2


def tie_sensitivity(s: TIEState, length):
    """Normalized fringe slope (2/k_max)|dP+/dL|."""
    k_max = max(abs(s.k1), abs(s.k2))
    if k_max == 0.0:
        raise ValueError("k1 = k2 = 0: no fringe scale, sensitivity undefined")
    return (2.0 / k_max) * np.abs(tie_slope(s, length))


def tie_distinguishability(s: TIEState, length):
    """Which-way distinguishability read from the internal state."""
    return 2 * abs(s.c1) * abs(s.c2) * np.abs(np.sin((s.k2 - s.k1) * length / 2))


def _photon_tie(l: int, c1: complex, c2: complex) -> TIEState:
    if l < 0:
        raise ValueError("photon formulas require l >= 0")
    return TIEState(float(l - 1), float(l + 1), c1, c2)


def photon_formulas(l: int, c1: complex, c2: complex, alpha):
    """(P+, S, D, likelihood) for a photon with OAM l and RL amplitudes c1, c2."""
    s = _photon_tie(l, c1, c2)
    p = tie_p_plus(s, alpha)
    sens = tie_sensitivity(s, alpha)
    d = tie_distinguishability(s, alpha)
    lik = (1.0 + d) / 2.0
    return p, sens, d, lik


def p_plus_slope(l: int, c1: complex, c2: complex, alpha):
    """dP+/dalpha for the photon pattern."""
    return tie_slope(_photon_tie(l, c1, c2), alpha)


def correspondence(l: int) -> float:
    """Effective wavenumber ratio kappa = (l+1)/(l-1); unbounded at l = 1."""
    if l < 0:
        raise ValueError("correspondence requires l >= 0")
    if l == 1:
        return KAPPA_UNBOUNDED
    return (l + 1) / (l - 1)


def standard_bound_comparator(d: float, phase_shift: float) -> BudgetReport:
    """Photon budget of a sinusoidal interferometer saturating D^2 + V^2 = 1.

    Operates the fringe P = (1 + V cos(phi))/2 at its maximum-slope point
    phi = pi/2 and applies the unit-SNR criterion.
    """
    if not 0.0 <= d <= 1.0:
        raise ValueError("distinguishability must lie in [0, 1]")
    if not phase_shift > 0:
        raise ValueError("phase shift must be positive")
    operating = math.pi / 2
    v_sq = 1.0 - d * d
    if v_sq <= 0.0:
        return BudgetReport(None, None, operating, phase_shift, diverges=True)
    n = 1.0 / (v_sq * phase_shift**2)
    wrong = n * (1.0 - d) / 2.0
    return BudgetReport(n, wrong, operating, phase_shift)


def saturated_point(d: float) -> DualityPoint:
    return DualityPoint(d, math.sqrt(max(0.0, 1.0 - d * d)))


def photon_budget(
    l: int,
    c1: complex,
    c2: complex,
    operating_alpha: float,
    phase_shift: float,
) -> BudgetReport:
    """Photons needed to resolve the shift (l+1)*delta_alpha = phase_shift.

    expected_wrong counts photons whose +-45 which-way guess fails at the
    shifted operating point.
    """
    if not phase_shift > 0:
        raise ValueError("phase shift must be positive")
    delta_alpha = phase_shift / (l + 1)
    p, _, _, _ = photon_formulas(l, c1, c2, operating_alpha)
    slope = p_plus_slope(l, c1, c2, operating_alpha)
    if abs(slope) <= _TOL:
        return BudgetReport(None, None, operating_alpha, phase_shift, diverges=True)
    n = p * (1.0 - p) / (slope * delta_alpha) ** 2
    _, _, _, lik = photon_formulas(l, c1, c2, operating_alpha + delta_alpha)
    wrong = n * (1.0 - lik)
    return BudgetReport(float(n), float(wrong), operating_alpha, phase_shift)
