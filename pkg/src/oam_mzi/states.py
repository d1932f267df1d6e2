"""Polarization vectors with basis conversions and sparse photon states.

Conventions fixed project-wide:
  |R>   = (|x> - i|y>)/sqrt(2)      |L>   = (|x> + i|y>)/sqrt(2)
  |+45> = (|x> + |y>)/sqrt(2)       |-45> = (|x> - |y>)/sqrt(2)
Spin quantum number s = +1 for L, s = -1 for R.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

SQRT2 = math.sqrt(2.0)

# Practical cap on the OAM index; elements only flip l -> -l so the
# reachable label set never grows.
L_MAX = 64


class Basis(Enum):
    XY = "xy"
    RL = "rl"
    DIAG = "diag"


# Columns are the basis kets expressed in XY components.
_TO_XY = {
    Basis.XY: np.eye(2, dtype=complex),
    Basis.RL: np.array([[1.0, 1.0], [-1.0j, 1.0j]]) / SQRT2,
    Basis.DIAG: np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / SQRT2,
}


@dataclass(frozen=True)
class PolVector:
    """Two complex amplitudes in a named polarization basis.

    Component order is (x, y), (R, L) or (+45, -45) depending on basis.
    """

    basis: Basis
    c0: complex
    c1: complex

    def components(self) -> np.ndarray:
        return np.array([self.c0, self.c1], dtype=complex)

    def xy_components(self) -> np.ndarray:
        return _TO_XY[self.basis] @ self.components()

    def norm(self) -> float:
        return math.sqrt(abs(self.c0) ** 2 + abs(self.c1) ** 2)

    def scaled(self, factor: complex) -> "PolVector":
        return PolVector(self.basis, self.c0 * factor, self.c1 * factor)


def pol_from_components(comps, basis: Basis = Basis.XY) -> PolVector:
    return PolVector(basis, complex(comps[0]), complex(comps[1]))


# Handy unit kets.
KET_X = PolVector(Basis.XY, 1.0, 0.0)
KET_Y = PolVector(Basis.XY, 0.0, 1.0)
KET_R = PolVector(Basis.RL, 1.0, 0.0)
KET_L = PolVector(Basis.RL, 0.0, 1.0)
KET_P45 = PolVector(Basis.DIAG, 1.0, 0.0)
KET_M45 = PolVector(Basis.DIAG, 0.0, 1.0)


def convert_basis(v: PolVector, target: Basis) -> PolVector:
    """Express the same physical vector in the target basis."""
    if v.basis is target:
        return v
    comps = _TO_XY[target].conj().T @ v.xy_components()
    return PolVector(target, complex(comps[0]), complex(comps[1]))


def inner_product(u: PolVector, v: PolVector) -> complex:
    """<u|v>, conjugate-linear in u."""
    return complex(np.vdot(u.xy_components(), v.xy_components()))


@dataclass(frozen=True)
class PhotonState:
    """Sparse superposition over (path, OAM index) labels.

    terms maps (path, l) -> PolVector, path one of "A", "B", "single".
    """

    terms: dict

    def __post_init__(self):
        for (path, l), v in self.terms.items():
            if abs(l) > L_MAX:
                raise ValueError(f"OAM index |l|={abs(l)} exceeds cap {L_MAX}")
            if not np.all(np.isfinite(v.components().view(float))):
                raise ValueError(f"non-finite amplitude at label ({path}, {l})")


def total_norm(state: PhotonState) -> float:
    """Square root of the summed squared amplitude magnitudes."""
    return math.sqrt(
        sum(abs(v.c0) ** 2 + abs(v.c1) ** 2 for v in state.terms.values())
    )
