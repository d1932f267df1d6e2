import math

import numpy as np
import pytest
from scipy import integrate

from oam_mzi import modes


def test_mode_validation():
    with pytest.raises(ValueError):
        modes.BeamMode("lg", l=0, waist=0.0)
    with pytest.raises(ValueError):
        modes.BeamMode("bg", l=1)  # missing k_r
    with pytest.raises(ValueError):
        modes.BeamMode("hermite", l=0)


def test_lg00_peaks_at_origin():
    mode = modes.BeamMode("lg", l=0, p=0)
    r = np.linspace(0, 3, 200)
    amp = np.abs(modes.scalar_amplitude(mode, r, 0.0))
    assert np.argmax(amp) == 0


def test_vortex_core_is_dark():
    for l in (1, 2, -3):
        mode = modes.BeamMode("lg", l=l)
        assert abs(modes.scalar_amplitude(mode, 0.0, 0.3)) == 0.0


def test_amplitude_magnitude_is_azimuthally_symmetric():
    phis = np.linspace(0, 2 * np.pi, 50)
    for mode in (modes.BeamMode("lg", l=2, p=1), modes.BeamMode("bg", l=2, k_r=3.0)):
        mags = np.abs(modes.scalar_amplitude(mode, 1.3, phis))
        assert np.max(np.abs(mags - mags[0])) <= 1e-12


@pytest.mark.parametrize(
    "mode",
    [
        modes.BeamMode("lg", l=0, p=0),
        modes.BeamMode("lg", l=2, p=0),
        modes.BeamMode("lg", l=3, p=2, waist=1.7),
        modes.BeamMode("bg", l=2, k_r=4.0),
    ],
)
def test_unit_power_normalization(mode):
    def integrand(r):
        return np.abs(modes.scalar_amplitude(mode, r, 0.0)) ** 2 * r

    radial, _ = integrate.quad(integrand, 0, np.inf, limit=200)
    assert abs(2 * math.pi * radial - 1.0) <= 1e-9


def test_discrete_power_on_grid():
    mode = modes.BeamMode("lg", l=2, p=0)
    axis = np.linspace(-6, 6, 512)
    dx = axis[1] - axis[0]
    x, y = np.meshgrid(axis, axis)
    u = modes.scalar_amplitude(mode, np.hypot(x, y), np.arctan2(y, x))
    assert abs(np.sum(np.abs(u) ** 2) * dx * dx - 1.0) <= 1e-3


def _symmetry_deviation(mode, s, order, rng):
    theta = 2 * np.pi / order
    rot = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
    pts = rng.uniform(-3, 3, (2, 500))
    ex, ey = modes.vector_field_at(mode, s, pts[0], pts[1])
    xr, yr = rot @ pts
    exr, eyr = modes.vector_field_at(mode, s, xr, yr)
    return np.max(np.abs(np.stack([exr, eyr]) - rot @ np.stack([ex, ey])))


def test_l2_spin_plus_three_fold():
    rng = np.random.default_rng(61)
    assert _symmetry_deviation(modes.BeamMode("lg", l=2), 1, 3, rng) <= 1e-9


def test_l2_spin_minus_only_full_turn():
    rng = np.random.default_rng(67)
    mode = modes.BeamMode("lg", l=2)
    assert _symmetry_deviation(mode, -1, 3, rng) > 1e-3
    assert _symmetry_deviation(mode, -1, 1, rng) <= 1e-9


def test_l0_spin_plus_one_fold():
    rng = np.random.default_rng(71)
    assert _symmetry_deviation(modes.BeamMode("lg", l=0), 1, 1, rng) <= 1e-9


def test_symmetry_order_values():
    assert modes.symmetry_order(2, 1) == 3
    assert modes.symmetry_order(2, -1) == 1
    assert modes.symmetry_order(0, 1) == 1
    assert modes.symmetry_order(1, -1) == modes.CONTINUOUS_SYMMETRY


def test_cycle_averaged_intensity_azimuthally_symmetric():
    # averaging |E(t)|^2 over a cycle gives |u|^2/2, independent of phi
    mode = modes.BeamMode("lg", l=2)
    phis = np.linspace(0, 2 * np.pi, 100)
    r = 1.1
    vals = []
    for phi in phis:
        u = modes.scalar_amplitude(mode, r, phi)
        ts = np.linspace(0, 2 * np.pi, 64, endpoint=False)
        ut = u * np.exp(-1j * ts)
        inten = np.mean(np.real(ut) ** 2 / 2 + np.imag(ut) ** 2 / 2)
        vals.append(inten)
    assert np.max(np.abs(np.array(vals) - vals[0])) <= 1e-9


def test_transverse_field_grid_shape():
    grid = modes.transverse_field(modes.BeamMode("lg", l=1), 1, extent=2.0, resolution=16)
    assert grid.x.shape == (16, 16)
    assert grid.e_x.shape == (16, 16)
    assert grid.x[0, 0] == -2.0 and grid.x[-1, -1] == 2.0
