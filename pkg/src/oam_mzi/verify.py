"""Self-verification suite: every module invariant as a named check.

Analytic checks are deterministic in their own right; the seed only varies
the Monte Carlo streams and the random sampling of test points.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

import numpy as np

from . import analytics, elements, modes, montecarlo
from .interferometer import MZIConfig, likelihood, p_plus, p_plus_sweep, run
from .states import (
    Basis,
    PhotonState,
    PolVector,
    convert_basis,
    inner_product,
    total_norm,
)

TOL = 1e-12


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


def _random_polvec(rng) -> PolVector:
    c = rng.standard_normal(4)
    return PolVector(Basis.XY, complex(c[0], c[1]), complex(c[2], c[3]))


def _random_input(rng) -> tuple[complex, complex]:
    c = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    c = c / np.linalg.norm(c)
    return complex(c[0]), complex(c[1])


def _random_real_input(rng) -> tuple[float, float]:
    c = np.abs(rng.standard_normal(2)) + 1e-3
    c = c / np.linalg.norm(c)
    return float(c[0]), float(c[1])


def check_basis_round_trip(rng):
    for _ in range(1000):
        v = _random_polvec(rng)
        w = convert_basis(convert_basis(convert_basis(v, Basis.RL), Basis.DIAG), Basis.XY)
        err = np.max(np.abs(w.components() - v.components()))
        assert err <= TOL, f"round-trip error {err:.3e}"


def check_basis_norm(rng):
    for _ in range(1000):
        v = _random_polvec(rng)
        for target in Basis:
            err = abs(convert_basis(v, target).norm() - v.norm())
            assert err <= TOL * max(1.0, v.norm()), f"norm drift {err:.3e}"


def check_inner_product_conjugate(rng):
    for _ in range(200):
        u, v = _random_polvec(rng), _random_polvec(rng)
        err = abs(inner_product(u, v) - np.conj(inner_product(v, u)))
        assert err <= 1e-15 * max(1.0, u.norm() * v.norm()), f"asymmetry {err:.3e}"


def check_dove_involution(rng):
    for _ in range(1000):
        l = int(rng.integers(-64, 65))
        alpha = float(rng.uniform(-10, 10))
        state = PhotonState({("single", l): _random_polvec(rng)})
        twice = elements.dove_apply(alpha, elements.dove_apply(alpha, state))
        v0 = state.terms[("single", l)].components()
        v1 = twice.terms[("single", l)].components()
        err = np.max(np.abs(v0 - v1))
        assert err <= TOL * max(1.0, np.max(np.abs(v0))), f"involution error {err:.3e}"


def check_hwp_involution(rng):
    for _ in range(1000):
        theta = float(rng.uniform(-10, 10))
        m = elements.hwp_rotated(theta)
        err = np.max(np.abs(m @ m - np.eye(2)))
        assert err <= TOL, f"HWP^2 != I by {err:.3e}"


def check_joint_ideal_norm(rng):
    params = elements.ideal_params()
    for _ in range(500):
        l = int(rng.integers(-64, 65))
        alpha = float(rng.uniform(-10, 10))
        state = PhotonState({("single", l): _random_polvec(rng)})
        out = elements.joint_apply(alpha, params, state, "ideal")
        err = abs(total_norm(out) - total_norm(state))
        assert err <= TOL * max(1.0, total_norm(state)), f"norm drift {err:.3e}"


def check_eq8_phases(rng):
    """Ideal joint element on |l>|R> and |l>|L> gives the exp[i2(l-+1)a] phases."""
    params = elements.ideal_params()
    for _ in range(1000):
        l = int(rng.integers(-64, 65))
        alpha = float(rng.uniform(-10, 10))
        for comp, other, sign in ((0, 1, -1), (1, 0, +1)):
            amps = [0.0, 0.0]
            amps[comp] = 1.0
            state = PhotonState({("single", l): PolVector(Basis.RL, *amps)})
            out = elements.joint_apply(alpha, params, state, "ideal")
            got = convert_basis(out.terms[("single", -l)], Basis.RL).components()
            want = [0.0 + 0j, 0.0 + 0j]
            want[other] = np.exp(2j * (l + sign) * alpha)
            err = np.max(np.abs(got - np.array(want)))
            assert err <= 2e-12, f"operator phase error {err:.3e}"


def check_decompose_normalization(rng):
    for _ in range(500):
        d = rng.uniform(0.05, 1.0, 2) * np.exp(1j * rng.uniform(0, 2 * np.pi, 2))
        w = np.exp(1j * rng.uniform(0, 2 * np.pi, 2))
        params = elements.ElementParams(*d, *w)
        a, b, _ = elements.decompose_joint(params)
        err = abs(abs(a) ** 2 + abs(b) ** 2 - 1.0)
        assert err <= TOL, f"|a|^2+|b|^2 off by {err:.3e}"


def check_beamsplitter_unitarity(rng):
    for _ in range(1000):
        arm_a = PhotonState({("A", int(rng.integers(-3, 4))): _random_polvec(rng)})
        arm_b = PhotonState({("B", int(rng.integers(-3, 4))): _random_polvec(rng)})
        out_p = elements.beamsplitter_combine(arm_a, arm_b, "+")
        out_m = elements.beamsplitter_combine(arm_a, arm_b, "-")
        lhs = total_norm(out_p) ** 2 + total_norm(out_m) ** 2
        rhs = total_norm(arm_a) ** 2 + total_norm(arm_b) ** 2
        assert abs(lhs - rhs) <= TOL * max(1.0, rhs), f"unitarity off by {abs(lhs - rhs):.3e}"


def check_fresnel_unimodular_tir(rng):
    geom = elements.PrismGeometry()
    d_x, d_y = elements.fresnel_dove(geom)
    n, thb = geom.refractive_index, geom.base_incidence_angle
    g = math.sqrt((n * math.sin(thb)) ** 2 - 1.0)
    r_s = (n * math.cos(thb) - 1j * g) / (n * math.cos(thb) + 1j * g)
    r_p = (math.cos(thb) - 1j * n * g) / (math.cos(thb) + 1j * n * g)
    assert abs(abs(r_s) - 1.0) <= TOL and abs(abs(r_p) - 1.0) <= TOL, "TIR not unimodular"
    assert 0.8 < abs(d_x) < 1.0 and 0.8 < abs(d_y) < 1.0, "prism response out of range"


def check_outcome_normalization(rng):
    for _ in range(1000):
        c1, c2 = _random_input(rng)
        cfg = MZIConfig(
            l=int(rng.integers(0, 6)), c1=c1, c2=c2, alpha=float(rng.uniform(-10, 10))
        )
        dist, _ = run(cfg)
        assert abs(dist.total() - 1.0) <= TOL, f"four outcomes sum to {dist.total()!r}"


def check_p_plus_closed_form(rng):
    alphas = np.linspace(0.0, 2 * np.pi, 2000)
    for l in range(6):
        for _ in range(3):
            c1, c2 = _random_input(rng)
            sim = p_plus_sweep(l, c1, c2, alphas)
            ref = analytics.photon_formulas(l, c1, c2, alphas)[0]
            err = np.max(np.abs(sim - ref))
            assert err <= TOL, f"closed-form mismatch {err:.3e} at l={l}"


def check_p_plus_evenness(rng):
    for _ in range(300):
        c1, c2 = _random_input(rng)
        l = int(rng.integers(0, 6))
        alpha = float(rng.uniform(0, 10))
        err = abs(p_plus(MZIConfig(l=l, c1=c1, c2=c2, alpha=alpha))
                  - p_plus(MZIConfig(l=l, c1=c1, c2=c2, alpha=-alpha)))
        assert err <= TOL, f"evenness violated by {err:.3e}"


def check_likelihood_distinguishability(rng):
    # The fixed +-45 guessing rule saturates D = 2L-1 for real nonnegative
    # (c1, c2) and sin(alpha) >= 0.
    for _ in range(300):
        c1, c2 = _random_real_input(rng)
        l = int(rng.integers(0, 6))
        alpha = float(rng.uniform(0, np.pi))
        lik = likelihood(MZIConfig(l=l, c1=c1, c2=c2, alpha=alpha))
        d = analytics.photon_formulas(l, c1, c2, alpha)[2]
        err = abs(2 * lik - 1 - d)
        assert err <= TOL, f"D = 2L-1 off by {err:.3e}"


def check_mirror_invariance(rng):
    for _ in range(300):
        c1, c2 = _random_real_input(rng)
        l = int(rng.integers(0, 6))
        alpha = float(rng.uniform(-10, 10))
        base = run(MZIConfig(l=l, c1=c1, c2=c2, alpha=alpha))[0]
        with_m = run(MZIConfig(l=l, c1=c1, c2=c2, alpha=alpha, mirrors=True))[0]
        err = np.max(np.abs(np.array(base.as_tuple()) - np.array(with_m.as_tuple())))
        assert err <= TOL, f"mirror pair shifts probabilities by {err:.3e}"


def check_exact_zero_a_matches_ideal(rng):
    params = elements.ideal_params()  # w*d = diag(1,-1): a = 0 exactly
    for _ in range(200):
        c1, c2 = _random_input(rng)
        l = int(rng.integers(0, 6))
        alpha = float(rng.uniform(-10, 10))
        ideal = run(MZIConfig(l=l, c1=c1, c2=c2, alpha=alpha))[0]
        exact = run(MZIConfig(l=l, c1=c1, c2=c2, alpha=alpha,
                              element_params=params, mode="exact"))[0]
        assert ideal.as_tuple() == exact.as_tuple(), "exact(a=0) deviates from ideal"


def check_tie_photon_correspondence(rng):
    alphas = np.linspace(0, 2 * np.pi, 500)
    for l in range(6):
        c1, c2 = _random_input(rng)
        s = analytics.TIEState(float(l - 1), float(l + 1), c1, c2)
        p, sens, d, _ = analytics.photon_formulas(l, c1, c2, alphas)
        for tie_val, photon_val in (
            (analytics.tie_p_plus(s, alphas), p),
            (analytics.tie_sensitivity(s, alphas), sens),
            (analytics.tie_distinguishability(s, alphas), d),
        ):
            err = np.max(np.abs(tie_val - photon_val))
            assert err <= 1e-15, f"correspondence broken by {err:.3e}"


def check_sensitivity_finite_difference(rng):
    alphas = np.linspace(0.1, 2 * np.pi, 1000)
    h = 1e-6
    for l in (0, 2):
        c1, c2 = _random_input(rng)
        sens = analytics.photon_formulas(l, c1, c2, alphas)[1]
        p_hi = analytics.photon_formulas(l, c1, c2, alphas + h)[0]
        p_lo = analytics.photon_formulas(l, c1, c2, alphas - h)[0]
        fd = (2.0 / (l + 1)) * np.abs((p_hi - p_lo) / (2 * h))
        err = np.max(np.abs(sens - fd))
        assert err <= 1e-6, f"finite-difference mismatch {err:.3e}"


def check_range_bounds(rng):
    alphas = np.linspace(0, 2 * np.pi, 2000)
    for l in range(6):
        c1, c2 = _random_input(rng)
        _, sens, d, lik = analytics.photon_formulas(l, c1, c2, alphas)
        assert np.all((d >= -TOL) & (d <= 1 + TOL)), "D out of [0,1]"
        assert np.all((sens >= -TOL) & (sens <= 1 + TOL)), "S out of [0,1]"
        assert np.all((lik >= 0.5 - TOL) & (lik <= 1 + TOL)), "L out of [1/2,1]"
        err = np.max(np.abs(2 * lik - 1 - d))
        assert err <= 1e-15, "2L-1 != D"


def check_correspondence_values(rng):
    got = [analytics.correspondence(l) for l in (0, 3, 2, 1)]
    assert got[:3] == [-1.0, 2.0, 3.0] and math.isinf(got[3]), f"kappa list {got}"


def check_duality_saturation(rng):
    for d in np.linspace(0.0, 0.999, 50):
        pt = analytics.saturated_point(float(d))
        assert abs(pt.d**2 + pt.v**2 - 1.0) <= TOL, "saturated point off the circle"


def check_mode_symmetry(rng):
    mode = modes.BeamMode("lg", l=2, p=0)
    pts = rng.uniform(-3, 3, (2, 200))
    for s, order in ((1, 3), (-1, 1)):
        theta = 2 * np.pi / order
        rot = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
        ex, ey = modes.vector_field_at(mode, s, pts[0], pts[1])
        xr, yr = rot @ pts
        exr, eyr = modes.vector_field_at(mode, s, xr, yr)
        err = np.max(np.abs(np.stack([exr, eyr]) - rot @ np.stack([ex, ey])))
        assert err <= 1e-9, f"{order}-fold symmetry broken by {err:.3e} (s={s})"


def check_mode_power_normalization(rng):
    grid = modes.transverse_field(modes.BeamMode("lg", l=2, p=0), 1, extent=6.0,
                                  resolution=512)
    axis = np.linspace(-6.0, 6.0, 512)
    dx = axis[1] - axis[0]
    u = modes.scalar_amplitude(
        modes.BeamMode("lg", l=2, p=0), np.hypot(grid.x, grid.y),
        np.arctan2(grid.y, grid.x)
    )
    power = np.sum(np.abs(u) ** 2) * dx * dx
    assert abs(power - 1.0) <= 1e-3, f"discrete power {power!r}"


def check_montecarlo_determinism(rng):
    cfg = MZIConfig(l=2, alpha=1.2)
    shots = montecarlo.ShotConfig(n_photons=10_000, seed=int(rng.integers(1 << 31)),
                                  trials=3)
    dist, _ = run(cfg)
    a = montecarlo.sample_outcomes(dist, shots)
    b = montecarlo.sample_outcomes(dist, shots)
    assert np.array_equal(a, b), "identical seed+config gave different counts"


def check_montecarlo_convergence(rng):
    cfg = MZIConfig(l=2, alpha=1.1)
    n = 1_000_000
    shots = montecarlo.ShotConfig(n_photons=n, seed=int(rng.integers(1 << 31)))
    dist, _ = run(cfg)
    counts = montecarlo.sample_outcomes(dist, shots)[0]
    p = np.array([*dist.as_tuple(), dist.loss])
    sigma = np.sqrt(n * p * (1 - p))
    err = np.abs(counts - n * p)
    assert np.all(err <= 5 * sigma + 1), f"counts beyond 5 sigma: {err / (sigma + 1e-30)}"


CHECKS: list[tuple[str, Callable]] = [
    ("basis-round-trip", check_basis_round_trip),
    ("basis-norm-preservation", check_basis_norm),
    ("inner-product-conjugate-symmetry", check_inner_product_conjugate),
    ("dove-involution", check_dove_involution),
    ("hwp-involution", check_hwp_involution),
    ("joint-ideal-norm-preservation", check_joint_ideal_norm),
    ("joint-operator-phases", check_eq8_phases),
    ("decomposition-normalization", check_decompose_normalization),
    ("beamsplitter-unitarity", check_beamsplitter_unitarity),
    ("fresnel-tir-unimodular", check_fresnel_unimodular_tir),
    ("outcome-normalization", check_outcome_normalization),
    ("p-plus-closed-form", check_p_plus_closed_form),
    ("p-plus-evenness", check_p_plus_evenness),
    ("likelihood-distinguishability", check_likelihood_distinguishability),
    ("mirror-pair-invariance", check_mirror_invariance),
    ("exact-zero-a-matches-ideal", check_exact_zero_a_matches_ideal),
    ("tie-photon-correspondence", check_tie_photon_correspondence),
    ("sensitivity-finite-difference", check_sensitivity_finite_difference),
    ("quantity-range-bounds", check_range_bounds),
    ("correspondence-values", check_correspondence_values),
    ("duality-saturation", check_duality_saturation),
    ("mode-rotational-symmetry", check_mode_symmetry),
    ("mode-power-normalization", check_mode_power_normalization),
    ("montecarlo-determinism", check_montecarlo_determinism),
    ("montecarlo-frequency-convergence", check_montecarlo_convergence),
]


def run_all(seed: int = 0) -> list[CheckResult]:
    results = []
    for index, (name, func) in enumerate(CHECKS):
        rng = np.random.default_rng(np.random.SeedSequence(entropy=seed,
                                                           spawn_key=(index,)))
        try:
            func(rng)
        except AssertionError as exc:
            results.append(CheckResult(name, False, str(exc)))
        except Exception as exc:  # defensive: a crash is a failure too
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
        else:
            results.append(CheckResult(name, True, "ok"))
    return results
