"""Seeded shot-level sampling: detection counts, which-way scoring, sign tests.

Reproducibility contract: trial t draws from numpy's PCG64 seeded with
SeedSequence(entropy=seed, spawn_key=(t,)), so trials are independent
streams and (seed, config) fully determines every count.  The arm label used
for which-way scoring is a simulator-side construct (a real experiment never
observes the arm): the photon takes either arm with probability 1/2 and its
polarization outcome follows that arm's state alone.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from . import analytics
from .interferometer import MZIConfig, run
from .states import KET_M45, KET_P45, inner_product


@dataclass(frozen=True)
class ShotConfig:
    n_photons: int
    seed: int
    trials: int = 1

    def __post_init__(self):
        if self.n_photons < 1:
            raise ValueError("n_photons must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer")


@dataclass(frozen=True)
class TrialSummary:
    """Counts per outcome (+,+45), (+,-45), (-,+45), (-,-45) and guess scores."""

    counts: tuple[int, int, int, int]
    correct_guesses: int
    wrong_guesses: int
    detected_sign: str | None = None


@dataclass(frozen=True)
class DiscriminationSummary:
    """Aggregate of repeated sign-discrimination trials."""

    trials: tuple[TrialSummary, ...]
    success_rate: float
    mean_wrong: float


def _stream(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(trial,)))


def sample_outcomes(dist, shots: ShotConfig) -> np.ndarray:
    """Multinomial counts, shape (trials, 5): four outcomes plus loss channel."""
    p = np.array([*dist.as_tuple(), dist.loss], dtype=float)
    total = p.sum()
    if abs(total - 1.0) > 1e-9 or np.any(p < -1e-15):
        raise ValueError("outcome distribution (including loss) must sum to 1")
    p = np.clip(p, 0.0, None) / p.sum()
    out = np.empty((shots.trials, 5), dtype=np.int64)
    for t in range(shots.trials):
        out[t] = _stream(shots.seed, t).multinomial(shots.n_photons, p)
    return out


def _guess_probabilities(config: MZIConfig) -> tuple[float, float]:
    """(P(+45 | arm A), P(-45 | arm B)) for the current config."""
    _, arms = run(config)
    pa = abs(inner_product(KET_P45, arms.psi_a)) ** 2
    pb = abs(inner_product(KET_M45, arms.psi_b)) ** 2
    return min(pa, 1.0), min(pb, 1.0)


def _which_way_trial(config: MZIConfig, n: int, rng: np.random.Generator) -> TrialSummary:
    p_correct_a, p_correct_b = _guess_probabilities(config)
    n_a = int(rng.binomial(n, 0.5))
    n_b = n - n_a
    plus_a = int(rng.binomial(n_a, p_correct_a))
    minus_b = int(rng.binomial(n_b, p_correct_b))
    plus_b = n_b - minus_b
    minus_a = n_a - plus_a
    correct = plus_a + minus_b
    # Port outcome is an unbiased coin for a photon localized in one arm.
    plus45 = plus_a + plus_b
    minus45 = minus_a + minus_b
    c_pp = int(rng.binomial(plus45, 0.5))
    c_mp = plus45 - c_pp
    c_pm = int(rng.binomial(minus45, 0.5))
    c_mm = minus45 - c_pm
    return TrialSummary(
        counts=(c_pp, c_pm, c_mp, c_mm),
        correct_guesses=correct,
        wrong_guesses=n - correct,
    )


def which_way_experiment(config: MZIConfig, shots: ShotConfig) -> list[TrialSummary]:
    """Sample photons, guess the arm from the polarization, score the guesses."""
    if config.mode != "ideal":
        raise ValueError("which-way experiment requires ideal mode")
    return [
        _which_way_trial(config, shots.n_photons, _stream(shots.seed, t))
        for t in range(shots.trials)
    ]


def phase_discrimination(
    config: MZIConfig, delta_alpha: float, shots: ShotConfig
) -> DiscriminationSummary:
    """Detect the hidden sign of a small rotation offset from photon counts.

    Each trial applies alpha0 + sign*delta_alpha with the sign drawn from the
    trial's stream, then estimates the sign by comparing the (+)-port count
    with its expectation at alpha0.
    """
    if config.mode != "ideal":
        raise ValueError("phase discrimination requires ideal mode")
    slope = float(analytics.p_plus_slope(config.l, config.c1, config.c2, config.alpha))
    if abs(slope) <= 1e-12:
        raise ValueError("zero fringe slope at the operating point")
    slope_sign = 1.0 if slope > 0 else -1.0

    dist0, _ = run(config)
    expected_plus = shots.n_photons * (dist0.p_plus_p45 + dist0.p_plus_m45)

    trials = []
    successes = 0
    wrong_total = 0
    for t in range(shots.trials):
        rng = _stream(shots.seed, t)
        true_sign = 1 if rng.random() < 0.5 else -1
        shifted = dataclasses.replace(
            config, alpha=config.alpha + true_sign * delta_alpha
        )
        dist, _ = run(shifted)
        p = np.array(dist.as_tuple(), dtype=float)
        counts = rng.multinomial(shots.n_photons, p / p.sum())
        diff = (counts[0] + counts[1] - expected_plus) * slope_sign
        if diff > 0:
            detected = "+"
        elif diff < 0:
            detected = "-"
        else:
            detected = "inconclusive"
        ww = _which_way_trial(shifted, shots.n_photons, rng)
        summary = TrialSummary(
            counts=tuple(int(c) for c in counts),
            correct_guesses=ww.correct_guesses,
            wrong_guesses=ww.wrong_guesses,
            detected_sign=detected,
        )
        trials.append(summary)
        if detected == ("+" if true_sign > 0 else "-"):
            successes += 1
        wrong_total += summary.wrong_guesses

    return DiscriminationSummary(
        trials=tuple(trials),
        success_rate=successes / shots.trials,
        mean_wrong=wrong_total / shots.trials,
    )
