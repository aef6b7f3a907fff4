from __future__ import annotations

import math
import random
from collections import Counter

import pytest
from scipy import stats

from treebridges import bridges, series, walks_mc
from treebridges.walks_mc import WalkOutcome


def test_forced_streams():
    assert walks_mc.stop_time_outcome([0], 10) == WalkOutcome.AREA_ZERO
    assert walks_mc.stop_time_outcome([-1, 1], 10) == WalkOutcome.AREA_NEGATIVE
    assert walks_mc.stop_time_outcome([1] * 50, 50) == WalkOutcome.CAPPED
    # a lazy step at time 1 stops immediately even at the minimal horizon
    assert walks_mc.stop_time_outcome([0], 1) == WalkOutcome.AREA_ZERO
    # the +1,-1 excursion returns to zero with positive area: not a stop
    assert walks_mc.stop_time_outcome([1, -1, 0], 3) == WalkOutcome.CAPPED


def test_stop_time_outcome_validates_horizon():
    with pytest.raises(ValueError):
        walks_mc.stop_time_outcome([0], 0)


def test_simulate_stopped_walk_deterministic():
    outcomes = {walks_mc.simulate_stopped_walk(seed, 10_000) for seed in range(8)}
    assert outcomes <= {WalkOutcome.AREA_ZERO, WalkOutcome.AREA_NEGATIVE, WalkOutcome.CAPPED}
    for seed in range(8):
        a = walks_mc.simulate_stopped_walk(seed, 10_000)
        b = walks_mc.simulate_stopped_walk(seed, 10_000)
        assert a == b


def test_estimate_validation():
    with pytest.raises(ValueError):
        walks_mc.estimate_zero_area_prob(0, 10, 1)
    with pytest.raises(ValueError):
        walks_mc.estimate_zero_area_prob(10, 10, 1, workers=0)


def test_estimate_deterministic_and_worker_stable():
    a = walks_mc.estimate_zero_area_prob(2000, 3000, seed=9)
    b = walks_mc.estimate_zero_area_prob(2000, 3000, seed=9)
    assert a == b
    c = walks_mc.estimate_zero_area_prob(2000, 3000, seed=9, workers=3)
    d = walks_mc.estimate_zero_area_prob(2000, 3000, seed=9, workers=3)
    assert c == d
    assert c.samples == 2000
    assert 0.0 <= c.capped_fraction <= 1.0


def test_estimate_single_sample():
    est = walks_mc.estimate_zero_area_prob(1, 10, seed=0)
    assert est.estimate in (0.0, 1.0) or (
        math.isnan(est.estimate) and est.capped_fraction == 1.0
    )
    # seed 1 caps its only run at horizon 1: no stopped runs to average
    capped = walks_mc.estimate_zero_area_prob(1, 1, seed=1)
    assert math.isnan(capped.estimate)
    assert math.isnan(capped.std_error)
    assert capped.capped_fraction == 1.0


def test_estimate_horizon_one_law():
    # at horizon 1 the only possible stop is a lazy first step, so every
    # stopped run has area zero and roughly half the runs stop
    est = walks_mc.estimate_zero_area_prob(20_000, 1, seed=3)
    assert est.estimate == 1.0
    assert abs(est.capped_fraction - 0.5) < 0.02


def test_estimate_horizon_two_law():
    # exact two-step law: stop-zero mass 1/2, stop-negative mass 1/16
    est = walks_mc.estimate_zero_area_prob(20_000, 2, seed=4)
    assert abs(est.estimate - 8 / 9) < 0.015
    assert abs(est.capped_fraction - 7 / 16) < 0.015


def test_std_error_follows_stated_formula():
    est = walks_mc.estimate_zero_area_prob(5000, 2000, seed=6)
    stopped = round(est.samples * (1 - est.capped_fraction))
    p = est.estimate
    assert est.std_error == pytest.approx(math.sqrt(p * (1 - p) / est.samples))
    assert stopped > 0


def test_std_error_scales_with_samples():
    small = walks_mc.estimate_zero_area_prob(1000, 2000, seed=11)
    large = walks_mc.estimate_zero_area_prob(4000, 2000, seed=11)
    assert 1.6 < small.std_error / large.std_error < 2.5


def test_vectorized_engine_agrees_with_scalar_engine():
    horizon = 3000
    master = random.Random(2024)
    outcomes = Counter(
        walks_mc.simulate_stopped_walk(master.getrandbits(64), horizon)
        for _ in range(2500)
    )
    stopped = outcomes[WalkOutcome.AREA_ZERO] + outcomes[WalkOutcome.AREA_NEGATIVE]
    scalar_p = outcomes[WalkOutcome.AREA_ZERO] / stopped
    vector = walks_mc.estimate_zero_area_prob(2500, horizon, seed=2024)
    assert abs(scalar_p - vector.estimate) < 0.06
    assert abs(outcomes[WalkOutcome.CAPPED] / 2500 - vector.capped_fraction) < 0.06


def test_sampler_uniform_n1():
    counts = Counter(
        walks_mc.sample_uniform_graphical_bridge(1, seed) for seed in range(10_000)
    )
    assert set(counts) == {(1, -1), (-1, 1)}
    for c in counts.values():
        assert abs(c / 10_000 - 0.5) < 0.015  # 3 sigma


def test_sampler_uniform_n5_chi_square(graphical_bridges_by_n):
    rng = random.Random(31337)
    draws = 100_000
    counts = Counter(
        walks_mc.sample_uniform_graphical_bridge(5, rng.getrandbits(64))
        for _ in range(draws)
    )
    support = graphical_bridges_by_n[5]
    assert set(counts) == set(support)
    assert len(support) == 38
    observed = [counts[b] for b in support]
    result = stats.chisquare(observed)
    assert result.pvalue > 0.001


def test_sampler_output_always_graphical():
    for seed in range(200):
        b = walks_mc.sample_uniform_graphical_bridge(12, seed)
        assert len(b) == 24
        assert bridges.is_graphical_bridge(b)


def test_sampler_deterministic_and_capped():
    assert walks_mc.sample_uniform_graphical_bridge(9, 77) == walks_mc.sample_uniform_graphical_bridge(9, 77)
    assert walks_mc.sample_uniform_graphical_bridge(0, 5) == ()
    with pytest.raises(ValueError):
        walks_mc.sample_uniform_graphical_bridge(walks_mc.SAMPLING_CAP + 1, 0)


def test_sampler_part_counts_match_exact_distribution():
    n, draws = 20, 5000
    exact = series.parts_count_distribution(n)
    rng = random.Random(99)
    counts = Counter(
        len(bridges.irreducible_decomposition(walks_mc.sample_uniform_graphical_bridge(n, rng.getrandbits(64))))
        for _ in range(draws)
    )
    for m, p in exact.items():
        if p < 0.01:
            continue
        freq = counts[m] / draws
        sigma = math.sqrt(float(p) * (1 - float(p)) / draws)
        assert abs(freq - float(p)) <= 3 * sigma
