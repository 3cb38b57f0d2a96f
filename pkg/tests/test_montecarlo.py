import numpy as np
import pytest

from gridwalk import (
    DomainError,
    Method,
    ResourceError,
    SimConfig,
    brute_force_coverage,
    coverage_probability_exact,
    expected_coverage_exact,
    expected_coverage_multi,
    simulate_coverage,
)
from gridwalk.coverage import absorption_probabilities
from gridwalk.montecarlo import agreement_scores

from conftest import make


def test_step_zero_is_deterministic(center3):
    r = simulate_coverage(SimConfig(center3, 0, 50, seed=1))
    assert r.curve.method is Method.MONTE_CARLO
    assert r.mean[0] == 1 / 9 and r.stderr[0] == 0


def test_two_by_two_single_step():
    m = make(2, 2, start=1)
    r = simulate_coverage(SimConfig(m, 1, 100_000, seed=3))
    assert abs(r.mean[1] - 0.5) <= 1e-12 + 3 * r.stderr[1]
    # every one-step path covers exactly two of four states
    assert r.stderr[1] == 0


def test_config_validation(center3):
    for kwargs in ({"n_max": -1, "replications": 1}, {"n_max": 1, "replications": 0}):
        with pytest.raises(DomainError):
            SimConfig(center3, **kwargs)
    with pytest.raises(DomainError):
        SimConfig(center3, 1, 1, uav_count=0)
    with pytest.raises(DomainError):
        SimConfig(center3, 1, 1, seed=-1)


def test_reproducible_and_thread_independent(center5):
    cfg = SimConfig(center5, 30, 20_000, uav_count=2, seed=99)
    a = simulate_coverage(cfg, threads=1)
    b = simulate_coverage(cfg, threads=3)
    assert np.array_equal(a.mean, b.mean) and np.array_equal(a.stderr, b.stderr)
    c = simulate_coverage(SimConfig(center5, 30, 20_000, uav_count=2, seed=100))
    assert not np.array_equal(a.mean, c.mean)


def test_stderr_shrinks_with_replications(center5):
    small = simulate_coverage(SimConfig(center5, 20, 2_000, seed=5)).stderr
    large = simulate_coverage(SimConfig(center5, 20, 200_000, seed=5)).stderr
    assert np.all(small >= 0) and np.all(large >= 0)
    assert np.all(large[2:] < small[2:] / 5)


def test_mc_curve_monotone(center5):
    r = simulate_coverage(SimConfig(center5, 40, 5_000, seed=2))
    assert np.all(np.diff(r.mean) >= 0)
    assert np.all((r.mean >= 0) & (r.mean <= 1))


def test_calibration_small_grid():
    m = make(3, 4, boundless=True, start=2)
    exact = expected_coverage_exact(m, 60).values
    r = simulate_coverage(SimConfig(m, 60, 50_000, seed=11))
    z = agreement_scores(exact, r.mean, r.stderr)
    assert np.mean(z > 3) <= 0.01


@pytest.mark.parametrize("k", [2, 3])
def test_multi_agent_agreement(k):
    m = make(4, 4, start=6)
    exact = expected_coverage_multi(m, 40, k).values
    r = simulate_coverage(SimConfig(m, 40, 40_000, uav_count=k, seed=7))
    assert np.mean(agreement_scores(exact, r.mean, r.stderr) > 3) <= 0.01


def test_first_arrival_cdf_matches_absorbing_chain(center5):
    R = 100_000
    r = simulate_coverage(SimConfig(center5, 30, R, seed=21, track_first_arrivals=True))
    probs = absorption_probabilities(center5, 30)
    counts = r.first_arrival_counts
    assert counts.shape == (25, 31)
    assert counts[12, 0] == R
    for state in (1, 3, 8, 13, 25):
        cdf = r.first_arrival_cdf(state)
        p = probs[:, state - 1]
        se = np.sqrt(p * (1 - p) / R)
        assert np.all(np.abs(cdf - p) <= 3 * se + 1e-12)
    assert coverage_probability_exact(center5, 1, 30) == probs[30, 0]


def test_first_arrivals_require_tracking(center3):
    r = simulate_coverage(SimConfig(center3, 3, 10))
    with pytest.raises(DomainError):
        r.first_arrival_cdf(1)


def test_uniform_start_sampling():
    m = make(3, 3)
    r = simulate_coverage(SimConfig(m, 0, 10, uav_count=1, seed=0, track_first_arrivals=True))
    assert r.first_arrival_counts[:, 0].sum() == 10


def test_brute_force_examples(center3):
    assert brute_force_coverage(make(2, 2, start=1), 1)[1] == pytest.approx(0.5, abs=1e-15)
    bf = brute_force_coverage(center3, 1)
    assert bf[0] == pytest.approx(1 / 9, abs=1e-15) and bf[1] == pytest.approx(2 / 9, abs=1e-15)
    assert brute_force_coverage(make(3, 3), 0)[0] == pytest.approx(1 / 9, abs=1e-15)


def test_brute_force_guard(center5):
    with pytest.raises(ResourceError, match="path-steps"):
        brute_force_coverage(center5, 30)


def test_brute_force_chunking_is_exact(monkeypatch):
    import gridwalk.montecarlo as mc

    m = make(3, 3, boundless=True)
    whole = brute_force_coverage(m, 6).values
    monkeypatch.setattr(mc, "_FRONTIER_CHUNK", 37)
    np.testing.assert_allclose(brute_force_coverage(m, 6).values, whole, atol=1e-14)


def test_agreement_scores_zero_spread():
    z = agreement_scores([0.5, 0.5], [0.5, 0.6], [0.0, 0.0])
    assert z[0] == 0 and np.isinf(z[1])
