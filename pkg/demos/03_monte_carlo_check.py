"""
Checking the exact curve by simulation
======================================

Rollouts are seeded, so rerunning this script prints the same numbers.
"""

import numpy as np

from gridwalk import ChainModel, GridSpec, SimConfig, expected_coverage_exact, simulate_coverage
from gridwalk.montecarlo import agreement_scores

model = ChainModel.from_spec(GridSpec(5, 5), start=13)
exact = expected_coverage_exact(model, 50).values
sim = simulate_coverage(SimConfig(model, n_max=50, replications=200_000, seed=2024))

z = agreement_scores(exact, sim.mean, sim.stderr)
print(f"max |exact - mc| = {np.max(np.abs(exact - sim.mean)):.2e}")
print(f"max z-score      = {z.max():.2f}")

# First-arrival tallies give the coverage probability of a single state.
sim = simulate_coverage(SimConfig(model, 30, 50_000, seed=1, track_first_arrivals=True))
print("corner reached by step 30:", sim.first_arrival_cdf(1)[30])
