"""
Exact expected coverage versus the independence formula
=======================================================

The exact curve makes each state absorbing in turn and reads off the mass
that has collected there.  The naive curve multiplies the per-step
probabilities of *not* being at a state, which treats dependent events
as independent.
"""

import numpy as np

from gridwalk import ChainModel, GridSpec, expected_coverage_exact, expected_coverage_naive

model = ChainModel.from_spec(GridSpec(5, 5), start=13)  # start in the centre
exact = expected_coverage_exact(model, 50)
naive = expected_coverage_naive(model, 50)

print(" step   exact    naive")
for n in range(0, 51, 5):
    print(f"{n:5d}  {exact[n]:.4f}  {naive[n]:.4f}")

gap = np.abs(exact.values - naive.values)
print(f"largest gap {gap.max():.4f} at step {gap.argmax()}")

# Both formulas agree for n <= 1, since no state can be visited twice yet.
print(exact.values[:2], naive.values[:2])
