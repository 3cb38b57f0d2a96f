"""
Several independent walkers
===========================

With ``k`` independent walkers a state stays unvisited only if all of them
missed it, so its coverage probability is ``1 - (1 - p)**k``.
"""

from gridwalk import ChainModel, GridSpec, expected_coverage_multi

model = ChainModel.from_spec(GridSpec(10, 10), start=45)
for k in (1, 2, 4, 8, 16):
    curve = expected_coverage_multi(model, 200, k)
    print(f"k={k:2d}  coverage after 50 steps {curve[50]:.3f}, after 200 steps {curve[200]:.3f}")

# Writing the number of states as the exponent, k = |E| = 100:
print(expected_coverage_multi(model, 200, model.n_states)[200])
