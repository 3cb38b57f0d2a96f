"""
When are occupancy events dependent?
====================================

``{X_m = z}`` and ``{X_{m+2} = z}`` are dependent unless the walk is
certainly (or certainly not) at ``z`` at time ``m``, or the two sides of
the two-step balance happen to coincide.
"""

from gridwalk import (
    ChainModel,
    GridSpec,
    check_successive_dependence,
    check_two_step_dependence,
    complement_independence_check,
)

centre = ChainModel.from_spec(GridSpec(3, 3), start=5)
print(check_two_step_dependence(centre, 5, 0))  # certain start: independent
print(check_two_step_dependence(centre, 1, 1))  # unreachable: undefined conditional
print(check_two_step_dependence(centre, 1, 2))  # corner after two steps: dependent

# From a uniform start the corner probability drops below 1/3 quickly.
uniform = ChainModel.from_spec(GridSpec(5, 5))
print(check_two_step_dependence(uniform, 1, 25))

# Consecutive steps can never both be at z, so positive mass on both is dependence.
print(check_successive_dependence(uniform, 13, 3))

# Independence carries over to the complements.
print(complement_independence_check(0.5, 0.5, 0.25))
print(complement_independence_check(1 / 6, 1 / 6, 0.0))
