"""Expected coverage of symmetric random walks on 2D/3D lattices.

Exact first-arrival coverage through absorbing Markov chains, the naive
independence-assuming product formula for comparison, independent
multi-agent coverage, and seeded Monte Carlo / brute-force oracles.
"""

from .errors import DomainError, ResourceError
from .lattice import Borders, Coord, GridSpec, coord_of, index_of, neighbors
from .chain import (
    ChainModel,
    build_chain,
    make_absorbing,
    propagate,
    starting_distribution,
    two_step_probability,
)
from .coverage import (
    CoverageCurve,
    Method,
    coverage_probability_exact,
    expected_coverage_exact,
    expected_coverage_multi,
    expected_coverage_naive,
)
from .dependence import (
    DependenceReport,
    Verdict,
    check_successive_dependence,
    check_two_step_dependence,
    complement_independence_check,
)
from .montecarlo import SimConfig, SimResult, brute_force_coverage, simulate_coverage

__all__ = [
    "Borders",
    "ChainModel",
    "Coord",
    "CoverageCurve",
    "DependenceReport",
    "DomainError",
    "GridSpec",
    "Method",
    "ResourceError",
    "SimConfig",
    "SimResult",
    "Verdict",
    "brute_force_coverage",
    "build_chain",
    "check_successive_dependence",
    "check_two_step_dependence",
    "complement_independence_check",
    "coord_of",
    "coverage_probability_exact",
    "expected_coverage_exact",
    "expected_coverage_multi",
    "expected_coverage_naive",
    "index_of",
    "make_absorbing",
    "neighbors",
    "propagate",
    "simulate_coverage",
    "starting_distribution",
    "two_step_probability",
]

__version__ = "0.1.0"
