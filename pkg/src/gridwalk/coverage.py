"""Expected coverage curves.

The exact curve turns each target state ``r`` into an absorbing state and
reads off the mass collected there after ``n`` steps, which equals the
probability that the walk has reached ``r`` by time ``n``.  The naive curve
multiplies per-step non-occupancy probabilities as if they were
independent; it is kept as a comparison baseline and is wrong in general.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._parallel import ordered_map
from .chain import ChainModel, trajectory
from .errors import DomainError
from .lattice import _check_state

# Target states handled per dense block of the batched sweep.
BLOCK_STATES = 256


class Method(enum.Enum):
    EXACT = "exact"
    NAIVE = "naive"
    MONTE_CARLO = "monte-carlo"


@dataclass(frozen=True, eq=False)
class CoverageCurve:
    method: Method
    values: np.ndarray
    uav_count: int = 1

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    @property
    def steps(self) -> np.ndarray:
        return np.arange(len(self.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]


def _absorbed_block(PT, start: np.ndarray, targets: np.ndarray, n_max: int) -> np.ndarray:
    """P(A_r <= n) for each ``r`` in ``targets`` (0-based), shape ``(n_max+1, b)``.

    Row ``j`` of the working matrix is the distribution of the chain in which
    ``targets[j]`` absorbs.  Each step moves the non-absorbed mass with the
    original transitions and adds the absorbed mass back in place, which is
    the same as multiplying by the matrix with row ``r`` replaced by ``e_r``.
    """
    b = len(targets)
    cols = np.arange(b)
    V = np.repeat(start[:, None], b, axis=1)  # (|E|, b): column j is chain targets[j]
    out = np.empty((n_max + 1, b))
    out[0] = V[targets, cols]
    for t in range(n_max):
        held = V[targets, cols].copy()
        V[targets, cols] = 0.0
        V = PT @ V
        V[targets, cols] += held
        out[t + 1] = V[targets, cols]
    return out


def absorption_probabilities(
    model: ChainModel, n_max: int, states=None, threads=None
) -> np.ndarray:
    """First-arrival CDFs ``P(A_r <= n)`` as an array of shape ``(n_max+1, len(states))``.

    ``states`` are 1-based and default to all states.  Blocks of targets are
    independent and may run on a thread pool; the result does not depend on
    the number of threads.
    """
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    if states is None:
        targets = np.arange(model.n_states)
    else:
        for s in states:
            _check_state(model.spec, int(s))
        targets = np.asarray(states, dtype=np.intp) - 1
    PT = model.transition.T.tocsr()
    start = np.asarray(model.start, dtype=float)
    blocks = [targets[i : i + BLOCK_STATES] for i in range(0, len(targets), BLOCK_STATES)]
    parts = ordered_map(lambda blk: _absorbed_block(PT, start, blk, n_max), blocks, threads)
    if not parts:
        return np.empty((n_max + 1, 0))
    return np.concatenate(parts, axis=1)


def coverage_probability_exact(model: ChainModel, r: int, n: int) -> float:
    """Probability that state ``r`` has been visited by time ``n``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return float(absorption_probabilities(model, n, [r], threads=1)[n, 0])


def expected_coverage_exact(model: ChainModel, n_max: int, threads=None) -> CoverageCurve:
    probs = absorption_probabilities(model, n_max, threads=threads)
    return CoverageCurve(Method.EXACT, probs.sum(axis=1) / model.n_states)


def expected_coverage_naive(model: ChainModel, n_max: int) -> CoverageCurve:
    """Coverage under the (incorrect) assumption that occupancy of a state
    at different times is independent: ``1 - prod_t (1 - P(X_t = z))``."""
    pis = trajectory(model, n_max)
    miss = np.cumprod(1.0 - pis, axis=0)
    return CoverageCurve(Method.NAIVE, (1.0 - miss).sum(axis=1) / model.n_states)


def expected_coverage_multi(model: ChainModel, n_max: int, k: int, threads=None) -> CoverageCurve:
    """Expected coverage by ``k`` agents that walk independently from the same start
    distribution: state ``r`` stays uncovered only if every agent missed it."""
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise DomainError(f"agent count must be a positive integer, got {k!r}")
    k = int(k)
    probs = absorption_probabilities(model, n_max, threads=threads)
    covered = 1.0 - (1.0 - probs) ** k
    return CoverageCurve(Method.EXACT, covered.sum(axis=1) / model.n_states, uav_count=k)
