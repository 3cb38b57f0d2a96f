"""Sparse transition matrices and state-probability propagation.

All public state arguments are 1-based.  Matrices are ``scipy.sparse``
CSR arrays indexed from 0 internally, so state ``s`` lives in row ``s-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
import scipy.sparse as sp

from .errors import DomainError
from .lattice import GridSpec, _check_state, neighbors

ROW_SUM_TOL = 1e-12


def build_chain(spec: GridSpec) -> sp.csr_array:
    """Transition matrix of the symmetric random walk on ``spec``.

    Each move is equally likely: ``1/deg`` on bordered grids and
    ``1/(2*dims)`` on boundless ones, where a repeated neighbour (axis of
    length 2) accumulates its multiplicity.  The diagonal is always zero.
    """
    n = spec.state_count
    rows, cols, vals = [], [], []
    for s in spec.states():
        nbrs = neighbors(spec, s)
        p = 1.0 / len(nbrs)
        for t in nbrs:
            rows.append(s - 1)
            cols.append(t - 1)
            vals.append(p)
    # duplicate (row, col) pairs are summed by the COO -> CSR conversion
    P = sp.coo_array((vals, (rows, cols)), shape=(n, n)).tocsr()
    P.sum_duplicates()
    P.sort_indices()
    return P


def starting_distribution(spec: GridSpec, kind="uniform") -> np.ndarray:
    """Initial distribution: ``"uniform"`` or a deterministic 1-based state."""
    n = spec.state_count
    if isinstance(kind, str):
        if kind != "uniform":
            raise DomainError(f"unknown start kind {kind!r}")
        return np.full(n, 1.0 / n)
    s = int(kind)
    _check_state(spec, s)
    pi = np.zeros(n)
    pi[s - 1] = 1.0
    return pi


def _validate_distribution(pi: np.ndarray, n: int) -> np.ndarray:
    pi = np.asarray(pi, dtype=float)
    if pi.shape != (n,):
        raise DomainError(f"distribution must have shape ({n},), got {pi.shape}")
    if np.any(pi < 0) or abs(pi.sum() - 1.0) > ROW_SUM_TOL:
        raise DomainError("distribution must be non-negative and sum to 1")
    return pi


@dataclass(frozen=True, eq=False)
class ChainModel:
    """Markov chain ``(E, start, transition)`` over the cells of a grid."""

    spec: GridSpec
    transition: sp.csr_array
    start: np.ndarray

    def __post_init__(self):
        n = self.spec.state_count
        P = sp.csr_array(self.transition, dtype=float)
        if P.shape != (n, n):
            raise DomainError(f"transition must be {n}x{n}, got {P.shape}")
        pi = _validate_distribution(self.start, n).copy()
        pi.flags.writeable = False
        object.__setattr__(self, "transition", P)
        object.__setattr__(self, "start", pi)

    @classmethod
    def from_spec(cls, spec: GridSpec, start="uniform") -> "ChainModel":
        return cls(spec, build_chain(spec), starting_distribution(spec, start))

    @property
    def n_states(self) -> int:
        return self.spec.state_count

    def with_start(self, start) -> "ChainModel":
        """Same transitions, new start (a kind accepted by
        :func:`starting_distribution` or an explicit probability vector)."""
        if isinstance(start, (str, int, np.integer)):
            start = starting_distribution(self.spec, start)
        return replace(self, start=start)

    def with_transition(self, transition) -> "ChainModel":
        return replace(self, transition=transition)


def propagate(model: ChainModel, n: int) -> np.ndarray:
    """Distribution after ``n`` steps, by ``n`` vector-matrix products."""
    if n < 0:
        raise DomainError("n must be non-negative")
    pi = np.array(model.start, dtype=float)
    PT = model.transition.T.tocsr()
    for _ in range(n):
        pi = PT @ pi
    return pi


def trajectory(model: ChainModel, n_max: int) -> np.ndarray:
    """Array of shape ``(n_max + 1, |E|)`` holding the distributions at 0..n_max."""
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    out = np.empty((n_max + 1, model.n_states))
    out[0] = model.start
    PT = model.transition.T.tocsr()
    for t in range(n_max):
        out[t + 1] = PT @ out[t]
    return out


def two_step_probability(model: ChainModel, source: int, target: int) -> float:
    """``P^2[source, target]`` via one sparse row-matrix product."""
    _check_state(model.spec, source)
    _check_state(model.spec, target)
    P = model.transition
    row = P[[source - 1], :] @ P
    return float(row[0, target - 1])


def make_absorbing(model: ChainModel, r: int) -> sp.csr_array:
    """Copy of the transition matrix whose row ``r`` is the unit row ``e_r``."""
    _check_state(model.spec, r)
    P = model.transition.tolil(copy=True)
    P.rows[r - 1] = [r - 1]
    P.data[r - 1] = [1.0]
    return sp.csr_array(P)


def check_stochastic(P, tol: float = ROW_SUM_TOL) -> bool:
    P = sp.csr_array(P)
    if P.nnz and (P.data.min() < 0 or P.data.max() > 1):
        return False
    return bool(np.all(np.abs(P.sum(axis=1) - 1.0) <= tol))
