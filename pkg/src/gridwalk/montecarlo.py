"""Monte Carlo rollouts and a brute-force path-enumeration oracle."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._parallel import ordered_map
from .chain import ChainModel
from .coverage import CoverageCurve, Method
from .errors import DomainError, ResourceError

# Replications per RNG stream.  Fixed so results never depend on threading.
BLOCK_REPLICATIONS = 8192

# Budget for brute-force enumeration, in weighted path-steps.
BRUTE_FORCE_LIMIT = 10**8

# Frontier size at which the enumeration splits into depth-first chunks.
_FRONTIER_CHUNK = 1 << 18


@dataclass(frozen=True, eq=False)
class SimConfig:
    model: ChainModel
    n_max: int
    replications: int
    uav_count: int = 1
    seed: int = 0
    track_first_arrivals: bool = False

    def __post_init__(self):
        if self.n_max < 0:
            raise DomainError("n_max must be non-negative")
        if self.replications < 1:
            raise DomainError("replications must be at least 1")
        if self.uav_count < 1:
            raise DomainError("uav_count must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True, eq=False)
class SimResult:
    curve: CoverageCurve
    stderr: np.ndarray
    seed: int
    replications: int
    uav_count: int
    # counts[r-1, t]: replications whose first visit to state r happened at step t
    first_arrival_counts: np.ndarray | None = field(default=None)

    @property
    def mean(self) -> np.ndarray:
        return self.curve.values

    def first_arrival_cdf(self, r: int) -> np.ndarray:
        if self.first_arrival_counts is None:
            raise DomainError("simulation ran without first-arrival tracking")
        return np.cumsum(self.first_arrival_counts[r - 1]) / self.replications


def _sampling_tables(P):
    """Dense ``(|E|, max_deg)`` tables of neighbour ids and cumulative probabilities."""
    P = P.tocsr()
    n = P.shape[0]
    deg = np.diff(P.indptr)
    width = int(deg.max())
    nbr = np.zeros((n, width), dtype=np.intp)
    cum = np.full((n, width), np.inf)
    for s in range(n):
        lo, hi = P.indptr[s], P.indptr[s + 1]
        nbr[s, : hi - lo] = P.indices[lo:hi]
        nbr[s, hi - lo :] = P.indices[hi - 1] if hi > lo else s
        cum[s, : hi - lo] = np.cumsum(P.data[lo:hi])
    return nbr, cum, deg


def _run_block(args):
    cfg, block, size, tables = args
    nbr, cum, deg = tables
    n = cfg.model.n_states
    k = cfg.uav_count
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(cfg.seed, spawn_key=(block,))))

    start_cdf = np.cumsum(cfg.model.start)
    u = rng.random((size, k))
    pos = np.minimum(np.searchsorted(start_cdf, u, side="right"), n - 1)
    # zero-probability states can be hit by the clamp only if start_cdf[-1] < 1
    pos = np.where(cfg.model.start[pos] > 0, pos, np.argmax(cfg.model.start > 0))

    rows = np.arange(size)
    visited = np.zeros((size, n), dtype=bool)
    counts = np.zeros(size, dtype=np.int64)
    first = np.zeros((n, cfg.n_max + 1), dtype=np.int64) if cfg.track_first_arrivals else None

    sums = np.zeros(cfg.n_max + 1, dtype=np.int64)
    squares = np.zeros(cfg.n_max + 1, dtype=np.int64)

    def mark(t):
        for a in range(k):
            p = pos[:, a]
            fresh = ~visited[rows, p]
            visited[rows, p] = True
            counts[:] += fresh
            if first is not None:
                np.add.at(first[:, t], p[fresh], 1)
        sums[t] = counts.sum()
        squares[t] = (counts * counts).sum()

    mark(0)
    for t in range(1, cfg.n_max + 1):
        u = rng.random((size, k))
        j = (cum[pos] <= u[..., None]).sum(axis=-1)
        j = np.minimum(j, deg[pos] - 1)
        pos = nbr[pos, j]
        mark(t)
    return sums, squares, first


def simulate_coverage(cfg: SimConfig, threads=None) -> SimResult:
    """Roll out ``cfg.replications`` independent runs of ``cfg.uav_count`` agents.

    Each replication records the number of distinct states visited by any
    agent after every step.  Replications are grouped into fixed blocks with
    one RNG stream per ``(seed, block)``; integer tallies are reduced in
    block order, so the output is reproducible for any thread count.
    """
    tables = _sampling_tables(cfg.model.transition)
    R = cfg.replications
    jobs = []
    for block, lo in enumerate(range(0, R, BLOCK_REPLICATIONS)):
        jobs.append((cfg, block, min(BLOCK_REPLICATIONS, R - lo), tables))
    parts = ordered_map(_run_block, jobs, threads)

    sums = np.zeros(cfg.n_max + 1, dtype=object)
    squares = np.zeros(cfg.n_max + 1, dtype=object)
    first = None
    for s, q, f in parts:
        sums += s.astype(object)
        squares += q.astype(object)
        if f is not None:
            first = f if first is None else first + f

    n = cfg.model.n_states
    mean = np.array([float(s) / (R * n) for s in sums])
    if R > 1:
        # exact integer numerator of the sample variance of the counts
        var = np.array([float(R * q - s * s) / (R * (R - 1) * n * n) for s, q in zip(sums, squares)])
        stderr = np.sqrt(np.maximum(var, 0.0) / R)
    else:
        stderr = np.zeros(cfg.n_max + 1)
    curve = CoverageCurve(Method.MONTE_CARLO, mean, uav_count=cfg.uav_count)
    return SimResult(curve, stderr, cfg.seed, R, cfg.uav_count, first)


def brute_force_coverage(model: ChainModel, n_max: int, limit: int = BRUTE_FORCE_LIMIT) -> CoverageCurve:
    """Expected coverage by enumerating every path of length ``n_max``.

    Each path from a start state with positive mass is weighted by its
    probability; the visited set is carried as a bitmask, so grids are
    limited to 64 states.
    """
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    P = model.transition.tocsr()
    n = model.n_states
    branching = int(np.diff(P.indptr).max())
    bound = n * branching**n_max
    if bound > limit:
        raise ResourceError(f"brute force needs up to {bound} path-steps, limit is {limit}")
    if n > 64:
        raise ResourceError(f"brute force supports at most 64 states, got {n}")

    bits = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    expected = np.zeros(n_max + 1)

    starts = np.flatnonzero(model.start > 0)
    stack = [(0, starts.astype(np.intp), model.start[starts].astype(float), bits[starts])]
    while stack:
        depth, state, weight, mask = stack.pop()
        if len(state) > _FRONTIER_CHUNK:
            for i in range(0, len(state), _FRONTIER_CHUNK):
                sl = slice(i, i + _FRONTIER_CHUNK)
                stack.append((depth, state[sl], weight[sl], mask[sl]))
            continue
        expected[depth] += weight @ np.bitwise_count(mask).astype(float)
        if depth == n_max:
            continue
        lo, hi = P.indptr[state], P.indptr[state + 1]
        nnz = hi - lo
        parent = np.repeat(np.arange(len(state)), nnz)
        offs = np.arange(nnz.sum()) - np.repeat(np.cumsum(nnz) - nnz, nnz)
        entry = lo[parent] + offs
        nxt = P.indices[entry].astype(np.intp)
        stack.append((depth + 1, nxt, weight[parent] * P.data[entry], mask[parent] | bits[nxt]))
    return CoverageCurve(Method.EXACT, expected / n)


def agreement_scores(exact, mean, stderr, floor: float = 1e-12) -> np.ndarray:
    """``|exact - mean| / stderr`` per step.

    Where the estimate has zero spread the score is 0 if the two agree to
    ``floor`` (round-off in the exact sum) and ``inf`` otherwise.
    """
    diff = np.abs(np.asarray(exact) - np.asarray(mean))
    stderr = np.asarray(stderr)
    with np.errstate(divide="ignore", invalid="ignore"):
        z = np.where(stderr > 0, diff / np.where(stderr > 0, stderr, 1.0), 0.0)
    return np.where((stderr == 0) & (diff > floor), np.inf, z)
