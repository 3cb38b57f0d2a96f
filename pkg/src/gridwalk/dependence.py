"""Numeric checks of whether occupancy events of one state are independent.

The walk never stays put, so ``{X_t = z}`` and ``{X_{t+1} = z}`` cannot
both happen.  For events two steps apart, ``{X_m = z}`` and ``{X_{m+2} = z}``
are dependent exactly when ``0 < P(X_m = z) < 1`` and

    (1 - P(X_m = z)) * P^2(z, z)  !=  sum_{i != z} P(X_m = i) * P^2(i, z).
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

import numpy as np

from .chain import ChainModel, propagate, two_step_probability
from .errors import DomainError
from .lattice import _check_state

ZERO_TOL = 1e-12
EQUAL_TOL = 1e-10


class Verdict(enum.Enum):
    INDEPENDENT = "independent"
    DEPENDENT = "dependent"
    # P(X_m = z) = 0: the conditional probability is undefined and the
    # events are trivially independent.
    UNDEFINED_CONDITIONAL = "undefined-conditional"

    @property
    def independent(self) -> bool:
        return self is not Verdict.DEPENDENT


@dataclass(frozen=True)
class DependenceReport:
    state: int
    time: int
    p_m: float
    lhs: float
    rhs: float
    verdict: Verdict

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict.value
        return d


def check_two_step_dependence(model: ChainModel, z: int, m: int) -> DependenceReport:
    _check_state(model.spec, z)
    if m < 0:
        raise DomainError("m must be non-negative")
    pi = propagate(model, m)
    p_m = float(pi[z - 1])

    # column z of P^2, as P @ (P[:, z])
    P = model.transition
    col = P @ P[:, [z - 1]].toarray().ravel()
    lhs = (1.0 - p_m) * two_step_probability(model, z, z)
    others = np.delete(np.arange(model.n_states), z - 1)
    rhs = float(pi[others] @ col[others])

    if p_m <= ZERO_TOL:
        verdict = Verdict.UNDEFINED_CONDITIONAL
    elif p_m >= 1.0 - ZERO_TOL or abs(lhs - rhs) <= EQUAL_TOL:
        verdict = Verdict.INDEPENDENT
    else:
        verdict = Verdict.DEPENDENT
    return DependenceReport(z, m, p_m, lhs, rhs, verdict)


def check_successive_dependence(model: ChainModel, z: int, t: int) -> Verdict:
    """Dependent iff both ``P(X_t = z)`` and ``P(X_{t+1} = z)`` are positive.

    The joint probability is always zero because the diagonal of the
    transition matrix is zero.
    """
    _check_state(model.spec, z)
    if t < 0:
        raise DomainError("t must be non-negative")
    now = propagate(model, t)
    nxt = model.transition.T @ now
    if now[z - 1] > ZERO_TOL and nxt[z - 1] > ZERO_TOL:
        return Verdict.DEPENDENT
    return Verdict.INDEPENDENT


def complement_independence_check(p_a: float, p_b: float, p_ab: float, tol: float = 1e-12):
    """Return ``(A, B independent, A^c, B^c independent)``.

    The complement side is evaluated from its own algebra,
    ``P(A^c B^c) = 1 - P(A) - P(B) + P(AB)`` against ``(1 - P(A))(1 - P(B))``.
    """
    for name, v in (("pA", p_a), ("pB", p_b), ("pAB", p_ab)):
        if not 0.0 <= v <= 1.0:
            raise DomainError(f"{name}={v} is not a probability")
    if p_ab > min(p_a, p_b) + tol or p_a + p_b - p_ab > 1.0 + tol:
        raise DomainError(f"infeasible probabilities pA={p_a}, pB={p_b}, pAB={p_ab}")
    events = abs(p_ab - p_a * p_b) <= tol
    joint_c = 1.0 - (p_a + p_b - p_ab)
    product_c = (1.0 - p_a) * (1.0 - p_b)
    complements = abs(joint_c - product_c) <= tol
    return events, complements
