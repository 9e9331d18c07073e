"""Solver for binary-action rational inattention problems on a finite state space.

A decision maker picks action 1 or action 0 after processing costly
information about an unknown state s. ``advantage[s]`` is the payoff gain
from action 1 over action 0 in state s, and information carries a price of
``lam`` utils per nat of mutual information between the state and the
action taken.

The optimal policy is a conditional action probability q(s). It is either
degenerate (q identically 0 or 1, zero information) or interior, in which
case it follows a two-point logit in the unconditional action probability
q_bar:

    q(s) = q_bar * exp(v(s)/lam) / (q_bar * exp(v(s)/lam) + 1 - q_bar)

with q_bar pinned down by consistency with the prior,
sum_s p(s) q(s) = q_bar. The consistency equation has a unique interior
root, which we locate by bisection. Everything here works in natural
logarithms; information is measured in nats.

All values are immutable after construction and every function is pure, so
problems and rules can be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

ALWAYS_ACT1 = "always_act1"
ALWAYS_ACT0 = "always_act0"
INTERIOR = "interior"

#: |sum(prior) - 1| must stay below this.
PRIOR_TOL = 1e-12
#: default residual tolerance for the q_bar fixed point
RESIDUAL_TOL = 1e-10
#: default iteration budget for the bisection
MAX_STEPS = 200
#: bracket inset keeping the bisection away from the q_bar = 0, 1 corners
_EDGE = 1e-12


class ConvergenceError(RuntimeError):
    """The fixed-point search ran out of budget; the message reports the residual."""


def _exp(z: float) -> float:
    """exp that saturates to +inf instead of raising on overflow."""
    try:
        return math.exp(z)
    except OverflowError:
        return math.inf


def _sigmoid(t: float) -> float:
    """Numerically stable 1 / (1 + exp(-t))."""
    if t >= 0.0:
        return 1.0 / (1.0 + math.exp(-t))
    e = math.exp(t)
    return e / (1.0 + e)


def neg_entropy(x: float) -> float:
    """Negative Shannon entropy x*ln(x) + (1-x)*ln(1-x) of a coin with bias x.

    Uses the continuity convention 0*ln(0) = 0, so the boundary values are 0;
    the minimum -ln(2) is attained at x = 1/2. Raises ValueError outside [0, 1].
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"probability outside [0, 1]: {x!r}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return x * math.log(x) + (1.0 - x) * math.log1p(-x)


@dataclass(frozen=True)
class BinaryRIProblem:
    """A finite-state decision problem with two actions and a mutual-information cost.

    states:    ordered labels, kept only for reporting
    prior:     probability of each state, sums to one
    advantage: payoff gain of action 1 over action 0, per state
    lam:       price of information in utils per nat, strictly positive
    """

    states: tuple
    prior: tuple
    advantage: tuple
    lam: float

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "prior", tuple(float(p) for p in self.prior))
        object.__setattr__(self, "advantage", tuple(float(v) for v in self.advantage))
        n = len(self.states)
        if n < 2:
            raise ValueError("need at least two states")
        if len(self.prior) != n or len(self.advantage) != n:
            raise ValueError("states, prior and advantage must have equal length")
        for p in self.prior:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"prior entry outside [0, 1]: {p!r}")
        if abs(sum(self.prior) - 1.0) > PRIOR_TOL:
            raise ValueError(f"prior sums to {sum(self.prior)!r}, not 1")
        for v in self.advantage:
            if not math.isfinite(v):
                raise ValueError(f"advantage must be finite, got {v!r}")
        if not (self.lam > 0.0 and math.isfinite(self.lam)):
            raise ValueError(f"lam must be strictly positive, got {self.lam!r}")


@dataclass(frozen=True)
class ChoiceRule:
    """Solution of a :class:`BinaryRIProblem`.

    conditional:   probability of action 1 in each state
    unconditional: prior-weighted average action-1 probability (q_bar)
    degenerate:    True when the rule is constant at 0 or 1
    info_cost:     mutual information of the rule in nats (0 when degenerate)
    """

    conditional: tuple
    unconditional: float
    degenerate: bool
    info_cost: float

    def __post_init__(self):
        object.__setattr__(self, "conditional", tuple(float(q) for q in self.conditional))
        for q in self.conditional:
            if not 0.0 <= q <= 1.0:
                raise ValueError(f"conditional outside [0, 1]: {q!r}")
        if self.info_cost < 0.0:
            raise ValueError("info_cost must be nonnegative")
        if self.degenerate and self.info_cost != 0.0:
            raise ValueError("degenerate rules carry zero information")


def mutual_information(prior: Sequence[float], rule: Union["ChoiceRule", Sequence[float]]) -> float:
    """Mutual information, in nats, between the state and the action.

    Equals sum_s p(s) h(q(s)) - h(q_bar) with h = :func:`neg_entropy` and
    q_bar the prior-weighted mean of the conditionals. Nonnegative, and zero
    exactly when all conditionals coincide.
    """
    cond = rule.conditional if isinstance(rule, ChoiceRule) else rule
    if len(cond) != len(prior):
        raise ValueError("prior and conditional must have equal length")
    q_bar = sum(p * q for p, q in zip(prior, cond))
    value = sum(p * neg_entropy(q) for p, q in zip(prior, cond)) - neg_entropy(min(max(q_bar, 0.0), 1.0))
    # clamp the tiny negative dust that floating point leaves behind
    return value if value > 0.0 else 0.0


def degeneracy_check(problem: BinaryRIProblem) -> str:
    """Classify the optimum as a corner or an interior rule.

    Action 1 is taken unconditionally when E[exp(-v(s)/lam)] <= 1, action 0
    when E[exp(v(s)/lam)] <= 1; otherwise the optimum is interior.
    """
    lam = problem.lam
    down = sum(p * _exp(-v / lam) for p, v in zip(problem.prior, problem.advantage))
    if down <= 1.0:
        return ALWAYS_ACT1
    up = sum(p * _exp(v / lam) for p, v in zip(problem.prior, problem.advantage))
    if up <= 1.0:
        return ALWAYS_ACT0
    return INTERIOR


def _conditionals(problem: BinaryRIProblem, q_bar: float) -> tuple:
    """Logit conditionals at a candidate unconditional probability q_bar."""
    base = math.log(q_bar / (1.0 - q_bar))
    return tuple(_sigmoid(base + v / problem.lam) for v in problem.advantage)


def _consistency_residual(problem: BinaryRIProblem, q_bar: float) -> float:
    """sum_s p(s) q(s | q_bar) - q_bar; the interior optimum is its root."""
    cond = _conditionals(problem, q_bar)
    return sum(p * q for p, q in zip(problem.prior, cond)) - q_bar


def solve_binary_ri(
    problem: BinaryRIProblem,
    residual_tol: float = RESIDUAL_TOL,
    max_steps: int = MAX_STEPS,
) -> ChoiceRule:
    """Solve the problem and return the optimal :class:`ChoiceRule`.

    Degenerate problems return the corresponding constant rule at zero
    information cost. Interior problems are solved by bisecting the
    consistency residual on [1e-12, 1 - 1e-12]; the map is continuous with a
    unique interior root, so bisection cannot miss it. Raises
    :class:`ConvergenceError` if the residual still exceeds ``residual_tol``
    after ``max_steps`` bisection steps, which flags an ill-conditioned
    advantage/lam combination.
    """
    n = len(problem.prior)
    corner = degeneracy_check(problem)
    if corner == ALWAYS_ACT1:
        return ChoiceRule((1.0,) * n, 1.0, True, 0.0)
    if corner == ALWAYS_ACT0:
        return ChoiceRule((0.0,) * n, 0.0, True, 0.0)

    lo, hi = _EDGE, 1.0 - _EDGE
    f_lo = _consistency_residual(problem, lo)
    q_bar = 0.5 * (lo + hi)
    for _ in range(max_steps):
        q_bar = 0.5 * (lo + hi)
        f_mid = _consistency_residual(problem, q_bar)
        if f_mid == 0.0 or hi - lo <= 1e-14:
            break
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = q_bar, f_mid
        else:
            hi = q_bar
    residual = abs(_consistency_residual(problem, q_bar))
    if residual > residual_tol:
        raise ConvergenceError(
            f"consistency residual {residual:.3e} above {residual_tol:.1e} "
            f"after {max_steps} bisection steps (lam={problem.lam!r})"
        )
    cond = _conditionals(problem, q_bar)
    return ChoiceRule(cond, q_bar, False, mutual_information(problem.prior, cond))


def objective_value(problem: BinaryRIProblem, rule: Union["ChoiceRule", Sequence[float]]) -> float:
    """Expected gain net of information cost, E[q(s) v(s)] - lam * I."""
    cond = rule.conditional if isinstance(rule, ChoiceRule) else rule
    gain = sum(p * q * v for p, q, v in zip(problem.prior, cond, problem.advantage))
    return gain - problem.lam * mutual_information(problem.prior, cond)
