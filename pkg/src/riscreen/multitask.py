"""Two-task extension: skill-specific investments and task assignment.

Tasks arrive exclusively (one at a time) with probabilities alpha^t, pay the
assigned agent beta^t, and are screened through separate signals. Incentives
are additively separable across tasks, so each task reduces to a copy of the
baseline promotion game with effective cost c^t = C^t / (alpha^t beta^t
delta_mu); a joint investment profile is an equilibrium exactly when each
task's effort pair is an equilibrium of its own per-task game.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .baseline_game import (
    HI,
    LO,
    GameParams,
    optimal_signal,
    profit,
    supports_profile,
)

NON_SPECIALIZED = "non-specialized"
SPECIALIZED = "specialized"
HYBRID = "hybrid"

_EFFORTS = (HI, LO)


@dataclass(frozen=True)
class TaskParams:
    """One task: arrival probability alpha in (0, 1/2], reward beta > 0, cost."""

    alpha: float
    beta: float
    cost_C: float

    def __post_init__(self):
        if not 0.0 < self.alpha <= 0.5:
            raise ValueError(f"alpha must lie in (0, 1/2], got {self.alpha!r}")
        if not self.beta > 0.0:
            raise ValueError(f"beta must be positive, got {self.beta!r}")
        if not self.cost_C > 0.0:
            raise ValueError(f"cost_C must be positive, got {self.cost_C!r}")

    def effective_cost(self, delta_mu: float) -> float:
        """c^t = C^t / (alpha^t beta^t delta_mu), the per-task analog of c."""
        return self.cost_C / (self.alpha * self.beta * delta_mu)


@dataclass(frozen=True)
class MultitaskRecord:
    """A joint equilibrium: per-agent investment vectors, one entry per task."""

    investment_m: tuple
    investment_w: tuple
    classification: str
    payoff: float
    signals: tuple

    def task_profile(self, t: int) -> tuple:
        return (self.investment_m[t], self.investment_w[t])


def _validate(game: GameParams, tasks: tuple) -> tuple:
    if len(tasks) != 2:
        raise ValueError("exactly two tasks are supported")
    t1, t2 = tasks
    if t1.alpha + t2.alpha > 1.0 + 1e-12:
        raise ValueError("arrival probabilities must satisfy alpha1 + alpha2 <= 1")
    c1 = t1.effective_cost(game.delta_mu)
    c2 = t2.effective_cost(game.delta_mu)
    if c1 > c2 + 1e-12:
        raise ValueError(
            f"tasks must be ordered by effective cost, got c1={c1!r} > c2={c2!r}"
        )
    return c1, c2


def task_games(game: GameParams, tasks: tuple) -> tuple:
    """Per-task copies of the baseline game with cost_C set to c^t delta_mu.

    game.cost_C itself is ignored; each task carries its own cost.
    """
    c1, c2 = _validate(game, tasks)
    return (
        replace(game, cost_C=c1 * game.delta_mu),
        replace(game, cost_C=c2 * game.delta_mu),
    )


def _classify(inv_m: tuple, inv_w: tuple) -> str:
    if inv_m == inv_w:
        return NON_SPECIALIZED
    split = {((HI, LO), (LO, HI)), ((LO, HI), (HI, LO))}
    if (inv_m, inv_w) in split:
        return SPECIALIZED
    return HYBRID


def multitask_equilibrium_set(game: GameParams, tasks: tuple) -> list:
    """All joint pure equilibria over the 16 investment profiles.

    One-step deviations are all that need deterring (task payoffs are
    additively separable), so the check is per task: the task-t effort pair
    must survive both incentive constraints of the task-t game. The
    principal's payoff adds the per-task profits weighted by arrivals,
    sum_t alpha^t (V_t - lam I_t).
    """
    games = task_games(game, tasks)
    found = []
    for m1 in _EFFORTS:
        for m2 in _EFFORTS:
            for w1 in _EFFORTS:
                for w2 in _EFFORTS:
                    inv_m, inv_w = (m1, m2), (w1, w2)
                    profiles = ((m1, w1), (m2, w2))
                    signals = tuple(
                        optimal_signal(games[t], profiles[t]) for t in range(2)
                    )
                    if not all(
                        supports_profile(games[t], signals[t], profiles[t])
                        for t in range(2)
                    ):
                        continue
                    payoff = sum(
                        tasks[t].alpha * profit(game, profiles[t]).profit
                        for t in range(2)
                    )
                    found.append(
                        MultitaskRecord(
                            investment_m=inv_m,
                            investment_w=inv_w,
                            classification=_classify(inv_m, inv_w),
                            payoff=payoff,
                            signals=signals,
                        )
                    )
    return found


def multitask_most_profitable(game: GameParams, tasks: tuple) -> list:
    """Most profitable of the specialized and non-specialized equilibria.

    Requires alpha1 = alpha2; the profitability ranking is only meaningful
    with equal arrival rates. Other equilibria (one agent carrying both
    skills, say) are enumerated by :func:`multitask_equilibrium_set` but sit
    outside the ranking's scope and can out-earn both ranked classes.
    Mirror specialized equilibria tie, so the list can have two entries.
    """
    if abs(tasks[0].alpha - tasks[1].alpha) > 1e-12:
        raise ValueError("profitability ranking requires alpha1 = alpha2")
    records = [
        r
        for r in multitask_equilibrium_set(game, tasks)
        if r.classification in (SPECIALIZED, NON_SPECIALIZED)
    ]
    if not records:
        return []
    best = max(r.payoff for r in records)
    return [r for r in records if r.payoff >= best - 1e-12]
