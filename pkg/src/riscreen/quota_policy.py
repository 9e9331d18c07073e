"""Promotion quota analysis: equal average promotion probability for m and w.

A binding quota pi_bar = 1/2 acts like a per-promotion subsidy: the
principal screens with advantage d - nu instead of d, where nu is the
multiplier of the quota constraint. nu is zero when efforts are symmetric,
positive when m works harder, negative in the mirror case. The quota kills
exactly the discriminatory equilibria and leaves the impartial ones alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import ri_core
from .baseline_game import (
    DISCRIMINATORY,
    HI,
    IMPARTIAL,
    PROFILES,
    BracketError,
    EquilibriumRecord,
    GameParams,
    PromotionSignal,
    optimal_signal,
    state_distribution,
    supports_profile,
)

#: |pi_bar - 1/2| at the returned multiplier must be below this
QUOTA_TOL = 1e-9


@dataclass(frozen=True)
class QuotaSolution:
    """Multiplier nu, the signal it induces, and whether the quota binds."""

    nu: float
    signal: PromotionSignal
    binding: bool


def subsidized_signal(params: GameParams, profile: tuple, nu: float) -> PromotionSignal:
    """Optimal signal when promoting m is taxed by nu (advantage d - nu)."""
    dist = state_distribution(params, profile)
    problem = ri_core.BinaryRIProblem(
        states=(-1, 0, 1),
        prior=dist.as_tuple(),
        advantage=(-1.0 - nu, -nu, 1.0 - nu),
        lam=params.lam,
    )
    rule = ri_core.solve_binary_ri(problem)
    q = rule.conditional
    return PromotionSignal(q[0], q[1], q[2], rule.unconditional)


def _quota_residual(params: GameParams, profile: tuple, nu: float) -> float:
    """Average promotion probability at the binding quota, minus 1/2.

    When the quota binds, the interior rule has unconditional probability
    exactly 1/2 and conditionals sigmoid((d - nu)/lam), so nu solves the
    single consistency equation sum_d p(d) sigmoid((d - nu)/lam) = 1/2.
    Strictly decreasing in nu.
    """
    dist = state_distribution(params, profile)
    lam = params.lam
    total = sum(
        p * ri_core._sigmoid((d - nu) / lam)
        for p, d in zip(dist.as_tuple(), (-1.0, 0.0, 1.0))
    )
    return total - 0.5


def find_multiplier(params: GameParams, profile: tuple) -> QuotaSolution:
    """Multiplier nu making the average promotion probability exactly 1/2.

    Symmetric profiles need no subsidy (complementary slackness: nu = 0).
    Otherwise nu is bisected out of the consistency equation above, starting
    from [-10, 10] and doubling the bracket until the residual changes sign;
    the returned signal is re-derived through :func:`subsidized_signal` and
    checked against the quota to QUOTA_TOL.
    """
    e_m, e_w = profile
    if e_m == e_w:
        return QuotaSolution(0.0, optimal_signal(params, profile), True)
    lo, hi = -10.0, 10.0
    f_lo = _quota_residual(params, profile, lo)
    f_hi = _quota_residual(params, profile, hi)
    expansions = 0
    while f_lo < 0.0 or f_hi > 0.0:
        lo *= 2.0
        hi *= 2.0
        f_lo = _quota_residual(params, profile, lo)
        f_hi = _quota_residual(params, profile, hi)
        expansions += 1
        if expansions > 60:
            raise BracketError(
                f"quota residual has no sign change on [{lo!r}, {hi!r}] "
                f"for profile {profile!r}"
            )
    for _ in range(200):
        nu = 0.5 * (lo + hi)
        res = _quota_residual(params, profile, nu)
        if res == 0.0 or hi - lo <= 1e-15:
            break
        if res > 0.0:
            lo = nu
        else:
            hi = nu
    nu = 0.5 * (lo + hi)
    signal = subsidized_signal(params, profile, nu)
    if abs(signal.pi_bar - 0.5) > QUOTA_TOL:
        raise BracketError(
            f"quota not met at nu={nu!r}: pi_bar={signal.pi_bar!r}"
        )
    return QuotaSolution(nu, signal, True)


def _quota_record(params: GameParams, profile: tuple, signal: PromotionSignal) -> EquilibriumRecord:
    dist = state_distribution(params, profile)
    V = (
        sum(p * q * d for p, q, d in zip(dist.as_tuple(), signal.as_tuple(), (-1.0, 0.0, 1.0)))
        + params.mu(profile[1])
    )
    I = ri_core.mutual_information(dist.as_tuple(), signal.as_tuple())
    e_m, e_w = profile
    u_m = signal.pi_bar - (params.cost_C if e_m == HI else 0.0)
    u_w = (1.0 - signal.pi_bar) - (params.cost_C if e_w == HI else 0.0)
    return EquilibriumRecord(
        profile=profile,
        signal=signal,
        classification=IMPARTIAL if signal.impartial else DISCRIMINATORY,
        revenue=V,
        info_cost=I,
        profit=V - params.lam * I,
        utility_m=u_m,
        utility_w=u_w,
    )


def quota_equilibrium_set(params: GameParams) -> list:
    """Equilibria of the game with the quota in force.

    Coincides with the impartial equilibria of the unconstrained game: a
    quota-constrained signal for an asymmetric profile has X > Y > 0, and
    with mu_hi + mu_lo > 1 such a signal cannot satisfy the worker's and the
    shirker's incentive constraints at once. The case mu_hi + mu_lo <= 1 is
    not characterized and is refused.
    """
    if not params.mu_hi + params.mu_lo > 1.0:
        raise ValueError(
            "quota analysis requires mu_hi + mu_lo > 1 "
            f"(got {params.mu_hi + params.mu_lo!r})"
        )
    found = []
    for profile in PROFILES:
        solution = find_multiplier(params, profile)
        if supports_profile(params, solution.signal, profile):
            found.append(_quota_record(params, profile, solution.signal))
    return found


def shape_ratio(params: GameParams, nu: float) -> float:
    """Closed-form X/Y of a binding quota signal at multiplier nu.

    Equals (exp((nu+1)/lam) + 1) / (exp(1/lam) + exp(nu/lam)), which exceeds
    one whenever nu > 0: the quota-constrained screen favors w unless m is
    strictly more productive.
    """
    lam = params.lam
    return (math.exp((nu + 1.0) / lam) + 1.0) / (math.exp(1.0 / lam) + math.exp(nu / lam))
