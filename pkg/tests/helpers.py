"""Shared samplers and brute-force oracles for the test suite."""

from __future__ import annotations

import numpy as np

from riscreen import GameParams, g_func, thresholds
from riscreen.ri_core import BinaryRIProblem

# canonical parameter point used across the suite
CANONICAL = dict(mu_hi=0.8, mu_lo=0.6, cost_C=0.07, lam=0.3)


def canonical(lam: float = 0.3) -> GameParams:
    return GameParams(0.8, 0.6, 0.07, lam)


def sample_assumption1(rng: np.random.Generator, lam: float = 1.0) -> GameParams:
    """Random parameters satisfying the regularity condition."""
    while True:
        mu_hi = rng.uniform(0.52, 0.97)
        lo_min = max(1.0 - mu_hi + 0.01, 0.05)
        if lo_min >= mu_hi - 0.01:
            continue
        mu_lo = rng.uniform(lo_min, mu_hi - 0.01)
        A = mu_hi * (1.0 - mu_lo)
        B = mu_lo * (1.0 - mu_hi)
        bound = mu_hi * (1.0 - mu_hi) / (A + B)
        c = rng.uniform(0.05, 0.95) * bound
        params = GameParams(mu_hi, mu_lo, c * (mu_hi - mu_lo), lam)
        if params.assumption1:
            return params


def sample_condition5(rng: np.random.Generator, lam: float = 1.0) -> GameParams:
    """Random regular parameters for which lambda_star < lambda_high."""
    while True:
        mu_hi = rng.uniform(0.55, 0.95)
        if mu_hi - 0.02 <= 0.505:
            continue
        mu_lo = rng.uniform(0.505, mu_hi - 0.02)
        A = mu_hi * (1.0 - mu_lo)
        B = mu_lo * (1.0 - mu_hi)
        bound = mu_hi * (1.0 - mu_hi) / (A + B)
        probe = GameParams(mu_hi, mu_lo, 0.4 * bound * (mu_hi - mu_lo), lam)
        cuts = thresholds(probe)
        if cuts.gamma_hat is None:
            continue
        floor = g_func(cuts.gamma_hat)
        if floor >= 0.98 * bound:
            continue
        c = rng.uniform(floor + 0.02 * (bound - floor), bound - 0.02 * (bound - floor))
        params = GameParams(mu_hi, mu_lo, c * (mu_hi - mu_lo), lam)
        cuts = thresholds(params)
        if params.assumption1 and cuts.condition5:
            return params


def random_interior_problem(rng: np.random.Generator) -> BinaryRIProblem:
    """Random interior problem with 3-5 states, |advantage| <= 2, lam in [.05, 5]."""
    from riscreen.ri_core import INTERIOR, degeneracy_check

    while True:
        n = int(rng.integers(3, 6))
        raw = rng.dirichlet(np.ones(n) * 2.0)
        prior = raw / raw.sum()
        adv = rng.uniform(-2.0, 2.0, size=n)
        lam = rng.uniform(0.05, 5.0)
        problem = BinaryRIProblem(tuple(range(n)), tuple(prior), tuple(adv), lam)
        if degeneracy_check(problem) == INTERIOR:
            return problem


def _h(x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    m = (x > 0.0) & (x < 1.0)
    out[m] = x[m] * np.log(x[m]) + (1.0 - x[m]) * np.log1p(-x[m])
    return out


def grid_search_value(problem: BinaryRIProblem, step: float = 1e-4) -> tuple:
    """Best objective over the logit rule family on a uniform q_bar grid.

    Independent of the fixed-point solver: candidate rules are evaluated
    directly through E[q v] - lam * I, with I computed from the candidate's
    own (generally inconsistent) unconditional probability.
    """
    qs = np.arange(0.0, 1.0 + step / 2.0, step)
    p = np.asarray(problem.prior)
    v = np.asarray(problem.advantage)
    z = v / problem.lam
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        logodds = np.log(qs / (1.0 - qs))[:, None] + z[None, :]
        cond = 1.0 / (1.0 + np.exp(-logodds))
    cond[0, :] = 0.0
    cond[-1, :] = 1.0
    ubar = cond @ p
    info = _h(cond) @ p - _h(ubar)
    values = cond @ (p * v) - problem.lam * np.maximum(info, 0.0)
    best = int(np.argmax(values))
    return float(values[best]), float(qs[best])


def signal_win_probability_w(signal, mu_m: float, mu_w: float) -> float:
    """w's winning probability against a fixed signal, by state enumeration."""
    p_plus = mu_m * (1.0 - mu_w)
    p_minus = mu_w * (1.0 - mu_m)
    p_zero = 1.0 - p_plus - p_minus
    return (
        p_plus * (1.0 - signal.pi_plus)
        + p_zero * (1.0 - signal.pi_zero)
        + p_minus * (1.0 - signal.pi_minus)
    )


def _win_probability_m(signal, mu_m: float, mu_w: float) -> float:
    p_plus = mu_m * (1.0 - mu_w)
    p_minus = mu_w * (1.0 - mu_m)
    p_zero = 1.0 - p_plus - p_minus
    return p_plus * signal.pi_plus + p_zero * signal.pi_zero + p_minus * signal.pi_minus


def direct_ic_equilibria(params: GameParams, tol: float = 1e-12) -> list:
    """Profiles surviving a from-scratch incentive check at their optimal signals.

    The check enumerates each agent's winning probability at both own effort
    levels directly over the three states, bypassing the X/Y algebra, and
    compares the utility difference against the effort cost.
    """
    from riscreen import HI, LO, PROFILES, optimal_signal

    mu = {HI: params.mu_hi, LO: params.mu_lo}
    out = []
    for profile in PROFILES:
        sig = optimal_signal(params, profile)
        e_m, e_w = profile
        util_m = {
            e: _win_probability_m(sig, mu[e], mu[e_w]) - (params.cost_C if e == HI else 0.0)
            for e in (HI, LO)
        }
        util_w = {
            e: signal_win_probability_w(sig, mu[e_m], mu[e]) - (params.cost_C if e == HI else 0.0)
            for e in (HI, LO)
        }
        if util_m[e_m] >= util_m[(LO if e_m == HI else HI)] - tol and util_w[e_w] >= util_w[
            (LO if e_w == HI else HI)
        ] - tol:
            out.append(profile)
    return out
