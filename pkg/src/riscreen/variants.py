"""Model variants: heterogeneous agents, commitment, prior-invariant cost,
mixed strategies, and a continuous effort grid.

Each variant perturbs one ingredient of the baseline promotion game and
reuses its machinery wherever the logic carries over unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import ri_core
from .baseline_game import (
    AGENT_M,
    AGENT_W,
    DISCRIMINATORY,
    HI,
    IMPARTIAL,
    LO,
    EquilibriumRecord,
    GameParams,
    PromotionSignal,
    f_inverse,
    g_inverse,
    incentive_gain,
    optimal_signal,
    profit,
    state_distribution,
    supports_profile,
    thresholds,
)

_IC_TOL = 1e-12


# ---------------------------------------------------------------------------
# heterogeneous effort costs and risk aversion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HeterogeneousParams:
    """Per-agent effort costs and promotion utility gains.

    Risk aversion enters only through the utility gain du_i = u_i(1) - u_i(0)
    from promotion, so it rescales the incentive constraint the same way an
    effort cost does: the effective cost is c_i = (C_i / delta_mu) / du_i.
    Labeling convention: m is the agent with the weakly lower effective cost.
    """

    cost_m: float
    cost_w: float
    du_m: float = 1.0
    du_w: float = 1.0

    def __post_init__(self):
        for name in ("cost_m", "cost_w", "du_m", "du_w"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive")

    def effective_costs(self, delta_mu: float) -> tuple:
        c_m = self.cost_m / delta_mu / self.du_m
        c_w = self.cost_w / delta_mu / self.du_w
        if c_m > c_w + 1e-12:
            raise ValueError(
                f"label agents so the effective cost of m is lower, got "
                f"c_m={c_m!r} > c_w={c_w!r}"
            )
        return c_m, c_w


def _gamma_star(c: float) -> float:
    return g_inverse(min(c, 0.5))


def _gamma_window(params: GameParams, c_work: float, c_shirk: float) -> tuple:
    """gamma range sustaining (worker, shirker) = (hi, lo) at costs (c_work, c_shirk).

    The worker's constraint needs the outperform bonus X = f(gamma) to reach
    X_low(c_work) = c_work (1-mu_hi)/(1-mu_lo); the shirker's needs it to stay
    below X_high(c_shirk) = c_shirk mu_lo / mu_hi. Either bound can be
    unattainable (f is capped at B/(A+B)), in which case the corresponding
    endpoint is +inf and the window may be empty for every finite gamma.
    """
    x_low = c_work * (1.0 - params.mu_hi) / (1.0 - params.mu_lo)
    x_high = c_shirk * params.mu_lo / params.mu_hi
    return f_inverse(params, x_low), f_inverse(params, x_high)


def _het_record(params: GameParams, profile: tuple, het: HeterogeneousParams) -> EquilibriumRecord:
    signal = optimal_signal(params, profile)
    pb = profit(params, profile)
    e_m, e_w = profile
    u_m = het.du_m * signal.pi_bar - (het.cost_m if e_m == HI else 0.0)
    u_w = het.du_w * (1.0 - signal.pi_bar) - (het.cost_w if e_w == HI else 0.0)
    return EquilibriumRecord(
        profile=profile,
        signal=signal,
        classification=IMPARTIAL if signal.impartial else DISCRIMINATORY,
        revenue=pb.V,
        info_cost=pb.I,
        profit=pb.profit,
        utility_m=u_m,
        utility_w=u_w,
    )


def heterogeneous_equilibrium_set(game: GameParams, het: HeterogeneousParams) -> list:
    """Equilibria when the agents differ in effort cost or risk aversion.

    Cost asymmetry leaves the principal's screening problem untouched and
    only shifts the incentive constraints, so the regimes are the baseline
    ones evaluated at per-agent effective costs:

      (hi, hi) iff gamma >= gamma*(c_w); (lo, lo) iff gamma <= gamma*(c_m);
      (hi, lo) iff gamma lies in the window at (c_m, c_w);
      (lo, hi) iff gamma lies in the window at (c_w, c_m).

    Window emptiness encodes the cost-ratio bounds: favoring the low-cost
    agent is possible whenever c_w/c_m >= mu_hi(1-mu_hi)/(mu_lo(1-mu_lo))
    (automatic under mu_hi + mu_lo > 1), favoring the high-cost agent needs
    the opposite strict inequality together with mu_hi + mu_lo > 1.
    """
    c_m, c_w = het.effective_costs(game.delta_mu)
    gamma = game.gamma
    found = []
    if gamma >= _gamma_star(c_w) * (1.0 - 1e-14):
        found.append(_het_record(game, (HI, HI), het))
    lo, hi = _gamma_window(game, c_m, c_w)
    if lo * (1.0 - 1e-14) <= gamma <= hi * (1.0 + 1e-14):
        found.append(_het_record(game, (HI, LO), het))
    lo, hi = _gamma_window(game, c_w, c_m)
    if lo * (1.0 - 1e-14) <= gamma <= hi * (1.0 + 1e-14):
        found.append(_het_record(game, (LO, HI), het))
    if gamma <= _gamma_star(c_m) * (1.0 + 1e-14):
        found.append(_het_record(game, (LO, LO), het))
    return found


# ---------------------------------------------------------------------------
# commitment to the screening rule
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CommitmentSolution:
    """Best committed screening rule and the effort profile it induces.

    nu_m is the multiplier on the binding incentive constraint (zero when no
    constraint binds), binding_agent names whose constraint binds, and
    candidates maps each feasible induced outcome to its profit.
    """

    nu_m: float
    signal: PromotionSignal
    induced_profile: tuple
    profit: float
    binding_agent: Optional[str]
    candidates: dict


def _constrained_high_signal(game: GameParams, nu: float, agent: str) -> PromotionSignal:
    """Optimal signal for (hi, hi) when `agent`'s incentive constraint is priced at nu.

    Folding the constraint into the objective tilts the advantage to
      v(1) = 1 + nu (1-mu)/p(1), v(0) = nu (2mu-1)/p(0), v(-1) = -1 - nu mu/p(-1)
    with mu = mu_hi for agent m; for agent w the weights mirror.
    """
    dist = state_distribution(game, (HI, HI))
    p_m, p_0, p_p = dist.as_tuple()
    mu = game.mu_hi
    if agent == AGENT_M:
        adv = (-1.0 - nu * mu / p_m, nu * (2.0 * mu - 1.0) / p_0, 1.0 + nu * (1.0 - mu) / p_p)
    else:
        adv = (-1.0 - nu * (1.0 - mu) / p_m, nu * (1.0 - 2.0 * mu) / p_0, 1.0 + nu * mu / p_p)
    problem = ri_core.BinaryRIProblem(
        states=(-1, 0, 1), prior=dist.as_tuple(), advantage=adv, lam=game.lam
    )
    rule = ri_core.solve_binary_ri(problem)
    q = rule.conditional
    return PromotionSignal(q[0], q[1], q[2], rule.unconditional)


def _signal_profit(game: GameParams, profile: tuple, signal: PromotionSignal) -> float:
    """Principal's profit from an arbitrary signal at a fixed effort profile."""
    dist = state_distribution(game, profile)
    V = (
        sum(p * q * d for p, q, d in zip(dist.as_tuple(), signal.as_tuple(), (-1.0, 0.0, 1.0)))
        + game.mu(profile[1])
    )
    return V - game.lam * ri_core.mutual_information(dist.as_tuple(), signal.as_tuple())


@dataclass(frozen=True)
class BindingHighSolution:
    """Root of the priced incentive constraint for inducing (hi, hi).

    other_ic_slack reports whether the unpriced agent still wants to work at
    the distorted signal; only then is the high profile actually induced.
    """

    agent: str
    nu: float
    signal: PromotionSignal
    profit: float
    other_ic_slack: bool


def bind_high_effort(game: GameParams, agent: str) -> Optional[BindingHighSolution]:
    """Search nu >= 0 until `agent`'s constraint holds with equality under (hi, hi).

    Returns None when the gain never reaches c on the expanding bracket
    (committing to high effort through this constraint is then infeasible).
    """
    c = game.c
    other = AGENT_W if agent == AGENT_M else AGENT_M

    def gain(nu: float) -> float:
        sig = _constrained_high_signal(game, nu, agent)
        return incentive_gain(game, sig, agent, HI)

    lo, f_lo = 0.0, gain(0.0) - c
    if f_lo < 0.0:
        hi = 1.0
        expansions = 0
        while gain(hi) - c < 0.0:
            hi *= 2.0
            expansions += 1
            if expansions > 50:
                return None
        for _ in range(200):
            nu = 0.5 * (lo + hi)
            f_mid = gain(nu) - c
            if abs(f_mid) <= 1e-11 or hi - lo <= 1e-13:
                break
            if f_mid < 0.0:
                lo = nu
            else:
                hi = nu
        nu = 0.5 * (lo + hi)
    else:
        nu = 0.0
    sig = _constrained_high_signal(game, nu, agent)
    slack = incentive_gain(game, sig, other, HI) >= c - 1e-9
    return BindingHighSolution(agent, nu, sig, _signal_profit(game, (HI, HI), sig), slack)


def commitment_solve(game: GameParams) -> CommitmentSolution:
    """Best outcome when the screening rule is announced before efforts.

    Below lambda_star the unconstrained impartial rule already induces
    (hi, hi) and nothing can beat it. Above, the committed principal picks
    the best of: (hi, hi) held together by one binding incentive constraint
    (priced at nu, which distorts the rule away from impartiality), the
    discriminatory (hi, lo) rule when it is self-enforcing, and the
    unconstrained (lo, lo) rule. Both choices of the bound agent are tried;
    by symmetry they tie, and m is reported.
    """
    cuts = thresholds(game)
    if game.lam <= cuts.lambda_star + 1e-15:
        signal = optimal_signal(game, (HI, HI))
        value = profit(game, (HI, HI)).profit
        return CommitmentSolution(
            0.0, signal, (HI, HI), value, None, {(HI, HI): value}
        )
    candidates = {}
    value = profit(game, (LO, LO)).profit
    candidates[(LO, LO)] = value
    best = ((LO, LO), optimal_signal(game, (LO, LO)), value, 0.0, None)

    disc_signal = optimal_signal(game, (HI, LO))
    if supports_profile(game, disc_signal, (HI, LO)):
        value = profit(game, (HI, LO)).profit
        candidates[(HI, LO)] = value
        if value > best[2]:
            best = ((HI, LO), disc_signal, value, 0.0, None)

    bound = None
    for agent in (AGENT_W, AGENT_M):  # m last so it wins the symmetric tie
        result = bind_high_effort(game, agent)
        if result is not None and result.other_ic_slack:
            if bound is None or result.profit >= bound.profit - 1e-12:
                bound = result
    if bound is not None:
        candidates[(HI, HI)] = bound.profit
        if bound.profit > best[2]:
            best = ((HI, HI), bound.signal, bound.profit, bound.nu, bound.agent)

    profile, signal, value, nu, agent = best
    return CommitmentSolution(nu, signal, profile, value, agent, candidates)


# ---------------------------------------------------------------------------
# prior-invariant attention cost
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReferencePriorProblem:
    """Screening with the information bill charged against a fixed reference prior.

    true_prior and reference_prior are distributions over d in (-1, 0, 1),
    stored in that order; the reference prior must have full support. The
    cost of a signal is its mutual information computed under the reference
    prior, so the bill no longer tracks the actual state distribution.
    """

    true_prior: tuple
    reference_prior: tuple
    lam: float

    def __post_init__(self):
        object.__setattr__(self, "true_prior", tuple(float(p) for p in self.true_prior))
        object.__setattr__(self, "reference_prior", tuple(float(q) for q in self.reference_prior))
        for dist in (self.true_prior, self.reference_prior):
            if len(dist) != 3:
                raise ValueError("priors live on the three differences (-1, 0, 1)")
            if any(p < 0.0 for p in dist) or abs(sum(dist) - 1.0) > 1e-12:
                raise ValueError(f"invalid distribution {dist!r}")
        if min(self.reference_prior) <= 0.0:
            raise ValueError("reference prior must have full support")
        if not self.lam > 0.0:
            raise ValueError("lam must be positive")

    @property
    def alpha(self) -> float:
        """exp(p(1) / (lam q(1))), the tilted odds factor of the good state."""
        return math.exp(self.true_prior[2] / (self.lam * self.reference_prior[2]))

    @property
    def beta(self) -> float:
        """exp(p(-1) / (lam q(-1))), the tilted odds factor of the bad state."""
        return math.exp(self.true_prior[0] / (self.lam * self.reference_prior[0]))


@dataclass(frozen=True)
class PriorInvariantResult:
    """pi_bar_q is the reference-prior average; signal is None off the interior."""

    pi_bar_q: float
    interior: bool
    signal: Optional[PromotionSignal]


def prior_invariant_signal(problem: ReferencePriorProblem) -> PriorInvariantResult:
    """Optimal signal under the prior-invariant cost, via its closed form.

    The interior solution is the logit tilted by (d/lam)(p(d)/q(d)) around
    the reference-prior average

      pi_bar_q = ((alpha-1) beta q(1) - (beta-1) q(-1))
                 / ((alpha-1)(beta-1)(q(1) + q(-1))),

    which must itself be consistent with the reference prior. A pi_bar_q
    outside (0, 1) (or a vanishing tilt) means the optimum is not interior;
    that case is flagged rather than guessed.
    """
    q_m, q_0, q_p = problem.reference_prior
    a, b = problem.alpha, problem.beta
    if abs(a - 1.0) < 1e-14 or abs(b - 1.0) < 1e-14:
        return PriorInvariantResult(math.nan, False, None)
    pi_bar_q = ((a - 1.0) * b * q_p - (b - 1.0) * q_m) / ((a - 1.0) * (b - 1.0) * (q_p + q_m))
    if not 0.0 < pi_bar_q < 1.0:
        return PriorInvariantResult(pi_bar_q, False, None)
    base = math.log(pi_bar_q / (1.0 - pi_bar_q))
    pi_p = ri_core._sigmoid(base + math.log(a))
    pi_m = ri_core._sigmoid(base - math.log(b))
    signal = PromotionSignal(pi_m, pi_bar_q, pi_p, pi_bar_q)
    residual = q_m * pi_m + q_0 * pi_bar_q + q_p * pi_p - pi_bar_q
    if abs(residual) > 1e-10:
        raise RuntimeError(f"reference-prior consistency violated: {residual!r}")
    return PriorInvariantResult(pi_bar_q, True, signal)


# ---------------------------------------------------------------------------
# mixed strategies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MixedProfile:
    """Probabilities of high effort; nu_m, nu_w are the success probabilities."""

    sigma_m: float
    sigma_w: float

    def nu(self, params: GameParams, which: str) -> float:
        sigma = self.sigma_m if which == AGENT_M else self.sigma_w
        return params.mu_lo + sigma * params.delta_mu


@dataclass(frozen=True)
class MixedEquilibrium:
    profile: MixedProfile
    signal: PromotionSignal
    classification: str


_SIGMA_EDGE = 1e-6


def _signal_for_success_probs(params: GameParams, nu_m: float, nu_w: float) -> Optional[PromotionSignal]:
    """Closed-form optimal signal when success probabilities are (nu_m, nu_w).

    Same algebra as the pure-profile case with A = nu_m (1 - nu_w) and
    B = nu_w (1 - nu_m), evaluated in r = exp(-1/lam). Returns None when the
    signal is degenerate (a degenerate signal provides no incentives, so it
    cannot hold an indifference condition).
    """
    r = math.exp(-1.0 / params.lam)
    A = nu_m * (1.0 - nu_w)
    B = nu_w * (1.0 - nu_m)
    if A <= r * B or B <= r * A:
        return None
    pi_bar = (A - r * B) / ((1.0 - r) * (A + B))
    pi_plus = (A - r * B) / ((1.0 - r * r) * A)
    pi_minus = r * (A - r * B) / ((1.0 - r * r) * B)
    return PromotionSignal(pi_minus, pi_bar, pi_plus, pi_bar)


def _scan_roots(func, lo: float, hi: float, samples: int = 400) -> list:
    """All sign-change roots of a continuous scalar function on [lo, hi]."""
    xs = [lo + (hi - lo) * i / (samples - 1) for i in range(samples)]
    vals = [func(x) for x in xs]
    roots = []
    for i in range(samples - 1):
        v0, v1 = vals[i], vals[i + 1]
        if v0 == 0.0:
            roots.append(xs[i])
            continue
        if v0 * v1 < 0.0:
            a, b, fa = xs[i], xs[i + 1], v0
            for _ in range(100):
                mid = 0.5 * (a + b)
                fm = func(mid)
                if fm == 0.0 or b - a <= 1e-13:
                    break
                if (fm > 0.0) == (fa > 0.0):
                    a, fa = mid, fm
                else:
                    b = mid
            roots.append(0.5 * (a + b))
    if vals[-1] == 0.0:
        roots.append(xs[-1])
    return roots


def mixed_equilibria(game: GameParams) -> list:
    """Equilibria in which at least one agent strictly mixes.

    Branches, following the indifference algebra:

    * both agents mixing requires X = Y = c, which pins lam = lambda_star;
      the whole symmetric family sigma_m = sigma_w then works, and the
      midpoint sigma = 1/2 is reported as its representative;
    * both mixing with nu_m + nu_w = 1 (possible only when mu_lo < 1/2):
      a one-dimensional root of the common indifference condition;
    * m mixing against a shirking w, the root of m's indifference, kept when
      w indeed prefers to shirk; and the mirror with w mixing against a
      working m. The m <-> w relabelings of these are omitted as symmetric
      duplicates.

    Away from lam = lambda_star every returned signal is discriminatory.
    """
    cuts = thresholds(game)
    c = game.c
    found = []

    if abs(game.lam - cuts.lambda_star) <= 1e-9:
        signal = optimal_signal(game, (HI, HI))
        found.append(
            MixedEquilibrium(MixedProfile(0.5, 0.5), signal, IMPARTIAL if signal.impartial else DISCRIMINATORY)
        )

    if game.mu_lo < 0.5:
        lo = max(game.mu_lo, 1.0 - game.mu_hi) + 1e-9
        hi = min(game.mu_hi, 1.0 - game.mu_lo) - 1e-9
        if lo < hi:

            def balanced_gap(nu_m: float) -> float:
                sig = _signal_for_success_probs(game, nu_m, 1.0 - nu_m)
                if sig is None:
                    return -c
                return nu_m * sig.X + (1.0 - nu_m) * sig.Y - c

            for nu_m in _scan_roots(balanced_gap, lo, hi):
                sig = _signal_for_success_probs(game, nu_m, 1.0 - nu_m)
                if sig is None:
                    continue
                sigma_m = (nu_m - game.mu_lo) / game.delta_mu
                sigma_w = (1.0 - nu_m - game.mu_lo) / game.delta_mu
                if _SIGMA_EDGE < sigma_m < 1.0 - _SIGMA_EDGE and _SIGMA_EDGE < sigma_w < 1.0 - _SIGMA_EDGE:
                    found.append(
                        MixedEquilibrium(
                            MixedProfile(sigma_m, sigma_w),
                            sig,
                            IMPARTIAL if sig.impartial else DISCRIMINATORY,
                        )
                    )

    def m_indifference(sigma: float) -> float:
        nu_m = game.mu_lo + sigma * game.delta_mu
        sig = _signal_for_success_probs(game, nu_m, game.mu_lo)
        if sig is None:
            return -c
        return (1.0 - game.mu_lo) * sig.X + game.mu_lo * sig.Y - c

    for sigma in _scan_roots(m_indifference, _SIGMA_EDGE, 1.0 - _SIGMA_EDGE):
        nu_m = game.mu_lo + sigma * game.delta_mu
        sig = _signal_for_success_probs(game, nu_m, game.mu_lo)
        if sig is None:
            continue
        if nu_m * sig.X + (1.0 - nu_m) * sig.Y <= c + _IC_TOL:
            found.append(
                MixedEquilibrium(
                    MixedProfile(sigma, 0.0), sig, IMPARTIAL if sig.impartial else DISCRIMINATORY
                )
            )

    def w_indifference(sigma: float) -> float:
        nu_w = game.mu_lo + sigma * game.delta_mu
        sig = _signal_for_success_probs(game, game.mu_hi, nu_w)
        if sig is None:
            return -c
        return game.mu_hi * sig.X + (1.0 - game.mu_hi) * sig.Y - c

    for sigma in _scan_roots(w_indifference, _SIGMA_EDGE, 1.0 - _SIGMA_EDGE):
        nu_w = game.mu_lo + sigma * game.delta_mu
        sig = _signal_for_success_probs(game, game.mu_hi, nu_w)
        if sig is None:
            continue
        if (1.0 - nu_w) * sig.X + nu_w * sig.Y >= c - _IC_TOL:
            found.append(
                MixedEquilibrium(
                    MixedProfile(1.0, sigma), sig, IMPARTIAL if sig.impartial else DISCRIMINATORY
                )
            )

    return found


# ---------------------------------------------------------------------------
# continuous effort on a grid
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EffortGridResult:
    """Pure fixed points of the effort best-response map at one lam."""

    lam: float
    fixed_points: tuple

    @property
    def symmetric(self) -> tuple:
        return tuple(fp for fp in self.fixed_points if fp[0] == fp[1])

    @property
    def asymmetric(self) -> tuple:
        return tuple(fp for fp in self.fixed_points if fp[0] != fp[1])


def continuous_effort_equilibria(
    kappa: float, lam_values: Sequence[float], grid_size: int = 100
) -> list:
    """Fixed points of the best-response map with effort cost kappa*mu^2/2.

    Efforts live on a uniform grid over [0, 1] and double as success
    probabilities. For every effort pair the principal's signal follows the
    closed forms (degenerate outside 1/gamma < A/B < gamma); an agent's win
    probability is linear in own effort with slope equal to the incentive
    gain, so the best response is the grid point closest to gain/kappa, with
    exact ties broken toward lower effort. All grid_size^2 profiles are
    scanned exhaustively, which finds every pure fixed point; results are
    reported in row-major (mu_m, mu_w) order.
    """
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    if not kappa > 0.0:
        raise ValueError("kappa must be positive")
    grid = np.linspace(0.0, 1.0, grid_size)
    nu_m = grid[:, None]
    nu_w = grid[None, :]
    A = nu_m * (1.0 - nu_w)
    B = nu_w * (1.0 - nu_m)
    results = []
    for lam in lam_values:
        r = math.exp(-1.0 / lam)
        with np.errstate(divide="ignore", invalid="ignore"):
            interior = (A > r * B) & (B > r * A)
            pi_bar = np.where(interior, (A - r * B) / ((1.0 - r) * (A + B)), 0.5)
            X = np.where(
                interior,
                (A - r * B) / ((1.0 - r * r) * np.where(A > 0, A, 1.0)) - pi_bar,
                0.0,
            )
            Y = np.where(
                interior,
                pi_bar - r * (A - r * B) / ((1.0 - r * r) * np.where(B > 0, B, 1.0)),
                0.0,
            )
        gain_m = (1.0 - nu_w) * X + nu_w * Y
        gain_w = nu_m * X + (1.0 - nu_m) * Y
        br_m = _grid_best_response(grid, gain_m, kappa)
        br_w = _grid_best_response(grid, gain_w, kappa)
        rows = np.arange(grid_size)[:, None]
        cols = np.arange(grid_size)[None, :]
        fixed = (br_m == rows) & (br_w == cols)
        ii, jj = np.nonzero(fixed)
        points = tuple((float(grid[i]), float(grid[j])) for i, j in zip(ii, jj))
        results.append(EffortGridResult(float(lam), points))
    return results


def _grid_best_response(grid: np.ndarray, gain: np.ndarray, kappa: float) -> np.ndarray:
    """Index of argmax over the grid of mu*gain - kappa*mu^2/2, ties to lower mu.

    The objective is concave in mu, so the grid argmax sits next to the
    unconstrained optimum gain/kappa; only the two neighbors are compared.
    """
    n = grid.size
    target = np.clip(gain / kappa, 0.0, 1.0)
    i_lo = np.clip(np.floor(target * (n - 1)).astype(int), 0, n - 1)
    i_hi = np.clip(i_lo + 1, 0, n - 1)
    val_lo = grid[i_lo] * gain - 0.5 * kappa * grid[i_lo] ** 2
    val_hi = grid[i_hi] * gain - 0.5 * kappa * grid[i_hi] ** 2
    return np.where(val_hi > val_lo, i_hi, i_lo)
