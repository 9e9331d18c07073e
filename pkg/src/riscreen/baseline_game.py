"""Two-contestant promotion game under a mutual-information attention cost.

Two agents, labeled m and w, simultaneously choose high or low effort. The
principal screens them through a signal about the productivity difference
d = theta_m - theta_w in {-1, 0, 1} and promotes one of them; pi(d) is the
probability that m is promoted at difference d. Attention is priced at
``lam`` utils per nat, and gamma = exp(1/lam) is the transform in which the
closed forms below are polynomial.

The module exposes the full equilibrium analysis in closed form: optimal
signal per effort profile, incentive gains, the cutpoints separating the
equilibrium regimes, profits, agent welfare, and the most profitable
equilibrium. The generic solver in :mod:`riscreen.ri_core` reproduces every
signal here from first principles and serves as its cross-check.

All functions are pure and all values immutable; parameter sweeps can be
parallelized by the caller without shared state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import ri_core

HI = "hi"
LO = "lo"
AGENT_M = "m"
AGENT_W = "w"
#: enumeration order used by equilibrium_set and the CLI
PROFILES = ((HI, HI), (HI, LO), (LO, HI), (LO, LO))

IMPARTIAL = "impartial"
DISCRIMINATORY = "discriminatory"

#: absolute slack for incentive comparisons; keeps knife-edge profiles in
#: both adjacent regimes, matching the closed/half-open regime intervals
IC_TOL = 1e-12
#: tolerance of the impartiality predicate pi(d) = 1 - pi(-d)
IMPARTIAL_TOL = 1e-9


class BracketError(RuntimeError):
    """A root search failed to bracket a sign change."""


@dataclass(frozen=True)
class GameParams:
    """Primitives of the promotion game.

    mu_hi, mu_lo: success probabilities under high and low effort, 0 < mu_lo < mu_hi < 1
    cost_C:       utility cost of high effort (low effort is free)
    lam:          attention cost in utils per nat
    """

    mu_hi: float
    mu_lo: float
    cost_C: float
    lam: float

    def __post_init__(self):
        if not 0.0 < self.mu_lo < self.mu_hi < 1.0:
            raise ValueError(
                f"need 0 < mu_lo < mu_hi < 1, got mu_lo={self.mu_lo!r}, mu_hi={self.mu_hi!r}"
            )
        if not self.cost_C > 0.0:
            raise ValueError(f"cost_C must be positive, got {self.cost_C!r}")
        if not self.lam > 0.0:
            raise ValueError(f"lam must be positive, got {self.lam!r}")

    @property
    def delta_mu(self) -> float:
        return self.mu_hi - self.mu_lo

    @property
    def c(self) -> float:
        """Effective cost of high effort per unit of promotion probability."""
        return self.cost_C / self.delta_mu

    @property
    def A(self) -> float:
        """P(d = 1) when m works high and w low."""
        return self.mu_hi * (1.0 - self.mu_lo)

    @property
    def B(self) -> float:
        """P(d = -1) when m works high and w low."""
        return self.mu_lo * (1.0 - self.mu_hi)

    @property
    def gamma(self) -> float:
        """exp(1/lam); overflows below lam ~ 0.00141. Internal closed forms
        work in 1/gamma instead, so tiny lam values stay representable."""
        return math.exp(1.0 / self.lam)

    @property
    def assumption1(self) -> bool:
        """Regularity: mu_hi + mu_lo > 1 and c < mu_hi(1-mu_hi)/(A+B)."""
        return (
            self.mu_hi + self.mu_lo > 1.0
            and self.c < self.mu_hi * (1.0 - self.mu_hi) / (self.A + self.B)
        )

    def mu(self, effort: str) -> float:
        if effort == HI:
            return self.mu_hi
        if effort == LO:
            return self.mu_lo
        raise ValueError(f"effort must be {HI!r} or {LO!r}, got {effort!r}")


@dataclass(frozen=True)
class StateDistribution:
    """Distribution of the productivity difference d = theta_m - theta_w."""

    p_minus: float
    p_zero: float
    p_plus: float

    def __post_init__(self):
        for p in (self.p_minus, self.p_zero, self.p_plus):
            if p < -1e-15:
                raise ValueError(f"negative probability {p!r}")
        if abs(self.p_minus + self.p_zero + self.p_plus - 1.0) > 1e-12:
            raise ValueError("state probabilities must sum to 1")

    def as_tuple(self) -> tuple:
        """(p(-1), p(0), p(1))."""
        return (self.p_minus, self.p_zero, self.p_plus)


@dataclass(frozen=True)
class PromotionSignal:
    """Promotion probabilities for m conditional on the productivity difference.

    pi_bar is the average promotion probability under the distribution the
    signal was derived for. X = pi(1) - pi(0) is the promotion bonus for
    outperforming, Y = pi(0) - pi(-1) the penalty for underperforming.
    """

    pi_minus: float
    pi_zero: float
    pi_plus: float
    pi_bar: float

    def pi(self, dtheta: int) -> float:
        if dtheta == -1:
            return self.pi_minus
        if dtheta == 0:
            return self.pi_zero
        if dtheta == 1:
            return self.pi_plus
        raise ValueError(f"dtheta must be -1, 0 or 1, got {dtheta!r}")

    def as_tuple(self) -> tuple:
        """(pi(-1), pi(0), pi(1))."""
        return (self.pi_minus, self.pi_zero, self.pi_plus)

    @property
    def X(self) -> float:
        return self.pi_plus - self.pi_zero

    @property
    def Y(self) -> float:
        return self.pi_zero - self.pi_minus

    @property
    def impartial(self) -> bool:
        """True when pi(d) = 1 - pi(-d) for every d (so pi(0) = 1/2 and X = Y)."""
        return (
            abs(self.pi_zero - 0.5) <= IMPARTIAL_TOL
            and abs(self.pi_plus + self.pi_minus - 1.0) <= IMPARTIAL_TOL
        )

    @property
    def degenerate(self) -> bool:
        probs = self.as_tuple()
        return all(p == 0.0 for p in probs) or all(p == 1.0 for p in probs)

    def mirrored(self) -> "PromotionSignal":
        """The same screening rule with the agents' roles swapped."""
        return PromotionSignal(
            pi_minus=1.0 - self.pi_plus,
            pi_zero=1.0 - self.pi_zero,
            pi_plus=1.0 - self.pi_minus,
            pi_bar=1.0 - self.pi_bar,
        )


@dataclass(frozen=True)
class ThresholdSet:
    """Cutpoints of the attention-cost axis.

    lambda_breve: above it the signal for (hi, lo) collapses to always-promote-m
    lambda_star:  impartial equilibria switch from high to low effort
    lambda_low, lambda_high: the discriminatory regime is [lambda_low, lambda_high]
    gamma_hat:    root of the crossing that decides condition5 (None when mu_lo <= 1/2)
    X_low, X_high: bounds on the outperform bonus X that keep both incentive
                   constraints of the (hi, lo) profile satisfied

    Non-regular parameter sets are reported through the flags together with
    limiting threshold values (0 stands for an unattainable bound), never as
    silent NaN.
    """

    lambda_breve: float
    lambda_star: float
    lambda_low: float
    lambda_high: float
    gamma_hat: Optional[float]
    X_low: float
    X_high: float
    condition5: bool
    assumption1: bool

    @property
    def regular(self) -> bool:
        return self.assumption1 and all(
            math.isfinite(v) and v > 0.0
            for v in (self.lambda_star, self.lambda_low, self.lambda_high)
        )


@dataclass(frozen=True)
class ProfitBreakdown:
    """Expected revenue V, information bill I (nats), and profit V - lam * I."""

    V: float
    I: float
    profit: float


@dataclass(frozen=True)
class EquilibriumRecord:
    profile: tuple
    signal: PromotionSignal
    classification: str
    revenue: float
    info_cost: float
    profit: float
    utility_m: float
    utility_w: float


# ---------------------------------------------------------------------------
# state distributions and the closed-form signal
# ---------------------------------------------------------------------------

def state_distribution(params: GameParams, profile: tuple) -> StateDistribution:
    """Distribution of d = theta_m - theta_w induced by an effort profile."""
    mu_m, mu_w = params.mu(profile[0]), params.mu(profile[1])
    p_plus = mu_m * (1.0 - mu_w)
    p_minus = mu_w * (1.0 - mu_m)
    return StateDistribution(p_minus, 1.0 - p_plus - p_minus, p_plus)


def g_func(gamma: float) -> float:
    """Promotion bonus X = Y of the impartial signal, (gamma-1)/(2(gamma+1)).

    Strictly increasing on [1, inf) with limit 1/2.
    """
    if gamma < 1.0:
        raise ValueError(f"g_func needs gamma >= 1, got {gamma!r}")
    if math.isinf(gamma):
        return 0.5
    return (gamma - 1.0) / (2.0 * (gamma + 1.0))


def f_func(params: GameParams, gamma: float) -> float:
    """Outperform bonus X of the (hi, lo) signal.

    (gamma A - B)(gamma B - A) / ((gamma^2 - 1)(A + B) A); zero at
    gamma = A/B, strictly increasing above, with limit B/(A+B). Evaluated
    in r = 1/gamma, which keeps huge gammas finite.
    """
    A, B = params.A, params.B
    if gamma < A / B:
        raise ValueError(f"f_func needs gamma >= A/B = {A / B!r}, got {gamma!r}")
    r = 0.0 if math.isinf(gamma) else 1.0 / gamma
    return (A - r * B) * (B - r * A) / ((1.0 - r * r) * (A + B) * A)


def g_inverse(x: float) -> float:
    """gamma solving g(gamma) = x; +inf when x >= 1/2 (g is bounded by 1/2)."""
    if x < 0.0:
        raise ValueError(f"g_inverse needs x >= 0, got {x!r}")
    if x >= 0.5:
        return math.inf
    return (1.0 + 2.0 * x) / (1.0 - 2.0 * x)


def f_inverse(params: GameParams, x: float) -> float:
    """gamma > A/B solving f(gamma) = x; +inf when x >= B/(A+B).

    f(gamma) = x is quadratic in gamma:
    (AB - k) gamma^2 - (A^2 + B^2) gamma + (AB + k) = 0 with k = x(A+B)A,
    and the root above A/B takes the plus branch. Falls back to bisection
    when the leading coefficient nearly vanishes (x close to the supremum).
    """
    A, B = params.A, params.B
    if x < 0.0:
        raise ValueError(f"f_inverse needs x >= 0, got {x!r}")
    if x >= B / (A + B):
        return math.inf
    k = x * (A + B) * A
    lead = A * B - k
    if abs(lead) >= 1e-14:
        disc = (A * A - B * B) ** 2 + 4.0 * k * k
        return ((A * A + B * B) + math.sqrt(disc)) / (2.0 * lead)
    # nearly degenerate quadratic: bisect on an expanding bracket
    lo = A / B + 1e-9
    hi = 2.0 * lo
    while f_func(params, hi) < x:
        hi *= 2.0
        if hi > 1e300:
            raise BracketError(f"f_inverse could not bracket x={x!r}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f_func(params, mid) < x:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def optimal_signal(params: GameParams, profile: tuple) -> PromotionSignal:
    """The principal's optimal promotion signal for a fixed effort profile.

    Symmetric profiles get the impartial signal with pi(0) = pi_bar = 1/2 and
    X = Y = g(gamma). The (hi, lo) profile gets the always-promote-m signal
    once gamma <= A/B (lam >= lambda_breve), and otherwise the tilted
    interior signal with pi_bar = pi(0) = (gamma A - B)/((gamma - 1)(A + B)),
    X = f(gamma) and Y = (A/B) f(gamma). The (lo, hi) profile is the mirror
    image.
    """
    e_m, e_w = profile
    params.mu(e_m), params.mu(e_w)
    # everything is evaluated in r = 1/gamma = exp(-1/lam), which stays in
    # (0, 1] for every lam > 0 and underflows harmlessly to the costless limit
    r = math.exp(-1.0 / params.lam)
    if e_m == e_w:
        pi_plus = 1.0 / (1.0 + r)
        return PromotionSignal(1.0 - pi_plus, 0.5, pi_plus, 0.5)
    if profile == (LO, HI):
        return optimal_signal(params, (HI, LO)).mirrored()
    A, B = params.A, params.B
    if r >= B / A:
        return PromotionSignal(1.0, 1.0, 1.0, 1.0)
    pi_bar = (A - r * B) / ((1.0 - r) * (A + B))
    pi_plus = (A - r * B) / ((1.0 - r * r) * A)
    pi_minus = r * (A - r * B) / ((1.0 - r * r) * B)
    return PromotionSignal(pi_minus, pi_bar, pi_plus, pi_bar)


def ri_problem(params: GameParams, profile: tuple) -> ri_core.BinaryRIProblem:
    """The promotion decision recast as a generic binary RI problem."""
    dist = state_distribution(params, profile)
    return ri_core.BinaryRIProblem(
        states=(-1, 0, 1),
        prior=dist.as_tuple(),
        advantage=(-1.0, 0.0, 1.0),
        lam=params.lam,
    )


def signal_oracle_residual(params: GameParams, profile: tuple) -> float:
    """Sup-norm gap between the closed-form signal and the generic solver."""
    closed = optimal_signal(params, profile).as_tuple()
    solved = ri_core.solve_binary_ri(ri_problem(params, profile)).conditional
    return max(abs(a - b) for a, b in zip(closed, solved))


# ---------------------------------------------------------------------------
# incentives and equilibrium enumeration
# ---------------------------------------------------------------------------

def incentive_gain(params: GameParams, signal: PromotionSignal, agent: str, other_effort: str) -> float:
    """Promotion-probability gain from working high, per unit of delta_mu.

    For m the gain is (1 - mu_w) X + mu_w Y; for w it is mu_m X + (1 - mu_m) Y,
    where the opponent's effort fixes mu_w or mu_m. High effort is incentive
    compatible exactly when the gain weakly exceeds c = cost_C / delta_mu.
    """
    mu_other = params.mu(other_effort)
    if agent == AGENT_M:
        return (1.0 - mu_other) * signal.X + mu_other * signal.Y
    if agent == AGENT_W:
        return mu_other * signal.X + (1.0 - mu_other) * signal.Y
    raise ValueError(f"agent must be {AGENT_M!r} or {AGENT_W!r}, got {agent!r}")


def supports_profile(
    params: GameParams,
    signal: PromotionSignal,
    profile: tuple,
    c_m: Optional[float] = None,
    c_w: Optional[float] = None,
) -> bool:
    """Do both incentive constraints hold for this profile at a fixed signal?

    Deviations are evaluated against the given signal (simultaneous moves:
    agents cannot observe, and hence cannot react to, the screening rule).
    Per-agent effective costs default to the common c.
    """
    c_m = params.c if c_m is None else c_m
    c_w = params.c if c_w is None else c_w
    e_m, e_w = profile
    gain_m = incentive_gain(params, signal, AGENT_M, e_w)
    gain_w = incentive_gain(params, signal, AGENT_W, e_m)
    ok_m = gain_m >= c_m - IC_TOL if e_m == HI else gain_m <= c_m + IC_TOL
    ok_w = gain_w >= c_w - IC_TOL if e_w == HI else gain_w <= c_w + IC_TOL
    return ok_m and ok_w


def profit(params: GameParams, profile: tuple) -> ProfitBreakdown:
    """Principal's revenue, information bill and profit at the optimal signal.

    Closed forms: symmetric profiles have V = mu + mu(1-mu)(gamma-1)/(gamma+1)
    and I = 2 mu(1-mu) [h(gamma/(gamma+1)) - h(1/2)]. Asymmetric profiles have
    V = mu_lo + (gamma A - B)/(gamma + 1) and
    I = A h(pi(1)) + B h(pi(-1)) - (A + B) h(pi_bar) while interior; in the
    degenerate region gamma <= A/B the promoted agent is the high-effort one
    for sure, so V = mu_hi and I = 0.
    """
    r = math.exp(-1.0 / params.lam)
    h = ri_core.neg_entropy
    e_m, e_w = profile
    if e_m == e_w:
        mu = params.mu(e_m)
        s = mu * (1.0 - mu)
        V = mu + s * (1.0 - r) / (1.0 + r)
        I = 2.0 * s * (h(1.0 / (1.0 + r)) - h(0.5))
    else:
        A, B = params.A, params.B
        if r >= B / A:
            V, I = params.mu_hi, 0.0
        else:
            V = params.mu_lo + (A - r * B) / (1.0 + r)
            sig = optimal_signal(params, (HI, LO))
            I = A * h(sig.pi_plus) + B * h(sig.pi_minus) - (A + B) * h(sig.pi_bar)
    return ProfitBreakdown(V, I, V - params.lam * I)


def agent_utilities(params: GameParams, record: "EquilibriumRecord") -> tuple:
    """(utility_m, utility_w): promotion probability net of any effort cost."""
    return _utilities(params, record.profile, record.signal)


def _utilities(params: GameParams, profile: tuple, signal: PromotionSignal) -> tuple:
    e_m, e_w = profile
    u_m = signal.pi_bar - (params.cost_C if e_m == HI else 0.0)
    u_w = (1.0 - signal.pi_bar) - (params.cost_C if e_w == HI else 0.0)
    return (u_m, u_w)


def _record(params: GameParams, profile: tuple, signal: PromotionSignal) -> EquilibriumRecord:
    pb = profit(params, profile)
    u_m, u_w = _utilities(params, profile, signal)
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


def equilibrium_set(params: GameParams) -> list:
    """All pure-strategy equilibria, in the fixed order of PROFILES.

    A profile is an equilibrium when its optimal signal satisfies both
    agents' incentive constraints. Knife-edge parameter values keep a
    profile in both adjacent regimes.
    """
    found = []
    for profile in PROFILES:
        signal = optimal_signal(params, profile)
        if supports_profile(params, signal, profile):
            found.append(_record(params, profile, signal))
    return found


def most_profitable(params: GameParams) -> list:
    """Equilibrium records attaining the highest profit.

    The two mirror discriminatory equilibria earn identical profits, so the
    list has length two whenever a discriminatory equilibrium is on top, and
    length one otherwise.
    """
    records = equilibrium_set(params)
    best = max(r.profit for r in records)
    return [r for r in records if r.profit >= best - 1e-12]


def welfare_ordering(records: list) -> list:
    """Records sorted by joint agent utility, best first (ties keep input order)."""
    return sorted(records, key=lambda r: -(r.utility_m + r.utility_w))


# ---------------------------------------------------------------------------
# thresholds
# ---------------------------------------------------------------------------

def _psi(params: GameParams, gamma: float) -> float:
    """Rescaled f used to locate the condition5 crossing."""
    A, B = params.A, params.B
    s_hi = params.mu_hi * (1.0 - params.mu_hi)
    return (gamma * A - B) * (gamma * B - A) / ((gamma**2 - 1.0) * (A + B) * s_hi)


def _gamma_hat(params: GameParams) -> float:
    """Unique root of g(gamma) = psi(gamma) above A/B; exists when mu_lo > 1/2."""
    lo = params.A / params.B + 1e-9
    hi = 2.0 * lo
    expansions = 0
    while g_func(hi) - _psi(params, hi) > 0.0:
        hi *= 2.0
        expansions += 1
        if expansions > 600:
            raise BracketError("no g = psi crossing found; is mu_lo > 1/2?")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g_func(mid) - _psi(params, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _lam_of_gamma(gamma: float) -> float:
    """Inverse of gamma = exp(1/lam); an infinite gamma maps to lam = 0."""
    return 0.0 if math.isinf(gamma) else 1.0 / math.log(gamma)


def thresholds(params: GameParams) -> ThresholdSet:
    """All cutpoints of the game, with regularity flags.

    gamma* = (1+2c)/(1-2c) inverts g in closed form. The discriminatory
    bounds invert f at X_high = c mu_lo / mu_hi (w willing to shirk) and
    X_low = c (1-mu_hi)/(1-mu_lo) (m willing to work). condition5 holds when
    mu_lo > 1/2 and c > g(gamma_hat), and is exactly when
    lambda_star < lambda_high.
    """
    c = params.c
    lambda_breve = 1.0 / math.log(params.A / params.B)
    lambda_star = _lam_of_gamma(g_inverse(c))
    X_high = c * params.mu_lo / params.mu_hi
    X_low = c * (1.0 - params.mu_hi) / (1.0 - params.mu_lo)
    lambda_low = _lam_of_gamma(f_inverse(params, X_high))
    lambda_high = _lam_of_gamma(f_inverse(params, X_low))
    gamma_hat = _gamma_hat(params) if params.mu_lo > 0.5 else None
    condition5 = gamma_hat is not None and c > g_func(gamma_hat)
    return ThresholdSet(
        lambda_breve=lambda_breve,
        lambda_star=lambda_star,
        lambda_low=lambda_low,
        lambda_high=lambda_high,
        gamma_hat=gamma_hat,
        X_low=X_low,
        X_high=X_high,
        condition5=condition5,
        assumption1=params.assumption1,
    )
