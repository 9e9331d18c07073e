"""Command-line front end: single-point tables, regime sweeps, golden checks.

Subcommands: signal, thresholds, equilibria, regimes, quota, multitask,
variants, reproduce. Exit codes: 0 on success, 1 when a reproduce check
fails, 2 on usage errors. Machine output (csv/json) carries 12 significant
digits and is byte-deterministic for a fixed configuration; human tables
show 4 decimals, except the compact probability table of `signal`, which
truncates at 2 decimals.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Optional

from . import baseline_game as bg
from . import multitask as mt
from . import quota_policy as qp
from . import ri_core
from . import variants as va

SCHEMA_VERSION = "riscreen.regimes.v1"

_TABLE1_SIGNAL = (0.093977614213083, 0.744088048450016, 0.987879461288866)
_TABLE1_PRINT = (0.09, 0.74, 0.98)


def _g(x: float) -> float:
    """12-significant-digit float for machine output."""
    return float(f"{x:.12g}")


def _fmt4(x: float) -> str:
    return f"{x:.4f}"


def _trunc2(x: float) -> str:
    """Truncate (not round) to 2 decimals, the published-table convention.

    The pre-round at 6 digits keeps representation dust (0.56 stored as
    0.5599...99) from leaking into the truncation.
    """
    return f"{math.floor(round(x * 100.0, 6)) / 100.0:.2f}"


def _parse_profile(text: str) -> tuple:
    parts = tuple(p.strip() for p in text.split(","))
    if len(parts) != 2 or any(p not in (bg.HI, bg.LO) for p in parts):
        raise ValueError(f"profile must look like 'hi,lo', got {text!r}")
    return parts


def _parse_triple(text: str) -> tuple:
    parts = tuple(float(p) for p in text.split(","))
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated numbers, got {text!r}")
    return parts


def _game(args) -> bg.GameParams:
    return bg.GameParams(args.mu_hi, args.mu_lo, args.cost, args.lam)


def _lam_grid(args) -> list:
    lo, hi = args.lambda_range
    n = args.lambda_steps
    if not (lo > 0.0 and hi > lo and n >= 2):
        raise ValueError("need 0 < lo < hi and at least two steps in the lambda grid")
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise ValueError(f"cannot write {out!r}: {exc}") from exc


def _rows_to_csv(header: list, rows: list, meta: dict) -> str:
    buf = io.StringIO()
    buf.write(f"# schema={SCHEMA_VERSION}\n")
    for key in sorted(meta):
        buf.write(f"# {key}={meta[key]}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([f"{v:.12g}" if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _rows_to_json(header: list, rows: list, meta: dict) -> str:
    payload = {
        "schema": SCHEMA_VERSION,
        "meta": meta,
        "rows": [
            {k: (_g(v) if isinstance(v, float) else v) for k, v in zip(header, row)}
            for row in rows
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_signal(args) -> int:
    game = _game(args)
    profile = _parse_profile(args.profile)
    dist = bg.state_distribution(game, profile)
    signal = bg.optimal_signal(game, profile)
    pb = bg.profit(game, profile)
    lines = [f"profile ({profile[0]}, {profile[1]})  mu=({game.mu_hi:g}, {game.mu_lo:g})  lambda={game.lam:g}"]
    lines.append("d         1     0    -1")
    lines.append(
        "P(d)   "
        + "  ".join(_trunc2(p) for p in (dist.p_plus, dist.p_zero, dist.p_minus))
    )
    lines.append(
        "pi(d)  "
        + "  ".join(_trunc2(p) for p in (signal.pi_plus, signal.pi_zero, signal.pi_minus))
    )
    if signal.degenerate:
        who = "m" if signal.pi_plus == 1.0 else "w"
        lines.append(f"degenerate: promote {who}")
    lines.append(
        f"pi_bar={_fmt4(signal.pi_bar)}  X={_fmt4(signal.X)}  Y={_fmt4(signal.Y)}"
    )
    lines.append(
        f"V={_fmt4(pb.V)}  I={_fmt4(pb.I)}  profit={_fmt4(pb.profit)}"
    )
    if args.oracle:
        residual = bg.signal_oracle_residual(game, profile)
        lines.append(f"oracle residual={residual:.3e}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_thresholds(args) -> int:
    game = _game(args)
    cuts = bg.thresholds(game)
    lines = [
        f"c={_fmt4(game.c)}  A={_fmt4(game.A)}  B={_fmt4(game.B)}",
        f"assumption1={cuts.assumption1}  condition5={cuts.condition5}",
        f"lambda_low={_fmt4(cuts.lambda_low)}  lambda_star={_fmt4(cuts.lambda_star)}"
        f"  lambda_high={_fmt4(cuts.lambda_high)}  lambda_breve={_fmt4(cuts.lambda_breve)}",
        f"X_low={_fmt4(cuts.X_low)}  X_high={_fmt4(cuts.X_high)}"
        + (f"  gamma_hat={_fmt4(cuts.gamma_hat)}" if cuts.gamma_hat is not None else ""),
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _profile_tag(profile: tuple) -> str:
    return f"{profile[0]},{profile[1]}"


def cmd_equilibria(args) -> int:
    game = _game(args)
    records = bg.equilibrium_set(game)
    best = {r.profile for r in bg.most_profitable(game)}
    lines = []
    for rec in records:
        star = " *" if rec.profile in best else ""
        lines.append(
            f"({_profile_tag(rec.profile)}) {rec.classification:15s}"
            f" profit={_fmt4(rec.profit)} V={_fmt4(rec.revenue)} I={_fmt4(rec.info_cost)}"
            f" u_m={_fmt4(rec.utility_m)} u_w={_fmt4(rec.utility_w)}{star}"
        )
    lines.append("* most profitable")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


_REGIME_HEADER = [
    "lam",
    "eq_hi_hi",
    "eq_hi_lo",
    "eq_lo_hi",
    "eq_lo_lo",
    "most_profitable",
    "best_profit",
    "welfare_order",
    "lambda_low",
    "lambda_star",
    "lambda_high",
    "condition5",
]


def _regime_row(game: bg.GameParams, cuts: bg.ThresholdSet, quota: bool) -> list:
    records = qp.quota_equilibrium_set(game) if quota else bg.equilibrium_set(game)
    present = {r.profile for r in records}
    best = max(records, key=lambda r: r.profit)
    ties = [r for r in records if r.profit >= best.profit - 1e-12]
    welfare = bg.welfare_ordering(records)
    return [
        game.lam,
        int((bg.HI, bg.HI) in present),
        int((bg.HI, bg.LO) in present),
        int((bg.LO, bg.HI) in present),
        int((bg.LO, bg.LO) in present),
        "|".join(sorted(_profile_tag(r.profile) for r in ties)),
        best.profit,
        ">".join(_profile_tag(r.profile) for r in welfare),
        cuts.lambda_low,
        cuts.lambda_star,
        cuts.lambda_high,
        int(cuts.condition5),
    ]


def _regime_svg(rows: list) -> str:
    colors = {
        (1, 0, 0, 0): "#2166ac",  # impartial high only
        (1, 1, 1, 0): "#92c5de",  # high + discriminatory
        (1, 1, 1, 1): "#f4a582",  # all four
        (0, 1, 1, 1): "#d6604d",  # low + discriminatory
        (0, 0, 0, 1): "#b2182b",  # impartial low only
    }
    width, height = 800.0, 60.0
    n = len(rows)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height + 30:g}">'
    ]
    for i, row in enumerate(rows):
        key = (row[1], row[2], row[3], row[4])
        color = colors.get(key, "#999999")
        x = width * i / n
        parts.append(
            f'<rect x="{x:.2f}" y="0" width="{width / n:.2f}" height="{height:g}" fill="{color}"/>'
        )
    parts.append(
        f'<text x="0" y="{height + 20:g}" font-size="12">lambda from {rows[0][0]:.12g} to {rows[-1][0]:.12g}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_regimes(args) -> int:
    base = bg.GameParams(args.mu_hi, args.mu_lo, args.cost, 1.0)
    cuts = bg.thresholds(base)
    grid = _lam_grid(args)
    meta = {
        "analysis": args.analysis,
        "mu_hi": f"{args.mu_hi:.12g}",
        "mu_lo": f"{args.mu_lo:.12g}",
        "cost": f"{args.cost:.12g}",
        "seed": str(args.seed),
    }
    rows = []
    header = list(_REGIME_HEADER)
    if args.analysis in ("baseline", "quota"):
        for lam in grid:
            game = bg.GameParams(args.mu_hi, args.mu_lo, args.cost, lam)
            rows.append(_regime_row(game, cuts, quota=args.analysis == "quota"))
    elif args.analysis == "multitask":
        tasks = (mt.TaskParams(*_parse_triple(args.task1)), mt.TaskParams(*_parse_triple(args.task2)))
        header = ["lam", "n_equilibria", "most_profitable", "best_payoff"]
        for lam in grid:
            game = bg.GameParams(args.mu_hi, args.mu_lo, args.cost, lam)
            records = mt.multitask_equilibrium_set(game, tasks)
            winners = mt.multitask_most_profitable(game, tasks)
            rows.append(
                [
                    lam,
                    len(records),
                    "|".join(sorted({w.classification for w in winners})),
                    winners[0].payoff if winners else math.nan,
                ]
            )
    else:  # variants
        header = ["lam", "commitment_profile", "commitment_profit", "n_mixed"]
        for lam in grid:
            game = bg.GameParams(args.mu_hi, args.mu_lo, args.cost, lam)
            sol = va.commitment_solve(game)
            rows.append(
                [lam, _profile_tag(sol.induced_profile), sol.profit, len(va.mixed_equilibria(game))]
            )
    text = (
        _rows_to_json(header, rows, meta)
        if args.format == "json"
        else _rows_to_csv(header, rows, meta)
    )
    _emit(text, args.out)
    if args.svg is not None:
        if args.analysis not in ("baseline", "quota"):
            raise ValueError("the regime strip chart is defined for baseline/quota sweeps")
        _emit(_regime_svg(rows), args.svg)
    return 0


def cmd_quota(args) -> int:
    game = _game(args)
    lines = []
    for profile in bg.PROFILES:
        sol = qp.find_multiplier(game, profile)
        lines.append(
            f"({_profile_tag(profile)}) nu={_fmt4(sol.nu)} pi_bar={_fmt4(sol.signal.pi_bar)}"
            f" X={_fmt4(sol.signal.X)} Y={_fmt4(sol.signal.Y)}"
        )
    records = qp.quota_equilibrium_set(game)
    lines.append(
        "quota equilibria: "
        + (", ".join(f"({_profile_tag(r.profile)})" for r in records) or "none")
    )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_multitask(args) -> int:
    game = _game(args)
    tasks = (mt.TaskParams(*_parse_triple(args.task1)), mt.TaskParams(*_parse_triple(args.task2)))
    records = mt.multitask_equilibrium_set(game, tasks)
    lines = []
    for rec in records:
        lines.append(
            f"m=({rec.investment_m[0]},{rec.investment_m[1]})"
            f" w=({rec.investment_w[0]},{rec.investment_w[1]})"
            f" {rec.classification:15s} payoff={_fmt4(rec.payoff)}"
        )
    if abs(tasks[0].alpha - tasks[1].alpha) <= 1e-12 and records:
        winners = mt.multitask_most_profitable(game, tasks)
        lines.append("most profitable: " + ", ".join(sorted({w.classification for w in winners})))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_variants(args) -> int:
    game = _game(args)
    lines = []
    if args.which == "heterogeneous":
        het = va.HeterogeneousParams(args.cost_m, args.cost_w, args.du_m, args.du_w)
        for rec in va.heterogeneous_equilibrium_set(game, het):
            lines.append(
                f"({_profile_tag(rec.profile)}) {rec.classification:15s}"
                f" profit={_fmt4(rec.profit)} u_m={_fmt4(rec.utility_m)} u_w={_fmt4(rec.utility_w)}"
            )
    elif args.which == "commitment":
        sol = va.commitment_solve(game)
        lines.append(
            f"induced=({_profile_tag(sol.induced_profile)}) profit={_fmt4(sol.profit)}"
            f" nu_m={_fmt4(sol.nu_m)} binding={sol.binding_agent or '-'}"
            f" impartial={sol.signal.impartial}"
        )
        for profile in sorted(sol.candidates):
            lines.append(f"  candidate ({_profile_tag(profile)}) profit={_fmt4(sol.candidates[profile])}")
    elif args.which == "prior-invariant":
        if args.ref_prior is None:
            raise ValueError("--ref-prior is required for the prior-invariant variant")
        profile = _parse_profile(args.profile)
        dist = bg.state_distribution(game, profile)
        problem = va.ReferencePriorProblem(dist.as_tuple(), _parse_triple(args.ref_prior), game.lam)
        result = va.prior_invariant_signal(problem)
        if not result.interior:
            lines.append(f"not interior: pi_bar_q={result.pi_bar_q}")
        else:
            sig = result.signal
            lines.append(
                f"pi=({_fmt4(sig.pi_minus)}, {_fmt4(sig.pi_zero)}, {_fmt4(sig.pi_plus)})"
                f" pi_bar_q={_fmt4(result.pi_bar_q)} impartial={sig.impartial}"
            )
    elif args.which == "mixed":
        found = va.mixed_equilibria(game)
        if not found:
            lines.append("no mixed equilibria")
        for eq in found:
            lines.append(
                f"sigma=({_fmt4(eq.profile.sigma_m)}, {_fmt4(eq.profile.sigma_w)})"
                f" {eq.classification}"
            )
    else:  # continuous
        grid = _lam_grid(args)
        for res in va.continuous_effort_equilibria(args.kappa, grid, args.grid_size):
            lines.append(
                f"lam={res.lam:.4f} fixed_points={len(res.fixed_points)}"
                f" symmetric={len(res.symmetric)} asymmetric={len(res.asymmetric)}"
            )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# golden checks
# ---------------------------------------------------------------------------

def _golden_checks() -> list:
    """(name, passed, measured, tolerance) for every golden check."""
    game = bg.GameParams(0.8, 0.6, 0.07, 0.3)
    checks = []

    dist = bg.state_distribution(game, (bg.HI, bg.LO))
    delta = max(
        abs(dist.p_plus - 0.32), abs(dist.p_zero - 0.56), abs(dist.p_minus - 0.12)
    )
    checks.append(("table1_state_distribution", delta <= 1e-12, f"max|dp|={delta:.2e}", "1e-12"))

    signal = bg.optimal_signal(game, (bg.HI, bg.LO))
    delta = max(abs(a - b) for a, b in zip(signal.as_tuple(), _TABLE1_SIGNAL))
    printed = tuple(float(_trunc2(p)) for p in signal.as_tuple())
    ok = delta <= 5e-3 and printed == _TABLE1_PRINT
    checks.append(("table1_signal", ok, f"max|dpi|={delta:.2e}, 2dp={printed}", "5e-3 and 2dp match"))

    pb = bg.profit(game, (bg.HI, bg.LO))
    checks.append(
        ("revenue_lambda_0.3", abs(pb.V - 0.9048) <= 5e-3, f"V={pb.V:.6f}", "0.9048 +/- 5e-3")
    )

    bench = 1.0 - (1.0 - game.mu_hi) * (1.0 - game.mu_lo)
    v_small = bg.profit(bg.GameParams(0.8, 0.6, 0.07, 0.01), (bg.HI, bg.LO)).V
    ok = abs(bench - 0.92) <= 1e-12 and abs(v_small - bench) <= 1e-9
    checks.append(("revenue_costless_benchmark", ok, f"benchmark={bench:.6f}, V(lam=.01)={v_small:.6f}", "exact / 1e-9"))

    gain_m = game.delta_mu * bg.incentive_gain(game, signal, bg.AGENT_M, bg.LO)
    checks.append(
        ("deviation_loss_m", abs(gain_m - 0.098) <= 1e-3, f"dmu*gain_m={gain_m:.6f}", "0.098 +/- 1e-3")
    )

    gain_w = game.delta_mu * bg.incentive_gain(game, signal, bg.AGENT_W, bg.HI)
    brute = _win_probability(game, signal, game.mu_hi, game.mu_hi) - _win_probability(
        game, signal, game.mu_hi, game.mu_lo
    )
    ok = abs(gain_w - brute) <= 1e-6 and abs(gain_w - 0.0650) <= 5e-4
    checks.append(
        ("deviation_gain_w_oracle", ok, f"dmu*gain_w={gain_w:.6f}, brute={brute:.6f}", "1e-6 vs oracle")
    )

    cuts = bg.thresholds(game)
    ok = 0.0 < cuts.lambda_low < cuts.lambda_star and cuts.lambda_low < cuts.lambda_high < cuts.lambda_breve
    checks.append(
        (
            "threshold_ordering",
            ok,
            f"low={cuts.lambda_low:.4f} star={cuts.lambda_star:.4f} high={cuts.lambda_high:.4f} breve={cuts.lambda_breve:.4f}",
            "low < star, low < high < breve",
        )
    )

    g_res = abs(bg.g_func(g_inv := bg.g_inverse(game.c)) - game.c)
    f_res = max(
        abs(bg.f_func(game, bg.f_inverse(game, cuts.X_high)) - cuts.X_high),
        abs(bg.f_func(game, bg.f_inverse(game, cuts.X_low)) - cuts.X_low),
    )
    ok = g_res <= 1e-9 and f_res <= 1e-9 and math.isfinite(g_inv)
    checks.append(
        ("threshold_inverse_consistency", ok, f"|g(g^-1(c))-c|={g_res:.2e}, f residual={f_res:.2e}", "1e-9")
    )

    worst = 0.0
    for profile in bg.PROFILES:
        worst = max(worst, bg.signal_oracle_residual(game, profile))
    checks.append(("signal_oracle", worst <= 1e-8, f"sup residual={worst:.2e}", "1e-8"))

    mismatches = 0
    for i in range(10):
        lam = 0.1 + 1.1 * i / 9
        g_l = bg.GameParams(0.8, 0.6, 0.07, lam)
        quota_profiles = [r.profile for r in qp.quota_equilibrium_set(g_l)]
        impartial = [r.profile for r in bg.equilibrium_set(g_l) if r.classification == bg.IMPARTIAL]
        if quota_profiles != impartial:
            mismatches += 1
    checks.append(("quota_equivalence", mismatches == 0, f"mismatches={mismatches}/10", "exact"))

    worst_id = 0.0
    order_ok = True
    for i in range(40):
        gamma = game.A / game.B + 0.2 + i * 2.0
        lam = 1.0 / math.log(gamma)
        g_l = bg.GameParams(0.8, 0.6, 0.07, lam)
        dv1 = bg.profit(g_l, (bg.HI, bg.HI)).V - bg.profit(g_l, (bg.HI, bg.LO)).V
        dv2 = bg.profit(g_l, (bg.HI, bg.LO)).V - bg.profit(g_l, (bg.LO, bg.LO)).V
        ident = dv1 - dv2 + (gamma - 1.0) * game.delta_mu**2 / (gamma + 1.0)
        worst_id = max(worst_id, abs(ident))
        di1 = bg.profit(g_l, (bg.HI, bg.HI)).I - bg.profit(g_l, (bg.HI, bg.LO)).I
        di2 = bg.profit(g_l, (bg.HI, bg.LO)).I - bg.profit(g_l, (bg.LO, bg.LO)).I
        order_ok = order_ok and di1 > di2
    checks.append(
        ("task_split_inequalities", worst_id <= 1e-10 and order_ok, f"|identity|={worst_id:.2e}, dI ordered={order_ok}", "1e-10 / strict")
    )

    return checks


def _win_probability(game: bg.GameParams, signal, mu_m: float, mu_w: float) -> float:
    """w's winning probability at a fixed signal, by direct enumeration."""
    p_plus = mu_m * (1.0 - mu_w)
    p_minus = mu_w * (1.0 - mu_m)
    p_zero = 1.0 - p_plus - p_minus
    return (
        p_plus * (1.0 - signal.pi_plus)
        + p_zero * (1.0 - signal.pi_zero)
        + p_minus * (1.0 - signal.pi_minus)
    )


def cmd_reproduce(args) -> int:
    checks = _golden_checks()
    failed = [c for c in checks if not c[1]]
    if args.json:
        payload = {
            "schema": "riscreen.reproduce.v1",
            "checks": [
                {"name": n, "passed": ok, "measured": m, "tolerance": tol}
                for n, ok, m, tol in checks
            ],
            "passed": not failed,
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    else:
        lines = []
        for name, ok, measured, tol in checks:
            lines.append(f"{'PASS' if ok else 'FAIL'} {name}: {measured} (tolerance {tol})")
        lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
        _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _req(cfg: dict, dest: str) -> dict:
    """required=True unless the config file already supplies the value."""
    if dest in cfg:
        return {"default": cfg[dest]}
    return {"required": True}


def _add_game_args(sub, cfg, lam_default=None):
    sub.add_argument("--mu-hi", type=float, dest="mu_hi", **_req(cfg, "mu_hi"))
    sub.add_argument("--mu-lo", type=float, dest="mu_lo", **_req(cfg, "mu_lo"))
    sub.add_argument("--cost", type=float, default=cfg.get("cost", 0.07))
    if lam_default is None:
        sub.add_argument("--lambda", type=float, dest="lam", **_req(cfg, "lam"))
    else:
        sub.add_argument("--lambda", type=float, default=cfg.get("lam", lam_default), dest="lam")


def _add_sweep_args(sub, cfg):
    sub.add_argument(
        "--lambda-range",
        type=float,
        nargs=2,
        default=cfg.get("lambda_range", (0.05, 2.0)),
        metavar=("LO", "HI"),
    )
    sub.add_argument("--lambda-steps", type=int, default=cfg.get("lambda_steps", 40))


def _add_output_args(sub, cfg):
    sub.add_argument("--format", choices=("csv", "json"), default=cfg.get("format", "csv"))
    sub.add_argument("--out", default=cfg.get("out"))
    sub.add_argument("--seed", type=int, default=cfg.get("seed", 0))


def build_parser(cfg: Optional[dict] = None) -> argparse.ArgumentParser:
    cfg = cfg or {}
    parser = argparse.ArgumentParser(
        prog="riscreen",
        description="Promotion-game analysis under mutual-information attention costs.",
    )
    parser.add_argument("--config", default=None, help="JSON file with default option values")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("signal", help="optimal signal table for one effort profile")
    _add_game_args(p, cfg)
    p.add_argument("--profile", default=cfg.get("profile", "hi,lo"))
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--out", default=cfg.get("out"))
    p.set_defaults(func=cmd_signal)

    p = sub.add_parser("thresholds", help="regime cutpoints")
    _add_game_args(p, cfg, lam_default=1.0)
    p.add_argument("--out", default=cfg.get("out"))
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("equilibria", help="pure equilibria at one parameter point")
    _add_game_args(p, cfg)
    p.add_argument("--out", default=cfg.get("out"))
    p.set_defaults(func=cmd_equilibria)

    p = sub.add_parser("regimes", help="sweep lambda and write regime rows")
    _add_game_args(p, cfg, lam_default=1.0)
    _add_sweep_args(p, cfg)
    _add_output_args(p, cfg)
    p.add_argument(
        "--analysis",
        choices=("baseline", "quota", "multitask", "variants"),
        default=cfg.get("analysis", "baseline"),
    )
    p.add_argument("--task1", default=cfg.get("task1", "0.5,1.0,0.05"), help="alpha,beta,cost of task 1")
    p.add_argument("--task2", default=cfg.get("task2", "0.5,1.0,0.05"), help="alpha,beta,cost of task 2")
    p.add_argument("--svg", default=cfg.get("svg"), help="also write an SVG regime strip chart")
    p.set_defaults(func=cmd_regimes)

    p = sub.add_parser("quota", help="equal-promotion quota analysis")
    _add_game_args(p, cfg)
    p.add_argument("--out", default=cfg.get("out"))
    p.set_defaults(func=cmd_quota)

    p = sub.add_parser("multitask", help="two-task investment equilibria")
    _add_game_args(p, cfg)
    p.add_argument("--task1", help="alpha,beta,cost of task 1", **_req(cfg, "task1"))
    p.add_argument("--task2", help="alpha,beta,cost of task 2", **_req(cfg, "task2"))
    p.add_argument("--out", default=cfg.get("out"))
    p.set_defaults(func=cmd_multitask)

    p = sub.add_parser("variants", help="model variants")
    _add_game_args(p, cfg)
    p.add_argument(
        "--which",
        choices=("heterogeneous", "commitment", "prior-invariant", "mixed", "continuous"),
        **_req(cfg, "which"),
    )
    p.add_argument("--cost-m", type=float, default=cfg.get("cost_m", 0.07), dest="cost_m")
    p.add_argument("--cost-w", type=float, default=cfg.get("cost_w", 0.07), dest="cost_w")
    p.add_argument("--du-m", type=float, default=cfg.get("du_m", 1.0), dest="du_m")
    p.add_argument("--du-w", type=float, default=cfg.get("du_w", 1.0), dest="du_w")
    p.add_argument("--profile", default=cfg.get("profile", "hi,lo"))
    p.add_argument("--ref-prior", default=cfg.get("ref_prior"), dest="ref_prior", help="q(-1),q(0),q(1)")
    p.add_argument("--kappa", type=float, default=cfg.get("kappa", 0.65))
    p.add_argument("--grid-size", type=int, default=cfg.get("grid_size", 100), dest="grid_size")
    _add_sweep_args(p, cfg)
    p.add_argument("--out", default=cfg.get("out"))
    p.set_defaults(func=cmd_variants)

    p = sub.add_parser("reproduce", help="run the golden checks")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=cfg.get("out"))
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--config", default=None)
    known, _ = probe.parse_known_args(argv)
    cfg = None
    if known.config is not None:
        try:
            with open(known.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read config {known.config!r}: {exc}", file=sys.stderr)
            return 2
        if not isinstance(cfg, dict):
            print(f"error: config {known.config!r} must hold a JSON object", file=sys.stderr)
            return 2
    parser = build_parser(cfg)
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, bg.BracketError, ri_core.ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
