"""CLI behavior: formats, determinism, exit codes, golden checks."""

import json

import pytest

from riscreen import baseline_game as bg
from riscreen import cli


def run(args, capsys):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


CANON = ["--mu-hi", ".8", "--mu-lo", ".6", "--cost", ".07"]


class TestSignalCommand:
    def test_published_table_rows(self, capsys):
        code, out, _ = run(["signal", *CANON, "--lambda", ".3", "--profile", "hi,lo"], capsys)
        assert code == 0
        assert "0.32  0.56  0.12" in out
        assert "0.98  0.74  0.09" in out
        assert "pi_bar=0.7441" in out

    def test_oracle_flag_reports_residual(self, capsys):
        code, out, _ = run(
            ["signal", *CANON, "--lambda", ".3", "--profile", "hi,lo", "--oracle"], capsys
        )
        assert code == 0
        line = next(l for l in out.splitlines() if l.startswith("oracle residual"))
        assert float(line.split("=")[1]) <= 1e-8

    def test_degenerate_notice(self, capsys):
        code, out, _ = run(["signal", *CANON, "--lambda", "2", "--profile", "hi,lo"], capsys)
        assert code == 0
        assert "degenerate: promote m" in out

    def test_symmetric_profile_row(self, capsys):
        code, out, _ = run(["signal", *CANON, "--lambda", ".3", "--profile", "hi,hi"], capsys)
        assert code == 0
        assert "0.50" in out

    def test_invalid_parameters_exit_2(self, capsys):
        code, _, err = run(["signal", "--mu-hi", ".6", "--mu-lo", ".8", "--lambda", ".3"], capsys)
        assert code == 2
        assert "error" in err

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["signal", "--mu-hi", ".8"])
        assert exc.value.code == 2
        capsys.readouterr()


class TestRegimesCommand:
    def test_deterministic_csv(self, tmp_path, capsys):
        args = [
            "regimes",
            *CANON,
            "--lambda-range", "0.05", "2.0",
            "--lambda-steps", "30",
            "--seed", "7",
        ]
        _, first, _ = run(args, capsys)
        _, second, _ = run(args, capsys)
        assert first == second
        assert first.startswith(f"# schema={cli.SCHEMA_VERSION}\n")

    def test_boundaries_within_one_grid_step(self, capsys):
        steps = 140
        code, out, _ = run(
            ["regimes", *CANON, "--lambda-range", "0.05", "2.0", "--lambda-steps", str(steps)],
            capsys,
        )
        assert code == 0
        rows = [
            line.split(",")
            for line in out.splitlines()
            if line and not line.startswith("#") and not line.startswith("lam")
        ]
        lam = [float(r[0]) for r in rows]
        step = lam[1] - lam[0]
        cuts = bg.thresholds(bg.GameParams(0.8, 0.6, 0.07, 1.0))
        hi_flags = [int(r[1]) for r in rows]
        disc_flags = [int(r[2]) for r in rows]
        lo_flags = [int(r[4]) for r in rows]
        # last lambda with the high-effort equilibrium brackets lambda_star
        last_hi = max(l for l, f in zip(lam, hi_flags) if f)
        assert abs(last_hi - cuts.lambda_star) <= step
        first_lo = min(l for l, f in zip(lam, lo_flags) if f)
        assert abs(first_lo - cuts.lambda_star) <= step
        disc_on = [l for l, f in zip(lam, disc_flags) if f]
        assert abs(min(disc_on) - cuts.lambda_low) <= step
        assert abs(max(disc_on) - cuts.lambda_high) <= step

    def test_quota_mode_kills_discrimination_columns(self, capsys):
        code, out, _ = run(
            ["regimes", *CANON, "--analysis", "quota", "--lambda-range", "0.05", "2.0",
             "--lambda-steps", "25"],
            capsys,
        )
        assert code == 0
        for line in out.splitlines():
            if line.startswith("#") or line.startswith("lam") or not line:
                continue
            cells = line.split(",")
            assert cells[2] == "0" and cells[3] == "0"

    def test_json_matches_shipped_schema(self, capsys):
        code, out, _ = run(
            ["regimes", *CANON, "--format", "json", "--lambda-steps", "5",
             "--lambda-range", "0.1", "1.0"],
            capsys,
        )
        assert code == 0
        payload = json.loads(out)
        import importlib.resources as resources

        schema = json.loads(
            resources.files("riscreen").joinpath("schemas/regimes.schema.json").read_text()
        )
        jsonschema = pytest.importorskip("jsonschema")
        jsonschema.validate(payload, schema)

    def test_multitask_mode(self, capsys):
        code, out, _ = run(
            ["regimes", *CANON, "--analysis", "multitask",
             "--task1", "0.5,1.0,0.028", "--task2", "0.5,1.0,0.03",
             "--lambda-range", "0.1", "1.2", "--lambda-steps", "12"],
            capsys,
        )
        assert code == 0
        assert "most_profitable" in out.splitlines()[6]

    def test_variants_mode(self, capsys):
        code, out, _ = run(
            ["regimes", *CANON, "--analysis", "variants",
             "--lambda-range", "0.3", "0.9", "--lambda-steps", "4"],
            capsys,
        )
        assert code == 0
        assert "commitment_profit" in out

    def test_svg_strip_chart(self, tmp_path, capsys):
        svg = tmp_path / "strip.svg"
        out_csv = tmp_path / "rows.csv"
        code, _, _ = run(
            ["regimes", *CANON, "--lambda-steps", "12", "--lambda-range", "0.05", "1.5",
             "--out", str(out_csv), "--svg", str(svg)],
            capsys,
        )
        assert code == 0
        text = svg.read_text()
        assert text.startswith("<svg") and text.count("<rect") == 12


class TestConfigFile:
    def test_config_supplies_required_values(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"mu_hi": 0.8, "mu_lo": 0.6, "cost": 0.07, "lam": 0.3}))
        code, out, _ = run(["--config", str(cfg), "signal"], capsys)
        assert code == 0
        assert "0.98  0.74  0.09" in out

    def test_flags_override_config(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"mu_hi": 0.8, "mu_lo": 0.6, "cost": 0.07, "lam": 2.0}))
        code, out, _ = run(["--config", str(cfg), "signal", "--lambda", "0.3"], capsys)
        assert code == 0
        assert "degenerate" not in out

    def test_missing_config_exit_2(self, capsys):
        code, _, err = run(["--config", "/does/not/exist.json", "signal"], capsys)
        assert code == 2
        assert "error" in err


class TestReproduce:
    def test_all_checks_pass(self, capsys):
        code, out, _ = run(["reproduce"], capsys)
        assert code == 0
        assert "FAIL" not in out
        assert out.count("PASS") == len(cli._golden_checks())

    def test_json_report(self, capsys):
        code, out, _ = run(["reproduce", "--json"], capsys)
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert all(set(c) == {"name", "passed", "measured", "tolerance"} for c in payload["checks"])

    def test_tampered_constant_fails_named_check(self, capsys, monkeypatch):
        real = bg.g_func
        monkeypatch.setattr(bg, "g_func", lambda gamma: real(gamma) + 1e-3)
        code, out, _ = run(["reproduce"], capsys)
        assert code == 1
        assert any("FAIL threshold_inverse_consistency" in l for l in out.splitlines())


class TestOtherCommands:
    def test_thresholds(self, capsys):
        code, out, _ = run(["thresholds", *CANON], capsys)
        assert code == 0
        assert "lambda_star=0.5765" in out

    def test_equilibria_marks_most_profitable(self, capsys):
        code, out, _ = run(["equilibria", *CANON, "--lambda", ".3"], capsys)
        assert code == 0
        starred = [l for l in out.splitlines() if l.endswith("*") and "hi,hi" in l]
        assert starred

    def test_quota_command(self, capsys):
        code, out, _ = run(["quota", *CANON, "--lambda", ".3"], capsys)
        assert code == 0
        assert "quota equilibria: (hi,hi)" in out

    def test_multitask_command(self, capsys):
        code, out, _ = run(
            ["multitask", *CANON, "--lambda", ".45",
             "--task1", "0.5,1.0,0.028", "--task2", "0.5,1.0,0.03"],
            capsys,
        )
        assert code == 0
        assert "most profitable:" in out

    @pytest.mark.parametrize(
        "extra",
        [
            ["--which", "heterogeneous", "--cost-m", "0.06", "--cost-w", "0.08"],
            ["--which", "commitment"],
            ["--which", "prior-invariant", "--ref-prior", "0.2,0.5,0.3"],
            ["--which", "mixed"],
            ["--which", "continuous", "--lambda-range", "0.2", "1.0", "--lambda-steps", "4",
             "--grid-size", "40"],
        ],
    )
    def test_variants_subcommands_run(self, extra, capsys):
        code, out, _ = run(["variants", *CANON, "--lambda", ".4", *extra], capsys)
        assert code == 0
        assert out.strip()

    def test_prior_invariant_requires_reference(self, capsys):
        code, _, err = run(["variants", *CANON, "--lambda", ".4", "--which", "prior-invariant"], capsys)
        assert code == 2
        assert "ref-prior" in err

    def test_out_file_writing(self, tmp_path, capsys):
        target = tmp_path / "sig.txt"
        code, out, _ = run(["signal", *CANON, "--lambda", ".3", "--out", str(target)], capsys)
        assert code == 0
        assert out == ""
        assert "pi_bar=0.7441" in target.read_text()
