import csv
import dataclasses
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavebc.cli import (
    EXIT_ANALYSIS,
    EXIT_CONFIG,
    EXIT_DIVERGED,
    EXIT_IO,
    EXIT_OK,
    ConflictingOptions,
    InvalidValue,
    RunConfig,
    UnknownFlag,
    config_hash,
    dispatch,
    main,
    parse_config,
    serialize,
)
from wavebc.report import StabilityClass, parse_reports


def run_main(tmp_path, *argv):
    return main([*argv, "--out", str(tmp_path)])


def manifest_sections(path):
    out, cur = {}, None
    for line in path.read_text().splitlines():
        if line.startswith("["):
            cur = line[1:-1]
            out[cur] = {}
        elif line.strip():
            k, _, v = line.partition("=")
            out[cur][k.strip()] = v.strip()
    return out


class TestParse:
    def test_table1_row(self):
        cfg = parse_config(["table1", "--b", "0", "--h", "1e-2"])
        assert cfg.command == "table1" and cfg.b == "0" and cfg.h == (1e-2,)

    def test_analyze_scalar(self):
        cfg = parse_config(["analyze", "--bc", "type2", "--b", "0.6"])
        assert cfg.bc == "type2" and float(cfg.b) == 0.6

    def test_courant_guard(self):
        with pytest.raises(InvalidValue) as exc:
            parse_config(["solve", "--b", "i0.5", "--courant", "1.2"])
        assert exc.value.key == "courant"

    def test_equals_syntax_and_dashes(self):
        cfg = parse_config(["growth", "--t-end=3", "--sample_dt", "0.5"])
        assert cfg.t_end == 3.0 and cfg.sample_dt == 0.5

    def test_command_defaults(self):
        assert parse_config(["table2"]).beta == (0.5, 0.9, 0.99)
        assert parse_config(["growth"]).t_end == 20.0 and parse_config(["growth"]).b == "0.5"
        assert parse_config(["forcing"]).h == (2.5e-3,)

    def test_case_sensitive_keys(self):
        cfg = parse_config(["analyze", "--bc", "system", "--B", "2"])
        assert cfg.B == (((2.0,),),) and cfg.b == "0"
        cfg = parse_config(["solve", "--N", "41", "--n", "3"])
        assert cfg.N == 41 and cfg.n == 3

    def test_precedence(self, tmp_path):
        p = tmp_path / "c.txt"
        p.write_text("# comment\ncommand = solve\nt_end = 2\ncourant = 0.4\n")
        cfg = parse_config(["--config", str(p), "--t-end", "3"])
        assert (cfg.command, cfg.t_end, cfg.courant) == ("solve", 3.0, 0.4)

    @pytest.mark.parametrize(
        "argv,err",
        [
            (["solve", "--bogus", "1"], UnknownFlag),
            (["solve", "extra"], UnknownFlag),
            (["explode"], InvalidValue),
            (["solve", "--t-end"], InvalidValue),
            (["solve", "--t-end", "abc"], InvalidValue),
            (["solve", "--t-end", "-1"], InvalidValue),
            (["solve", "--h", "0.3"], InvalidValue),
            (["solve", "--N", "4"], InvalidValue),
            (["solve", "--N", "51", "--h", "1e-2"], ConflictingOptions),
            (["solve", "--b", "1+2x"], InvalidValue),
            (["analyze", "--bc", "type9"], InvalidValue),
            (["analyze", "--bc", "type2", "--b", "1.5"], InvalidValue),
            (["analyze", "--bc", "coupled", "--a", "2"], ConflictingOptions),
            (["analyze", "--bc", "type2", "--b1", "2"], ConflictingOptions),
            (["analyze", "--bc", "system", "--A1", "1 2; 3 4"], InvalidValue),
            (["analyze", "--bc", "system", "--s", "-1"], InvalidValue),
            (["table1", "--bc", "type2"], ConflictingOptions),
            (["table2", "--beta", "1.0"], InvalidValue),
            (["forcing", "--variant", "H"], InvalidValue),
            (["growth", "--b", "i0.5"], InvalidValue),
            (["roots", "--case", "both"], InvalidValue),
            (["roots", "--n", "0"], InvalidValue),
            (["solve", "--command", "growth"], ConflictingOptions),
        ],
    )
    def test_rejections(self, argv, err):
        with pytest.raises(err):
            parse_config(argv)

    def test_flagged_illegal_scalar(self):
        cfg = parse_config(["analyze", "--bc", "type1", "--a", "-1", "--flagged", "true"])
        assert cfg.flagged

    def test_config_file_errors(self, tmp_path):
        with pytest.raises(InvalidValue):
            parse_config(["--config", str(tmp_path / "missing.txt")])
        with pytest.raises(InvalidValue):
            parse_config(config_text="just words\n")
        with pytest.raises(UnknownFlag):
            parse_config(config_text="colour = red\n")


configs = st.one_of(
    st.builds(
        lambda b, h: ["table1", "--b", b, "--h", h],
        st.sampled_from(["0", "0.5", "i0.5", "0,i0.25"]),
        st.sampled_from(["1e-2", "1e-2,5e-3", "0.04"]),
    ),
    st.builds(
        lambda kind, b: ["analyze", "--bc", kind, "--b", b],
        st.sampled_from(["type2", "type4"]),
        st.sampled_from(["0.25", "-0.5", "0.9"]),
    ),
    st.builds(
        lambda b1, b2: ["analyze", "--bc", "coupled", "--b1", str(b1), "--b2", str(b2)],
        st.floats(-3, 3, allow_nan=False),
        st.floats(-3, 3, allow_nan=False),
    ),
    st.builds(
        lambda c, t: ["solve", "--courant", str(c), "--t-end", str(t), "--problem", "surface", "--beta", "0.7"],
        st.floats(0.05, 0.7),
        st.floats(0, 100, allow_nan=False),
    ),
    st.builds(lambda case, n: ["roots", "--case", case, "--n", str(n)], st.sampled_from(["loss", "gain"]), st.integers(1, 50)),
    st.just(["analyze", "--bc", "system", "--A1", "2 0.5; 0.5 1", "--B", "1 0; 0 3 | 2 0; 0 2", "--s", "0.3+1.1i", "--omega", "0.4,-2"]),
)


class TestRoundTrip:
    @settings(max_examples=60, deadline=None)
    @given(configs)
    def test_serialize_parse(self, argv):
        cfg = parse_config(argv)
        assert parse_config(config_text=serialize(cfg)) == cfg

    def test_hash_ignores_out(self):
        cfg = parse_config(["solve"])
        assert config_hash(cfg) == config_hash(dataclasses.replace(cfg, out="/elsewhere"))
        assert config_hash(cfg) != config_hash(dataclasses.replace(cfg, t_end=2.0))


class TestDispatch:
    def test_type4_unstable(self, tmp_path):
        assert run_main(tmp_path, "analyze", "--bc", "type4", "--b", "0.5") == EXIT_OK
        (report,) = tmp_path.glob("analyze-*.txt")
        (r,) = parse_reports(report.read_text())
        assert r.classification is StabilityClass.UNSTABLE

    def test_coupled_ill_posed(self, tmp_path):
        assert run_main(tmp_path, "analyze", "--bc", "coupled", "--b1", "2", "--b2", "-1") == EXIT_OK
        (report,) = tmp_path.glob("analyze-*.txt")
        assert "classification = IllPosed" in report.read_text()

    def test_system_split(self, tmp_path):
        assert run_main(tmp_path, "analyze", "--bc", "system", "--A1", "1 0; 0 4", "--B", "1 0; 0 1", "--s", "1+1i") == EXIT_OK
        text = next(tmp_path.glob("analyze-*.txt")).read_text()
        assert "n_minus = 2" in text and "n_plus = 2" in text

    def test_roots(self, tmp_path):
        assert run_main(tmp_path, "roots", "--case", "loss", "--n", "5") == EXIT_OK
        rows = list(csv.DictReader(next(tmp_path.glob("roots-*.csv")).open()))
        assert [int(r["n"]) for r in rows] == [1, 2, 3, 4, 5]
        assert all(float(r["residual"]) < 1e-10 for r in rows)

    def test_table1_three_rows(self, tmp_path):
        assert run_main(tmp_path, "table1", "--b", "i0.5", "--h", "0.05,0.04,0.025") == EXIT_OK
        rows = list(csv.reader(next(tmp_path.glob("table1-*.csv")).open()))
        assert rows[0] == ["case", "h", "err_t1", "err_t10"] and len(rows) == 4
        assert all(r[0] == "b=i0.5" for r in rows[1:])

    def test_solve_artifacts_and_manifest(self, tmp_path):
        argv = ["solve", "--problem", "surface", "--beta", "0.5", "--h", "0.05", "--t-end", "0.5", "--sample-dt", "0.1"]
        assert run_main(tmp_path, *argv) == EXIT_OK
        cfg = parse_config([*argv, "--out", str(tmp_path)])
        run_id = f"solve-{config_hash(cfg)}"
        assert (tmp_path / f"{run_id}.csv").exists() and (tmp_path / f"{run_id}-snapshot.txt").exists()
        sec = manifest_sections(tmp_path / "manifest.txt")[run_id]
        assert sec["grid_N"] == "21" and float(sec["dt"]) == 0.025 and sec["status"] == "0"
        assert sec["artifact"] == f"{run_id}.csv"
        for f in dataclasses.fields(RunConfig):
            assert f.name in sec
        # a second run is appended as its own section
        assert run_main(tmp_path, "roots", "--n", "2") == EXIT_OK
        assert len(manifest_sections(tmp_path / "manifest.txt")) == 2

    def test_growth_and_forcing(self, tmp_path):
        assert run_main(tmp_path, "growth", "--h", "0.05", "--t-end", "1") == EXIT_OK
        assert next(tmp_path.glob("growth-*.csv")).read_text().startswith("h,time,maxnorm")
        assert run_main(tmp_path, "forcing", "--h", "0.025", "--beta", "0.9", "--variant", "Gt", "--t-end", "1") == EXIT_OK
        assert next(tmp_path.glob("forcing-*.csv")).read_text().startswith("beta,variant,time,maxnorm")

    def test_table2(self, tmp_path):
        assert run_main(tmp_path, "table2", "--beta", "0.5", "--h", "0.05") == EXIT_OK
        rows = list(csv.reader(next(tmp_path.glob("table2-*.csv")).open()))
        assert rows[1][0] == "beta=0.5"

    def test_divergence_exit(self, tmp_path):
        assert run_main(tmp_path, "solve", "--b", "0.5", "--h", "1e-2", "--t-end", "60", "--sample-dt", "5") == EXIT_DIVERGED
        sec = next(iter(manifest_sections(tmp_path / "manifest.txt").values()))
        assert sec["status"] == str(EXIT_DIVERGED) and sec["artifact"] == "none"

    def test_analysis_failure_exit(self, tmp_path, monkeypatch):
        import wavebc.cli as cli

        def failing(case, n):
            raise cli.NoConvergence("forced")

        monkeypatch.setattr(cli, "reflection_roots", failing)
        assert dispatch(parse_config(["roots", "--n", "2", "--out", str(tmp_path)])).status == EXIT_ANALYSIS

    def test_config_error_exit(self, tmp_path, capsys):
        assert run_main(tmp_path, "analyze", "--bc", "type2", "--b", "1.5") == EXIT_CONFIG
        assert "error:" in capsys.readouterr().err

    def test_io_error_exit(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("")
        assert main(["roots", "--out", str(blocker / "sub")]) == EXIT_IO

    def test_help(self, capsys):
        assert main([]) == EXIT_OK
        assert "Exit status" in capsys.readouterr().out

    def test_module_entry_point(self, tmp_path):
        proc = subprocess.run(
            [sys.executable, "-m", "wavebc", "analyze", "--bc", "type3", "--out", str(tmp_path)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == EXIT_OK, proc.stderr
        assert "Stable" in proc.stdout
