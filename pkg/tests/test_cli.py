import numpy as np
import pytest

import pumpspec as ps
from pumpspec import cli


def read(path):
    with open(path, "rb") as fh:
        return fh.read()


class TestParseConfig:
    def test_empty_gives_documented_defaults(self):
        cfg = cli.parse_config("populations")
        assert cfg.atom == ps.AtomParams(rabi=5.0, gamma_e=1.0, gamma_t=0.0, delta=0.0)
        assert cfg.numerics.dt == 1e-3
        assert cfg.numerics.t_end == 40.0
        assert cfg.numerics.tau == 40.0
        assert cfg.numerics.n_half == 64
        assert cfg.drive_type == "constant"
        assert not cfg.emit_plot

    def test_file_values(self):
        text = "[atom]\nrabi = 3.0\ngamma_t = 2.0\n[numerics]\nn_half = 16\n"
        cfg = cli.parse_config("populations", text)
        assert cfg.atom.rabi == 3.0
        assert cfg.atom.gamma_t == 2.0
        assert cfg.numerics.n_half == 16

    def test_flag_overrides_file(self):
        text = "[atom]\nrabi = 5.0\n"
        cfg = cli.parse_config("populations", text, {"atom.rabi": 3.0})
        assert cfg.atom.rabi == 3.0

    def test_unknown_key_named(self):
        with pytest.raises(ps.ValidationError, match="atom.frequency"):
            cli.parse_config("populations", "[atom]\nfrequency = 2\n")

    def test_unknown_section_named(self):
        with pytest.raises(ps.ValidationError, match="laser"):
            cli.parse_config("populations", "[laser]\npower = 2\n")

    def test_type_mismatch_named(self):
        with pytest.raises(ps.ValidationError, match="numerics.n_half"):
            cli.parse_config("populations", "[numerics]\nn_half = many\n")

    def test_negative_rate_names_key(self):
        with pytest.raises(ps.ValidationError, match="gamma_e"):
            cli.parse_config("populations", "", {"atom.gamma_e": -1.0})

    def test_sweep_requirements(self):
        with pytest.raises(ps.ValidationError, match="sweep.parameter"):
            cli.parse_config("sweep", "")
        with pytest.raises(ps.ValidationError, match="expramp"):
            cli.parse_config("sweep", "[sweep]\nparameter = rise_time\nvalues = 1, 2\n")
        cfg = cli.parse_config(
            "sweep", "[drive]\ntype = expramp\n[sweep]\nparameter = rise_time\n"
                     "values = 0.2, 1 5\n")
        assert cfg.sweep_values == (0.2, 1.0, 5.0)

    def test_invalid_mode(self):
        with pytest.raises(ps.ValidationError, match="mode"):
            cli.parse_config("spectral", "")


class TestCsvContracts:
    def test_populations_columns_and_determinism(self, tmp_path):
        cfg = cli.parse_config("populations", "", {
            "output.directory": str(tmp_path / "a"),
            "numerics.t_end": 2.0, "numerics.dt": 0.005})
        assert cli.run_scenario(cfg, log=lambda *_: None) == 0
        path = tmp_path / "a" / "populations.csv"
        lines = read(path).decode().splitlines()
        assert lines[0] == "t,rho_gg,rho_ee,rho_tt,re_ge,im_ge,re_et,im_et,re_gt,im_gt"
        assert len(lines) == 1 + 401
        assert read(path).endswith(b"\n")

        cfg2 = cli.parse_config("populations", "", {
            "output.directory": str(tmp_path / "b"),
            "numerics.t_end": 2.0, "numerics.dt": 0.005})
        cli.run_scenario(cfg2, log=lambda *_: None)
        assert read(path) == read(tmp_path / "b" / "populations.csv")

    def test_spectrum_line_count(self, tmp_path):
        cfg = cli.parse_config("spectrum-analytic", "", {
            "output.directory": str(tmp_path), "numerics.n_half": 16})
        assert cli.run_scenario(cfg, log=lambda *_: None) == 0
        lines = read(tmp_path / "spectrum_analytic.csv").decode().splitlines()
        assert lines[0] == "omega,s_re,s_im,s_abs2"
        assert len(lines) == 2 * 16 + 2

    def test_write_csv_dispatch(self, tmp_path):
        with pytest.raises(ps.ValidationError):
            cli.write_csv(object(), str(tmp_path / "x.csv"))

    def test_emit_plot_dispatch(self, tmp_path):
        grid = ps.FrequencyGrid(tau=10.0, n_half=4)
        spec = ps.SpectrumResult(grid, np.ones(9, dtype=complex))
        cli.emit_plot(spec, str(tmp_path / "s.svg"))
        assert read(tmp_path / "s.svg").startswith(b"<?xml")
        with pytest.raises(ps.ValidationError):
            cli.emit_plot(object(), str(tmp_path / "x.svg"))


class TestExitCodes:
    def test_validation_error_is_2_and_writes_nothing(self, tmp_path):
        out = tmp_path / "never"
        rc = cli.main(["populations", "--gamma-e", "-1", "--out-dir", str(out)])
        assert rc == 2
        assert not out.exists()

    def test_unknown_config_key_is_2(self, tmp_path):
        cfg_file = tmp_path / "bad.ini"
        cfg_file.write_text("[atom]\nnope = 1\n")
        out = tmp_path / "never"
        rc = cli.main(["populations", "--config", str(cfg_file), "--out-dir", str(out)])
        assert rc == 2
        assert not out.exists()

    def test_numerical_failure_is_3(self, tmp_path):
        rc = cli.main(["spectrum-trajectory", "--dt", "0.5",
                       "--out-dir", str(tmp_path / "n")])
        assert rc == 3

    def test_overdamped_is_validation(self, tmp_path):
        rc = cli.main(["spectrum-analytic", "--rabi", "0.3",
                       "--out-dir", str(tmp_path / "o")])
        assert rc == 2

    def test_io_failure_is_4(self, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("not a directory")
        rc = cli.main(["spectrum-analytic", "--out-dir", str(blocker / "sub"),
                       "--n-half", "8"])
        assert rc == 4

    def test_success_is_0(self, tmp_path):
        rc = cli.main(["spectrum-analytic", "--out-dir", str(tmp_path),
                       "--n-half", "8"])
        assert rc == 0


class TestScenarios:
    def test_populations_reference_run_transfers_population(self, tmp_path):
        cfg = cli.parse_config("populations", "", {"output.directory": str(tmp_path)})
        cli.run_scenario(cfg, log=lambda *_: None)
        data = np.genfromtxt(tmp_path / "populations.csv", delimiter=",", names=True)
        assert data["rho_tt"][-1] > 0.999

    def test_qrt_mode_emits_convergence_trace_at_zero_gamma_t(self, tmp_path):
        cfg = cli.parse_config("spectrum-qrt", "", {
            "output.directory": str(tmp_path), "numerics.n_half": 32})
        assert cli.run_scenario(cfg, log=lambda *_: None) == 0
        assert (tmp_path / "spectrum_qrt.csv").exists()
        conv = read(tmp_path / "qrt_convergence.csv").decode().splitlines()
        assert conv[0] == "gamma_t,linf_diff_from_previous"
        assert len(conv) == 4

    def test_qrt_mode_direct_at_positive_gamma_t(self, tmp_path):
        cfg = cli.parse_config("spectrum-qrt", "", {
            "output.directory": str(tmp_path), "atom.gamma_t": 2.0,
            "numerics.n_half": 32})
        assert cli.run_scenario(cfg, log=lambda *_: None) == 0
        assert not (tmp_path / "qrt_convergence.csv").exists()

    def test_compare_mode(self, tmp_path):
        lines = []
        cfg = cli.parse_config("compare", "", {"output.directory": str(tmp_path)})
        assert cli.run_scenario(cfg, log=lines.append) == 0
        for name in ("spectrum_analytic.csv", "spectrum_qrt.csv",
                     "spectrum_trajectory.csv", "compare_report.csv"):
            assert (tmp_path / name).exists()
        report = read(tmp_path / "compare_report.csv").decode()
        row = next(l for l in report.splitlines() if l.startswith("trajectory|qrt"))
        assert row.endswith("true")
        assert any("trajectory vs qrt" in l and "pass" in l for l in lines)

    def test_sweep_mode(self, tmp_path):
        cfg = cli.parse_config("sweep", "", {
            "output.directory": str(tmp_path),
            "sweep.parameter": "delta", "sweep.values": "0,1,2",
            "numerics.tau": 20.0, "numerics.n_half": 32,
            "numerics.dt": 0.002})
        assert cli.run_scenario(cfg, log=lambda *_: None) == 0
        for v in ("0", "1", "2"):
            assert (tmp_path / f"sweep_delta_{v}.csv").exists()
        summary = np.genfromtxt(tmp_path / "sweep_summary.csv", delimiter=",", names=True)
        assert summary["peak_separation"].shape == (3,)
        seps = summary["peak_separation"]
        assert seps[2] > seps[0]

    def test_sweep_parallel_workers(self, tmp_path, monkeypatch):
        monkeypatch.setenv("PUMPSPEC_WORKERS", "2")
        cfg = cli.parse_config("sweep", "", {
            "output.directory": str(tmp_path),
            "sweep.parameter": "delta", "sweep.values": "0,1",
            "numerics.tau": 10.0, "numerics.n_half": 8,
            "numerics.dt": 0.005})
        assert cli.run_scenario(cfg, log=lambda *_: None) == 0
        assert (tmp_path / "sweep_delta_0.csv").exists()
        assert (tmp_path / "sweep_delta_1.csv").exists()

    def test_plot_emission(self, tmp_path):
        cfg = cli.parse_config("populations", "", {
            "output.directory": str(tmp_path), "output.emit_plot": True,
            "numerics.t_end": 2.0, "numerics.dt": 0.005})
        cli.run_scenario(cfg, log=lambda *_: None)
        svg = read(tmp_path / "populations.svg")
        assert svg.startswith(b"<?xml")
        assert b"<svg" in svg

    def test_compare_plot(self, tmp_path):
        cfg = cli.parse_config("compare", "", {
            "output.directory": str(tmp_path), "output.emit_plot": True})
        cli.run_scenario(cfg, log=lambda *_: None)
        assert read(tmp_path / "compare.svg").startswith(b"<?xml")


class TestHelp:
    def test_help_documents_defaults(self):
        parser = cli.build_arg_parser()
        assert "populations" in parser.format_help()
        sub_help = None
        for action in parser._actions:
            if hasattr(action, "choices") and action.choices:
                sub_help = action.choices["populations"].format_help()
        assert sub_help is not None
        for token in ("default: 5", "default: 1", "default: 0",
                      "default: 0.001", "default: 40", "default: 64"):
            assert token in sub_help
