#  Copyright (c) 2026 smcrc developers. See LICENSE

import io
import os
import pathlib

import pytest

from smcrc.__main__ import main
from smcrc.cli import Cli, build_parser, commands
from smcrc.configuration import Configuration
from smcrc.core.errors import ErrCode
from smcrc.thresholds import PerStep, read_schedule

from lib import package_data_path


@pytest.fixture
def cli(monkeypatch, tmp_path):
    monkeypatch.setitem(os.environ, "XDG_CONFIG_HOME", str(tmp_path / "config"))
    monkeypatch.setitem(os.environ, "XDG_DATA_HOME", str(tmp_path / "data"))
    config = Configuration()
    config.initialize()
    return Cli(config=config, out=io.StringIO(), err=io.StringIO())


def _run(cli, *argv):
    code = cli.run(build_parser().parse_args(list(argv)))
    out, err = cli.out.getvalue(), cli.err.getvalue()
    cli.out.seek(0)
    cli.out.truncate()
    cli.err.seek(0)
    cli.err.truncate()
    return code, out, err


def test_parser_knows_every_command():
    parser = build_parser()
    for name in commands:
        assert parser.parse_args([name] + (["coin"] if name == "oracle" else []) +
                                 (["--out", "x"] if name in ("simulate", "pilot") else [])).command == name


def test_oracle(cli):
    code, out, _ = _run(cli, "oracle", "coin")
    assert code == 0
    assert out.splitlines()[0] == "case\tclosed_form\tseries"
    assert out.splitlines()[-1].startswith("total\t0.64631")

    code, out, _ = _run(cli, "oracle", "negbin", "-N", "5", "-p", "0.3")
    values = dict(line.split("\t") for line in out.splitlines())
    assert abs(float(values["negbin_series"]) - 0.06) < 1e-9
    assert float(values["expected_propagations"]) == pytest.approx(20.0)

    code, out, _ = _run(cli, "oracle", "enumeration", "--model", "coin", "--data", "none.csv")
    assert code == int(ErrCode.ConfigError)


def test_simulate_then_run(cli, tmp_path):
    data = tmp_path / "lgss.csv"
    code, out, _ = _run(cli, "simulate", "--model", "lgss", "--param", "outlier_prob=0.1",
                        "--horizon", "12", "--seed", "4", "--out", str(data), "--with-states")
    assert code == 0
    assert data.exists() and (tmp_path / "lgss.states.csv").exists()

    code, out, _ = _run(cli, "run", "--model", "lgss", "--data", str(data), "--filter", "pfrc",
                        "-N", "32", "--threshold", "constant:1e-3", "--seed", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "filter\tpfrc"
    assert lines[3].startswith("log_Z\t")
    assert lines[5] == "t\tP_t\tc_t\tlog_weight_sum"
    assert len(lines) == 6 + 12
    assert lines[6].split("\t")[2] == "0.001"

    code, out2, _ = _run(cli, "run", "--model", "lgss", "--data", str(data), "--filter", "pfrc",
                         "-N", "32", "--threshold", "constant:1e-3", "--seed", "5")
    assert out2 == out

    code, out, _ = _run(cli, "oracle", "kalman", "--model", "lgss", "--data", str(data))
    assert code == 0 and out.startswith("kalman_loglik\t")


def test_missing_seed(cli):
    code, out, err = _run(cli, "experiment", "--model", "lgss", "--simulate-seed", "1", "--horizon", "5")
    assert code == int(ErrCode.ConfigError) == 2
    assert err.strip().startswith('error code=ConfigError exit=2 message="A seed is required')


def test_error_line_for_bad_threshold(cli):
    code, _, err = _run(cli, "run", "--model", "lgss", "--simulate-seed", "1", "--horizon", "5",
                        "--filter", "pfrc", "--threshold", "constant:-1", "--seed", "1")
    assert code == int(ErrCode.InvalidThreshold)
    assert err.startswith("error code=InvalidThreshold exit=22 ")


def test_experiment(cli, tmp_path):
    args = ["experiment", "--model", "hmm", "--param", "random={states: 2, symbols: 2, seed: 1}",
            "--simulate-seed", "2", "--horizon", "4", "-N", "8", "-M", "30", "--seed", "9",
            "--filter", "pfrc", "--threshold", "constant:0.2"]
    code, out, _ = _run(cli, *args, "--out", str(tmp_path / "a"))
    assert code == 0
    assert out.splitlines()[0] == "filter,threshold,N,rho,ess,ess_per_rho,var_log_z,rho_var_log_z,M,mean_z,se_z"

    code, _, _ = _run(cli, *args, "--out", str(tmp_path / "b"), "--jobs", "2")
    assert code == 0
    for name in ("summary.csv", "replicates-0.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_experiment_from_config(cli, tmp_path):
    config = tmp_path / "hmm.yaml"
    config.write_text((package_data_path / "experiments" / "hmm-oracle.yaml").read_text())
    code, out, _ = _run(cli, "experiment", "--config", str(config), "-M", "20", "--seed", "1",
                        "--out", str(tmp_path / "out"))
    assert code == 0
    assert len(out.splitlines()) == 4
    assert (tmp_path / "out" / "replicates-2.csv").exists()


def test_pilot(cli, tmp_path):
    schedule = tmp_path / "pilot.txt"
    code, out, _ = _run(cli, "pilot", "--model", "lgss", "--simulate-seed", "1", "--horizon", "6",
                        "-N", "16", "--threshold", "quantile:0.2", "--seed", "3", "--out", str(schedule))
    assert code == 0
    recorded = read_schedule(schedule)
    assert isinstance(recorded, PerStep) and len(recorded.values) == 6

    code, out, _ = _run(cli, "run", "--model", "lgss", "--simulate-seed", "1", "--horizon", "6",
                        "--filter", "pfrc", "-N", "16", "--threshold", f"file:{schedule}", "--seed", "4")
    assert code == 0
    assert out.splitlines()[1] == "threshold\tper-step"


def test_bias_demo(cli):
    code, out, _ = _run(cli, "bias-demo", "-M", "500", "--seed", "1")
    assert code == 0
    assert "quantile=0.5" in out
    assert "0.70392" in out and "0.58132" in out

    code, _, err = _run(cli, "bias-demo", "-M", "500")
    assert code == int(ErrCode.ConfigError)

    code, _, err = _run(cli, "bias-demo", "-M", "0", "--seed", "1")
    assert code == int(ErrCode.ConfigError)
    assert "at least two replicates" in err


def test_main(monkeypatch, tmp_path, capsys):
    monkeypatch.setitem(os.environ, "XDG_CONFIG_HOME", str(tmp_path))
    monkeypatch.setitem(os.environ, "XDG_DATA_HOME", str(tmp_path))
    assert main(["oracle", "negbin", "-N", "2", "-p", "0.5"]) == 0
    assert "negbin_series" in capsys.readouterr().out
    assert pathlib.Path(tmp_path, "smcrc", "logs", "smcrc.log").exists()
