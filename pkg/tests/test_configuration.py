#  Copyright (c) 2026 smcrc developers. See LICENSE

import os
import pathlib

from smcrc.configuration import Configuration
from smcrc.experiment import load_config


# monkey patch is amazing!
# https://docs.pytest.org/en/latest/monkeypatch.html
def test_basic(monkeypatch, tmp_path):
    monkeypatch.setitem(os.environ, "XDG_CONFIG_HOME", str(tmp_path))
    monkeypatch.setitem(os.environ, "XDG_DATA_HOME", str(tmp_path))

    # test creation of config dirs and default files
    config = Configuration()
    config.initialize()

    assert config.log_path.exists()
    assert config.scratch_path.exists()
    assert pathlib.Path(config.cfg_path, "smcrc.ini").exists()
    assert pathlib.Path(config.cfg_path, "experiments", "lgss-outliers.yaml").exists()

    assert config.getint("experiment", "jobs") == 1
    assert config.getint("bias-demo", "replicates") == 1000000


def test_user_settings_survive(monkeypatch, tmp_path):
    monkeypatch.setitem(os.environ, "XDG_CONFIG_HOME", str(tmp_path))
    monkeypatch.setitem(os.environ, "XDG_DATA_HOME", str(tmp_path))

    Configuration().initialize()
    ini = pathlib.Path(tmp_path, "smcrc", "smcrc.ini")
    ini.write_text("[experiment]\njobs = 6\n")

    config = Configuration()
    config.initialize()
    assert config.getint("experiment", "jobs") == 6
    assert config.getint("experiment", "budget_factor") == 1000


def test_outlier_experiment_grid(monkeypatch, tmp_path):
    monkeypatch.setitem(os.environ, "XDG_CONFIG_HOME", str(tmp_path))
    monkeypatch.setitem(os.environ, "XDG_DATA_HOME", str(tmp_path))
    config = Configuration()
    config.initialize()

    experiment = load_config(pathlib.Path(config.cfg_path, "experiments", "lgss-outliers.yaml"))
    assert experiment.data.simulate_seed == 6
    thresholds = [row.threshold for row in experiment.rows() if row.filter == "pfrc"]
    assert thresholds == [f"constant:1e-{k}" for k in range(14, 7, -1)]
    assert [row.particles for row in experiment.rows() if row.filter == "bpf"] == [1024, 1200]
