#  Copyright (c) 2026 smcrc developers. See LICENSE

import os
import shutil
from pathlib import Path as P
import configparser

import logging
logger = logging.getLogger(__name__)


smcrc_config_dir = P("smcrc")
ini_name = "smcrc.ini"


# https://specifications.freedesktop.org/basedir-spec/basedir-spec-latest.html

xdg_config_dir = {
    "env": "XDG_CONFIG_HOME",
    "default": P(P.home(), ".config")
}

# Logs and scratch output are user data
xdg_data_home = {
    "env": "XDG_DATA_HOME",
    "default": P(P.home(), ".local", "share")
}

default_config_data_dir = P(P(__file__).parent, "000.package.data")

defaults = {
    "experiment": {"jobs": "1", "budget_factor": "1000"},
    "bias-demo": {"replicates": "1000000"},
}


class Configuration(configparser.ConfigParser):
    def __init__(self):
        super().__init__()
        self.read_dict(defaults)

        self.cfg_path = P(os.getenv(xdg_config_dir["env"], xdg_config_dir["default"]), smcrc_config_dir)
        self.log_path = P(os.getenv(xdg_data_home["env"], xdg_data_home["default"]), smcrc_config_dir, "logs")
        self.scratch_path = P(os.getenv(xdg_data_home["env"], xdg_data_home["default"]), smcrc_config_dir, "scratch")

        if not self.log_path.exists():
            self.log_path.mkdir(parents=True)

        if not self.scratch_path.exists():
            self.scratch_path.mkdir(parents=True)

    # We do this separately to give the caller a chance to set up logging
    def initialize(self):

        logger.info("Copying default configuration ...")
        self._copy_missing_files()

        logger.info("Reading settings ...")
        self.read(P(self.cfg_path, ini_name))

    # https://stackoverflow.com/questions/1611799/preserve-case-in-configparser
    def optionxform(self, optionstr):
        return optionstr

    def _copy_missing_files(self):
        for src_file in [P(default_config_data_dir, ini_name)] + \
                sorted(P(default_config_data_dir, "experiments").glob("*.yaml")):
            dst_file = P(self.cfg_path, src_file.relative_to(default_config_data_dir))
            if not dst_file.exists():
                dst_file.parent.mkdir(parents=True, exist_ok=True)
                shutil.copy(src_file, dst_file)
