#  Copyright (c) 2026 smcrc developers. See LICENSE

from .config import ExperimentConfig, ModelSpec, DataSource, PilotSpec, RowSpec, load_config, config_from_dict
from .statistics import SummaryRow, ess_across_runs, ess_from_log, rho, var_log_z, mean_and_se, summarize
from .replicate import ReplicateRecord, SweepJob, run_filter, run_replicates, replicate_experiment
from .csvio import emit_csv, parse_csv
from .biasdemo import run_bias_demo, format_bias_demo
