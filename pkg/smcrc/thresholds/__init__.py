#  Copyright (c) 2026 smcrc developers. See LICENSE

from .schedule import (
    ThresholdSchedule, Constant, PerStep, DynamicQuantile, DynamicWeightedMMA,
    ACCEPT_ALL, AcceptAll, LogThreshold, threshold_for_step, threshold_from_log, log_threshold,
    parse_threshold_spec)
from .pilot import pilot_record, run_pilot
from .schedulefile import save_schedule, load_schedule, write_schedule, read_schedule
