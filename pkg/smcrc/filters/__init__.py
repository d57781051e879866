#  Copyright (c) 2026 smcrc developers. See LICENSE

from .result import SweepResult, AcceptDecision
from .acceptance import accept_step, step_factor_pfrc
from .bpf import run_bpf
from .rejectioncontrol import run_pfrc, run_alive, default_budget
