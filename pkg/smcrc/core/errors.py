"""Errors raised by the library. Every error carries a machine readable code which the
command line driver turns into an exit status."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

from enum import IntEnum


# Exit codes stay below 126 so shells do not confuse them with signals
class ErrCode(IntEnum):
    InternalError = 1
    ConfigError = 2

    InvalidWeight = 10
    AllWeightsZero = 11
    MissingObservationSampler = 12
    InvalidModel = 13

    ParticleCollapse = 20
    PropagationBudgetExceeded = 21
    InvalidThreshold = 22
    InvalidCount = 23

    MissingFirstPass = 30
    FirstPassLengthMismatch = 31
    ScheduleLengthMismatch = 32
    ScheduleFormatError = 33

    NonPositiveVariance = 40
    ConvergenceFailure = 41

    AllZeroEstimates = 50
    InsufficientData = 51


class SmcError(Exception):
    code = ErrCode.InternalError

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def error_line(self):
        msg = self.message.replace('"', "'")
        return f'error code={self.code.name} exit={int(self.code)} message="{msg}"'


class InvalidWeight(SmcError, ValueError):
    code = ErrCode.InvalidWeight


class AllWeightsZero(SmcError, ValueError):
    code = ErrCode.AllWeightsZero


class MissingObservationSampler(SmcError):
    code = ErrCode.MissingObservationSampler


class InvalidModel(SmcError, ValueError):
    code = ErrCode.InvalidModel


class ParticleCollapse(SmcError):
    """All weights vanished at some step. `result` holds the truncated sweep with
    log_z_hat = -inf"""
    code = ErrCode.ParticleCollapse

    def __init__(self, message: str, t: int, result=None):
        super().__init__(message)
        self.t = t
        self.result = result


class PropagationBudgetExceeded(SmcError):
    code = ErrCode.PropagationBudgetExceeded

    def __init__(self, t: int, propagations: int, budget: int):
        super().__init__(
            f"Step {t} needed more than {budget} propagations ({propagations} done); "
            f"the threshold is probably unattainable")
        self.t = t
        self.propagations = propagations
        self.budget = budget


class InvalidThreshold(SmcError, ValueError):
    code = ErrCode.InvalidThreshold

    def __init__(self, message: str, lineno: int = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class InvalidCount(SmcError, ValueError):
    code = ErrCode.InvalidCount


class MissingFirstPass(SmcError, ValueError):
    code = ErrCode.MissingFirstPass


class FirstPassLengthMismatch(SmcError, ValueError):
    code = ErrCode.FirstPassLengthMismatch


class ScheduleLengthMismatch(SmcError, ValueError):
    code = ErrCode.ScheduleLengthMismatch


class ScheduleFormatError(SmcError, ValueError):
    code = ErrCode.ScheduleFormatError

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class NonPositiveVariance(SmcError, ValueError):
    code = ErrCode.NonPositiveVariance


class ConvergenceFailure(SmcError):
    code = ErrCode.ConvergenceFailure


class AllZeroEstimates(SmcError, ValueError):
    code = ErrCode.AllZeroEstimates


class InsufficientData(SmcError, ValueError):
    code = ErrCode.InsufficientData


class ConfigError(SmcError, ValueError):
    code = ErrCode.ConfigError

    def __init__(self, message: str, line: int = None, column: int = None):
        if line is not None:
            message = f"{message} (line {line + 1}, column {(column or 0) + 1})"
        super().__init__(message)
        self.line = line
        self.column = column
