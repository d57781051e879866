"""Threshold schedules: fixed constants, per-step values, and the dynamic rules that derive c_t
from the first-pass candidate weights of the current sweep.

Dynamic rules break unbiasedness of the marginal likelihood estimator; record their realized
values with a pilot run and reuse them as a PerStep schedule."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import math
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union, Optional

import numpy as np

from ..core.errors import (
    InvalidThreshold, MissingFirstPass, FirstPassLengthMismatch, ScheduleLengthMismatch)


class AcceptAll(Enum):
    """Sentinel for steps where every candidate is accepted with its weight unchanged"""
    token = "accept-all"

    def __repr__(self):
        return "ACCEPT_ALL"


ACCEPT_ALL = AcceptAll.token

@dataclass(frozen=True)
class LogThreshold:
    """A threshold below the smallest normal double, kept as log c"""
    log_c: float

    def __post_init__(self):
        if not math.isfinite(self.log_c):
            raise InvalidThreshold(f"log c must be finite, got {self.log_c}")
        object.__setattr__(self, "log_c", float(self.log_c))

    @property
    def value(self) -> str:
        return f"log:{self.log_c:.16e}"


Threshold = Union[float, AcceptAll, LogThreshold]

_log_smallest_normal = math.log(sys.float_info.min)


def threshold_from_log(log_c: float) -> Threshold:
    """exp(log c), or a LogThreshold when that would lose precision or underflow"""
    if log_c < _log_smallest_normal:
        return LogThreshold(log_c)
    return math.exp(log_c)


def log_threshold(c: Threshold) -> Optional[float]:
    """log c, None for ACCEPT_ALL"""
    if c is ACCEPT_ALL:
        return None
    if isinstance(c, LogThreshold):
        return c.log_c
    return math.log(c)


def parse_threshold_value(text: str) -> Threshold:
    """A single value: a real, `accept-all` or `log:<log c>`"""
    text = text.strip()
    if text == ACCEPT_ALL.value:
        return ACCEPT_ALL
    if text.startswith("log:"):
        return LogThreshold(float(text[len("log:"):]))
    return float(text)


def format_threshold(c: Threshold) -> str:
    return c.value if isinstance(c, (AcceptAll, LogThreshold)) else f"{c:.16e}"


def _check_threshold(c, what="Threshold"):
    if c is ACCEPT_ALL or isinstance(c, LogThreshold):
        return c
    c = float(c)
    if not math.isfinite(c) or c <= 0:
        raise InvalidThreshold(f"{what} must be positive and finite, got {c}")
    return c


class ThresholdSchedule:
    is_dynamic = False

    @property
    def unbiased(self) -> bool:
        return not self.is_dynamic

    def threshold_for_step(self, t: int, first_pass_weights=None) -> Threshold:
        raise NotImplementedError

    def log_threshold_for_step(self, t: int, first_pass_log_weights: np.ndarray = None) \
            -> Tuple[Threshold, Optional[float]]:
        """(c_t, log c_t) with log c_t None for ACCEPT_ALL. Filters call this one since
        their weights live in the log domain"""
        c = self.threshold_for_step(t)
        return c, log_threshold(c)

    def label(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Constant(ThresholdSchedule):
    c: float

    def __post_init__(self):
        object.__setattr__(self, "c", _check_threshold(self.c))

    def threshold_for_step(self, t, first_pass_weights=None):
        return self.c

    def label(self):
        return format(self.c, ".17g")


@dataclass(frozen=True)
class PerStep(ThresholdSchedule):
    values: Tuple[Threshold, ...]

    def __post_init__(self):
        values = tuple(_check_threshold(v, "Per-step threshold") for v in self.values)
        if not values:
            raise ScheduleLengthMismatch("A per-step schedule needs at least one value")
        object.__setattr__(self, "values", values)

    def threshold_for_step(self, t, first_pass_weights=None):
        if not 1 <= t <= len(self.values):
            raise ScheduleLengthMismatch(
                f"Schedule has {len(self.values)} steps, step {t} requested")
        return self.values[t - 1]

    def label(self):
        return "per-step"


class _Dynamic(ThresholdSchedule):
    is_dynamic = True

    def rule(self, w: np.ndarray) -> float:
        raise NotImplementedError

    @staticmethod
    def _checked_first_pass(weights, n_lanes):
        if weights is None:
            raise MissingFirstPass("Dynamic thresholds need the first-pass candidate weights")
        w = np.asarray(weights, dtype=float).ravel()
        if n_lanes is not None and w.size != n_lanes:
            raise FirstPassLengthMismatch(f"Expected {n_lanes} first-pass weights, got {w.size}")
        if w.size == 0:
            raise FirstPassLengthMismatch("Empty first pass")
        return w

    def threshold_for_step(self, t, first_pass_weights=None, n_lanes: int = None):
        w = self._checked_first_pass(first_pass_weights, n_lanes)
        c = float(self.rule(w))
        return ACCEPT_ALL if c <= 0 else c

    def log_threshold_for_step(self, t, first_pass_log_weights=None, n_lanes: int = None):
        lw = self._checked_first_pass(first_pass_log_weights, n_lanes)
        m = lw.max()
        if m == -np.inf:
            return ACCEPT_ALL, None
        # rules are positively homogeneous, so they can run on weights scaled by max
        scaled = float(self.rule(np.exp(lw - m)))
        if scaled <= 0:
            return ACCEPT_ALL, None
        log_c = math.log(scaled) + m
        return threshold_from_log(log_c), log_c


@dataclass(frozen=True)
class DynamicQuantile(_Dynamic):
    q: float

    def __post_init__(self):
        if not 0 < self.q < 1:
            raise InvalidThreshold(f"Quantile must lie in (0, 1), got {self.q}")
        object.__setattr__(self, "q", float(self.q))

    # linear interpolation between order statistics: the median of two values is their mean
    def rule(self, w):
        return np.quantile(w, self.q)

    def label(self):
        return f"quantile={self.q:.17g}"


@dataclass(frozen=True)
class DynamicWeightedMMA(_Dynamic):
    """c_t = p1 min w' + p2 mean w' + p3 max w'"""
    p1: float
    p2: float
    p3: float

    def __post_init__(self):
        p = [float(self.p1), float(self.p2), float(self.p3)]
        if any(v < 0 or not math.isfinite(v) for v in p) or abs(sum(p) - 1.0) > 1e-12:
            raise InvalidThreshold(f"Weights p1, p2, p3 must be non-negative and sum to 1, got {p}")
        for k, v in zip(("p1", "p2", "p3"), p):
            object.__setattr__(self, k, v)

    def rule(self, w):
        return self.p1 * w.min() + self.p2 * w.mean() + self.p3 * w.max()

    def label(self):
        return f"weighted={self.p1:.17g},{self.p2:.17g},{self.p3:.17g}"


def threshold_for_step(schedule: ThresholdSchedule, t: int, first_pass_weights=None,
                       n_lanes: int = None) -> Threshold:
    if schedule.is_dynamic:
        return schedule.threshold_for_step(t, first_pass_weights, n_lanes=n_lanes)
    return schedule.threshold_for_step(t, first_pass_weights)


def parse_threshold_spec(spec: str) -> ThresholdSchedule:
    """Short command line form: constant:1e-8, quantile:0.5, weighted:0.2,0.3,0.5,
    per-step:0.1,0.2,accept-all,log:-800"""
    kind, _, arg = spec.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "constant":
            return Constant(float(arg))
        if kind == "quantile":
            return DynamicQuantile(float(arg))
        if kind == "weighted":
            p = [float(v) for v in arg.split(",")]
            if len(p) != 3:
                raise InvalidThreshold(f"weighted needs three values, got {arg!r}")
            return DynamicWeightedMMA(*p)
        if kind == "per-step":
            return PerStep(tuple(parse_threshold_value(v) for v in arg.split(",")))
    except ValueError as e:
        if isinstance(e, InvalidThreshold):
            raise
        raise InvalidThreshold(f"Cannot parse threshold spec {spec!r}: {e}")
    raise InvalidThreshold(f"Unknown threshold kind {kind!r} in {spec!r}")
