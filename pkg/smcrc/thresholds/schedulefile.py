"""Line oriented text form of a threshold schedule.

    # comments and blank lines are ignored
    schedule: per-step
    1<TAB>6.5000000000000002e-01
    2<TAB>accept-all
    3<TAB>log:-8.0000000000000000e+02

Parameterized variants carry `key: value` lines instead of steps:

    schedule: constant        c_t: <value>
    schedule: quantile        q: <value>
    schedule: weighted-mma    p1: <value>  p2: <value>  p3: <value>

Reals are written with 17 significant digits so a save/load round trip is exact. Thresholds below
the smallest normal double are written as their logarithm."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import math
import pathlib

from ..core.errors import ScheduleFormatError, InvalidThreshold
from .schedule import (
    ThresholdSchedule, Constant, PerStep, DynamicQuantile, DynamicWeightedMMA,
    format_threshold, parse_threshold_value)


variant_names = {
    Constant: "constant",
    PerStep: "per-step",
    DynamicQuantile: "quantile",
    DynamicWeightedMMA: "weighted-mma",
}

variant_keys = {
    "constant": ("c_t",),
    "quantile": ("q",),
    "weighted-mma": ("p1", "p2", "p3"),
    "per-step": (),
}


def _real(v: float) -> str:
    return f"{v:.16e}"


def save_schedule(schedule: ThresholdSchedule) -> str:
    variant = variant_names[type(schedule)]
    lines = [f"schedule: {variant}"]
    if isinstance(schedule, Constant):
        lines += [f"c_t: {_real(schedule.c)}"]
    elif isinstance(schedule, DynamicQuantile):
        lines += [f"q: {_real(schedule.q)}"]
    elif isinstance(schedule, DynamicWeightedMMA):
        lines += [f"p1: {_real(schedule.p1)}", f"p2: {_real(schedule.p2)}", f"p3: {_real(schedule.p3)}"]
    else:
        lines += [
            f"{t}\t{format_threshold(v)}"
            for t, v in enumerate(schedule.values, start=1)
        ]
    return "\n".join(lines) + "\n"


def _parse_value(text: str, lineno: int, step=False, threshold=True):
    text = text.strip()
    try:
        v = parse_threshold_value(text) if step else float(text)
    except InvalidThreshold as e:
        raise InvalidThreshold(e.message, lineno=lineno)
    except ValueError:
        raise ScheduleFormatError(f"Not a number: {text!r}", lineno)
    if isinstance(v, float) and threshold and (not math.isfinite(v) or v <= 0):
        raise InvalidThreshold(f"Threshold must be positive and finite, got {text}", lineno=lineno)
    return v


def load_schedule(text: str) -> ThresholdSchedule:
    variant, params, steps = None, {}, []
    variant_line = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        if "\t" in raw or (line[0].isdigit() and ":" not in line):
            parts = line.split()
            if len(parts) != 2:
                raise ScheduleFormatError(f"Expected 't<TAB>value', got {line!r}", lineno)
            try:
                t = int(parts[0])
            except ValueError:
                raise ScheduleFormatError(f"Bad step index {parts[0]!r}", lineno)
            if t != len(steps) + 1:
                raise ScheduleFormatError(f"Expected step {len(steps) + 1}, got {t}", lineno)
            steps.append(_parse_value(parts[1], lineno, step=True))
            continue

        key, sep, value = line.partition(":")
        if not sep:
            raise ScheduleFormatError(f"Expected 'key: value', got {line!r}", lineno)
        key = key.strip()
        if key == "schedule":
            if variant is not None:
                raise ScheduleFormatError("Duplicate schedule line", lineno)
            variant = value.strip()
            variant_line = lineno
            if variant not in variant_keys:
                raise ScheduleFormatError(f"Unknown schedule variant {variant!r}", lineno)
        elif key in ("c_t", "q", "p1", "p2", "p3"):
            params[key] = (_parse_value(value, lineno, threshold=(key == "c_t")), lineno)
        else:
            raise ScheduleFormatError(f"Unknown key {key!r}", lineno)

    if variant is None:
        raise ScheduleFormatError("Missing 'schedule:' line", 1)

    expected = variant_keys[variant]
    missing = [k for k in expected if k not in params]
    extra = [k for k in params if k not in expected]
    if missing or extra or (steps and variant != "per-step"):
        raise ScheduleFormatError(
            f"Variant {variant} takes {list(expected) or 'step lines'}; "
            f"missing {missing}, unexpected {extra}", variant_line)

    try:
        if variant == "constant":
            return Constant(params["c_t"][0])
        if variant == "quantile":
            return DynamicQuantile(params["q"][0])
        if variant == "weighted-mma":
            return DynamicWeightedMMA(params["p1"][0], params["p2"][0], params["p3"][0])
    except InvalidThreshold as e:
        raise ScheduleFormatError(e.message, variant_line)

    if not steps:
        raise ScheduleFormatError("A per-step schedule needs at least one step line", variant_line)
    return PerStep(tuple(steps))


def write_schedule(schedule: ThresholdSchedule, path: pathlib.Path):
    pathlib.Path(path).write_text(save_schedule(schedule))


def read_schedule(path: pathlib.Path) -> ThresholdSchedule:
    return load_schedule(pathlib.Path(path).read_text())
