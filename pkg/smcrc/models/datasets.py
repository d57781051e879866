"""Simulated datasets as CSV: `t,y` for real observations, `t,y_symbol` for discrete ones.
States can go to a sibling `<name>.states.csv` for debugging."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import csv
import pathlib
from typing import Tuple

import numpy as np

from ..core.errors import ConfigError
from ..core.model import Trajectory

import logging
logger = logging.getLogger(__name__)


value_column = {"real": "y", "symbol": "y_symbol"}


def states_path(path: pathlib.Path) -> pathlib.Path:
    path = pathlib.Path(path)
    return path.with_name(path.stem + ".states.csv")


def _fmt(v, kind):
    return str(int(v)) if kind == "symbol" else format(float(v), ".17g")


def write_dataset(path: pathlib.Path, data: Trajectory, kind: str = "real", with_states=False):
    path = pathlib.Path(path)
    with path.open("w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["t", value_column[kind]])
        for t, y in enumerate(data.observations, start=1):
            w.writerow([t, _fmt(y, kind)])

    if with_states:
        with states_path(path).open("w", newline="") as f:
            w = csv.writer(f, lineterminator="\n")
            header = ["t", "x"] + (["outlier"] if data.flags is not None else [])
            w.writerow(header)
            for t, x in enumerate(data.states):
                row = [t, _fmt(x, kind)]
                if data.flags is not None:
                    row += ["" if t == 0 else int(data.flags[t - 1])]
                w.writerow(row)

    logger.info(f"Wrote {len(data.observations)} observations to {path}")


def read_dataset(path: pathlib.Path) -> Tuple[np.ndarray, str]:
    """(observations, kind)"""
    path = pathlib.Path(path)
    with path.open("r", newline="") as f:
        rows = list(csv.reader(f))
    if not rows or rows[0][:1] != ["t"] or len(rows[0]) != 2 or rows[0][1] not in value_column.values():
        raise ConfigError(f"{path}: expected header 't,y' or 't,y_symbol'")

    kind = "symbol" if rows[0][1] == "y_symbol" else "real"
    values = []
    for n, row in enumerate(rows[1:], start=1):
        try:
            if int(row[0]) != n:
                raise ValueError(f"expected t={n}")
            values.append(int(row[1]) if kind == "symbol" else float(row[1]))
        except (ValueError, IndexError) as e:
            raise ConfigError(f"{path}: bad row {n + 1}: {e}")
    if not values:
        raise ConfigError(f"{path}: no observations")

    return np.array(values, dtype=int if kind == "symbol" else float), kind
