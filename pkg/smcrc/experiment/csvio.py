"""Experiment output. `<out>/summary.csv` has one line per grid row, in the column order of the
published tables; `<out>/replicates-<row>.csv` holds the replicates of row <row>. Reals are
written with 17 significant digits so they read back exactly."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import csv
import pathlib
from dataclasses import fields, astuple
from typing import List, Sequence, Tuple

from ..core.errors import InsufficientData
from .replicate import ReplicateRecord
from .statistics import SummaryRow

import logging
logger = logging.getLogger(__name__)


summary_name = "summary.csv"
summary_header = [f.name for f in fields(SummaryRow)]
replicate_header = ["replicate", "log_Z", "total_propagations", "status"]


def replicates_name(row: int) -> str:
    return f"replicates-{row}.csv"


def _fmt(v):
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _write(path: pathlib.Path, header, lines):
    with path.open("w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        for line in lines:
            w.writerow([_fmt(v) for v in line])


def emit_csv(rows: Sequence[SummaryRow], records: Sequence[Sequence[ReplicateRecord]],
             out_dir: pathlib.Path) -> List[pathlib.Path]:
    if not rows or len(rows) != len(records) or any(len(r) == 0 for r in records):
        raise InsufficientData("Nothing to write: every summary row needs at least one replicate")

    out_dir = pathlib.Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    written = [out_dir / summary_name]
    _write(written[0], summary_header, (astuple(row) for row in rows))
    for i, row_records in enumerate(records):
        path = out_dir / replicates_name(i)
        _write(path, replicate_header,
               ((r.replicate, r.log_z, r.total_propagations, r.status) for r in row_records))
        written.append(path)

    logger.info(f"Wrote {len(rows)} summary rows to {out_dir}")
    return written


def _summary_row(d: dict) -> SummaryRow:
    kwargs = {}
    for f in fields(SummaryRow):
        v = d[f.name]
        kwargs[f.name] = int(v) if f.type in (int, "int") else float(v) if f.type in (float, "float") else v
    return SummaryRow(**kwargs)


def parse_csv(out_dir: pathlib.Path) -> Tuple[List[SummaryRow], List[List[ReplicateRecord]]]:
    out_dir = pathlib.Path(out_dir)
    with (out_dir / summary_name).open(newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames != summary_header:
            raise ValueError(f"{out_dir / summary_name}: unexpected header {reader.fieldnames}")
        rows = [_summary_row(d) for d in reader]

    records = []
    for i in range(len(rows)):
        with (out_dir / replicates_name(i)).open(newline="") as f:
            reader = csv.DictReader(f)
            if reader.fieldnames != replicate_header:
                raise ValueError(f"{out_dir / replicates_name(i)}: unexpected header {reader.fieldnames}")
            records.append([
                ReplicateRecord(replicate=int(d["replicate"]), log_z=float(d["log_Z"]),
                                total_propagations=int(d["total_propagations"]), status=d["status"])
                for d in reader])

    return rows, records
