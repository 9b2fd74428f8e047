"""
RunStats persistence as CSV rows for bound-saturation analysis
"""

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, TextIO, Union

from oddprod.core.colouring.base import RunStats

STATS_HEADER = (
    "variant",
    "t",
    "h",
    "ell",
    "delta",
    "n",
    "m",
    "seed",
    "palette",
    "colours_used",
    "max_X",
    "max_Y",
    "max_XY",
    "millis",
)


@dataclass
class RunMetadata:
    """Everything in a stats row that RunStats does not know"""

    variant: str
    t: int
    h: int
    ell: int
    delta: int
    n: int
    m: int
    seed: int
    palette: int
    millis: float


def stats_row(stats: RunStats, meta: RunMetadata) -> List[str]:
    """The 14 CSV fields, in header order"""
    return [
        meta.variant,
        str(meta.t),
        str(meta.h),
        str(meta.ell),
        str(meta.delta),
        str(meta.n),
        str(meta.m),
        str(meta.seed),
        str(meta.palette),
        str(stats.colours_used),
        str(stats.max_x),
        str(stats.max_y),
        str(stats.max_xy),
        f"{meta.millis:.3f}",
    ]


def append_stats_csv(
    target: Union[str, Path, TextIO], stats: RunStats, meta: RunMetadata
) -> List[str]:
    """
    Append one row, writing the header first when the file is new or empty.

    Appends are not locked; concurrent writers must be serialized by the caller.
    """
    row = stats_row(stats, meta)
    if isinstance(target, (str, Path)):
        path = Path(target)
        path.parent.mkdir(parents=True, exist_ok=True)
        needs_header = not path.exists() or path.stat().st_size == 0
        with open(path, "a", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            if needs_header:
                writer.writerow(STATS_HEADER)
            writer.writerow(row)
    else:
        writer = csv.writer(target, lineterminator="\n")
        if target.tell() == 0:
            writer.writerow(STATS_HEADER)
        writer.writerow(row)
    return row


def append_stats_rows(path: Union[str, Path], rows: Iterable[List[str]]) -> int:
    """Append pre-built rows to a stats file, header first when it is new or empty"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    needs_header = not path.exists() or path.stat().st_size == 0
    written = 0
    with open(path, "a", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        if needs_header:
            writer.writerow(STATS_HEADER)
        for row in rows:
            writer.writerow(row)
            written += 1
    return written
