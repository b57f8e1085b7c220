"""CSV-Ausgabe für Episoden und Zusammenfassung (LF-Zeilenenden, feste Formatierung)."""

import csv
from pathlib import Path
from typing import TextIO

from models import BenchSummary, EpisodeRecord

RECORD_HEADER = [
    "map_id", "episode", "seed", "start_x", "start_y",
    "steps", "completed", "unreachable_unseen",
]
SUMMARY_HEADER = [
    "map_id", "episodes", "mean_steps", "sd_steps",
    "min_steps", "median_steps", "max_steps", "completion_rate",
]


def _record_row(r: EpisodeRecord) -> list:
    return [
        r.map_id, r.episode, r.seed, r.start.x, r.start.y,
        r.total_steps, int(r.completed), r.unreachable_unseen,
    ]


def _write(ziel: Path | TextIO, header: list[str], rows: list[list]):
    if isinstance(ziel, (str, Path)):
        with open(ziel, "w", encoding="utf-8", newline="") as f:
            _write(f, header, rows)
        return
    writer = csv.writer(ziel, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def write_records_csv(records: list[EpisodeRecord], ziel: Path | TextIO):
    _write(ziel, RECORD_HEADER, [_record_row(r) for r in records])


def write_summary_csv(summary: BenchSummary, ziel: Path | TextIO):
    rows = [
        [
            s.map_id, s.episodes, f"{s.mean_steps:.4f}", f"{s.sd_steps:.4f}",
            s.min_steps, s.median_steps, s.max_steps, f"{s.completion_rate:.4f}",
        ]
        for s in summary.maps
    ]
    _write(ziel, SUMMARY_HEADER, rows)


def write_trace_csv(trace: list[tuple[int, float]], ziel: Path | TextIO):
    _write(ziel, ["tick", "unseen_percent"], [[t, f"{p:.4f}"] for t, p in trace])
