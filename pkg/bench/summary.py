"""Kennzahlen der Schrittverteilung pro Karte."""

import numpy as np

from errors import EmptyInputError
from models import BenchSummary, EpisodeRecord, MapSummary


def _map_summary(map_id: str, records: list[EpisodeRecord]) -> MapSummary:
    steps = np.array([r.total_steps for r in records], dtype=np.int64)
    n = len(steps)
    sortiert = np.sort(steps)

    return MapSummary(
        map_id=map_id,
        episodes=n,
        mean_steps=float(np.mean(steps)),
        # Stichproben-Standardabweichung, für n=1 definiert als 0
        sd_steps=float(np.std(steps, ddof=1)) if n > 1 else 0.0,
        min_steps=int(sortiert[0]),
        # Bei geradem n das untere mittlere Element
        median_steps=int(sortiert[(n - 1) // 2]),
        max_steps=int(sortiert[-1]),
        completion_rate=sum(1 for r in records if r.completed) / n,
    )


def summarize(records: list[EpisodeRecord]) -> BenchSummary:
    """Gruppiert nach map_id (Reihenfolge des ersten Auftretens)."""
    if not records:
        raise EmptyInputError("Keine Episoden zum Zusammenfassen")

    gruppen: dict[str, list[EpisodeRecord]] = {}
    for record in records:
        gruppen.setdefault(record.map_id, []).append(record)

    return BenchSummary(maps=[_map_summary(m, rs) for m, rs in gruppen.items()])
