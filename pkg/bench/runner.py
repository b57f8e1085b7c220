"""Monte-Carlo-Protokoll: N Episoden mit Zufallsstart pro Szenario."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from typing import TYPE_CHECKING, Optional

from tqdm import tqdm

from bench.summary import summarize
from engine.grid_map import load_map
from engine.sim import random_start, run_episode
from models import BenchConfig, BenchSummary, EpisodeRecord, GridMap, Heading, SimConfig
from utils.logger import setup_logger
from utils.rng import SplitMix64, derive_seed

if TYPE_CHECKING:
    from database import Database

logger = setup_logger("ripplefront.bench")

# (karte, map_id, episodenindex, basis-seed, sim-vorlage, startausrichtung)
_Task = tuple[GridMap, str, int, int, SimConfig, Heading]


def run_single(
    grid: GridMap, map_id: str, index: int, base_seed: int, sim: SimConfig, heading: Heading
) -> EpisodeRecord:
    """Eine in sich geschlossene Episode: Seed ableiten, Start ziehen, simulieren."""
    seed = derive_seed(base_seed, index)
    start = random_start(grid, SplitMix64(seed))
    return run_episode(grid, start, heading, replace(sim, seed=seed), map_id=map_id, episode=index)


def _run_task(task: _Task) -> EpisodeRecord:
    return run_single(*task)


def run_bench(
    config: BenchConfig,
    archiv: Optional["Database"] = None,
    fortschritt: bool = False,
) -> tuple[list[EpisodeRecord], BenchSummary]:
    """Führt alle Episoden aus; Ergebnisreihenfolge ist immer (Karte, Episodenindex)."""
    tasks: list[_Task] = []
    for pfad in config.maps:
        grid, _ = load_map(pfad)
        map_id = pfad.stem
        logger.info(
            f"Bench: {map_id} ({grid.width}x{grid.height}, {grid.traversable_count()} begehbar), "
            f"{config.episodes} Episoden"
        )
        for index in range(config.episodes):
            tasks.append((grid, map_id, index, config.base_seed, config.sim, config.initial_heading))

    balken = tqdm(total=len(tasks), desc="Episoden", unit="ep", disable=not fortschritt)
    records: list[EpisodeRecord] = []
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            # map() liefert in Eingabereihenfolge, unabhängig von der Fertigstellung
            for record in pool.map(_run_task, tasks, chunksize=8):
                records.append(record)
                balken.update(1)
    else:
        for task in tasks:
            records.append(_run_task(task))
            balken.update(1)
    balken.close()

    summary = summarize(records)
    for s in summary.maps:
        logger.info(
            f"{s.map_id}: Schritte Ø {s.mean_steps:.1f} (sd {s.sd_steps:.1f}, "
            f"min {s.min_steps}, median {s.median_steps}, max {s.max_steps}), "
            f"Abschlussquote {s.completion_rate:.3f}"
        )

    if archiv is not None:
        lauf_id = archiv.lauf_speichern(config, records, summary)
        for map_id, werte in archiv.statistik(lauf_id).items():
            logger.info(
                f"Lauf #{lauf_id} {map_id}: Rechenzeit Ø {werte['mean_laufzeit_ms']:.2f} ms/Episode"
            )

    return records, summary
