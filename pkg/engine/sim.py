"""Tick-Orchestrierung und Episoden-Lebenszyklus.

Reihenfolge pro Tick: Feld propagieren -> entscheiden -> gehen -> sehen -> Abbruch prüfen.
Abbruch gilt über die von der Startzelle erreichbare Menge, nicht über alle
begehbaren Zellen (abgetrennte Taschen wären sonst nie zu schaffen).
"""

import time
from collections.abc import Callable
from typing import Optional

import numpy as np

from engine.agent import apply_step, choose_step
from engine.grid_map import coverage_stats, reachable_mask
from engine.ripple_field import new_field, propagate
from engine.visibility import apply_vision
from errors import StartUntraversableError
from models import (
    AgentState,
    CellState,
    Coord,
    DistanceField,
    EpisodeRecord,
    EpisodeStatus,
    GridMap,
    Heading,
    SimConfig,
    TickOutcome,
)
from utils.logger import setup_logger
from utils.rng import SplitMix64

logger = setup_logger("ripplefront.sim")

# on_tick(tick, karte, zustand, feld); feld ist bei Tick 0 None
TickHook = Callable[[int, GridMap, AgentState, Optional[DistanceField]], None]


def _unseen_in(grid: GridMap, reachable: np.ndarray) -> int:
    return int(np.count_nonzero(reachable & (grid.cells == CellState.UNSEEN)))


def tick(
    grid: GridMap,
    field: DistanceField,
    state: AgentState,
    config: SimConfig,
    reachable: Optional[np.ndarray] = None,
) -> tuple[DistanceField, AgentState, TickOutcome]:
    """Ein Simulationsschritt. Mutiert `grid` (Sicht), gibt neues Feld und neuen Zustand zurück."""
    if reachable is None:
        reachable = reachable_mask(grid, state.pos)

    field = propagate(grid, field, config.field_mode)
    richtung = choose_step(grid, field, state)

    if richtung is not None:
        state = apply_step(grid, state, richtung)
    # Ohne Zug nur Sicht auffrischen
    apply_vision(grid, state.pos, state.heading, config.cone)

    if _unseen_in(grid, reachable) == 0:
        return field, state, TickOutcome.DONE
    if richtung is None:
        return field, state, TickOutcome.STUCK
    return field, state, TickOutcome.CONTINUE


def run_episode(
    grid: GridMap,
    start: Coord,
    initial_heading: Heading,
    config: SimConfig,
    map_id: str = "",
    episode: int = 0,
    on_tick: Optional[TickHook] = None,
) -> EpisodeRecord:
    """Spielt eine Episode auf einer privaten Kopie der Karte durch."""
    if not grid.is_traversable(start):
        raise StartUntraversableError(f"Startzelle {start} ist nicht begehbar")

    t0 = time.perf_counter()
    grid = grid.copy()
    reachable = reachable_mask(grid, start)
    n_reachable = int(np.count_nonzero(reachable))

    unerreichbar = grid.traversable_count() - n_reachable
    if unerreichbar > 0:
        logger.warning(
            f"{map_id or 'Karte'}: {unerreichbar} begehbare Zellen von {start} "
            f"nicht erreichbar - vom Abbruchkriterium ausgenommen"
        )

    max_ticks = config.max_ticks or config.max_ticks_factor * n_reachable
    max_ticks = max(1, max_ticks)

    state = AgentState(pos=start, heading=initial_heading)
    grid.cells[start.y, start.x] = CellState.SEEN
    apply_vision(grid, start, initial_heading, config.cone)
    field = new_field(grid)

    trace: Optional[list[tuple[int, float]]] = [] if config.trace else None
    stats = coverage_stats(grid, reachable)
    if trace is not None:
        trace.append((0, stats.unseen_percent))
    if on_tick:
        on_tick(0, grid, state, None)

    status: Optional[EpisodeStatus] = EpisodeStatus.DONE if stats.unseen == 0 else None
    ticks = 0
    while status is None:
        if ticks >= max_ticks:
            status = EpisodeStatus.LIMIT
            logger.warning(f"{map_id}: max_ticks={max_ticks} erreicht, Episode abgebrochen")
            break

        field, state, outcome = tick(grid, field, state, config, reachable)
        ticks += 1
        stats = coverage_stats(grid, reachable)
        if trace is not None:
            trace.append((ticks, stats.unseen_percent))
        if on_tick:
            on_tick(ticks, grid, state, field)

        if outcome is TickOutcome.DONE:
            status = EpisodeStatus.DONE
        elif outcome is TickOutcome.STUCK:
            status = EpisodeStatus.STUCK
            logger.warning(
                f"{map_id}: Agent steckt bei {state.pos} fest, "
                f"{stats.unseen} erreichbare Zellen ungesehen (Modus {config.field_mode})"
            )

    unreachable_unseen = int(np.count_nonzero(~reachable & (grid.cells == CellState.UNSEEN)))
    laufzeit_ms = (time.perf_counter() - t0) * 1000.0

    record = EpisodeRecord(
        map_id=map_id,
        start=start,
        seed=config.seed,
        total_steps=state.steps_taken,
        completed=status is EpisodeStatus.DONE,
        unreachable_unseen=unreachable_unseen,
        trace=trace,
        episode=episode,
        ticks=ticks,
        status=status,
        unseen_percent_final=stats.unseen_percent,
        laufzeit_ms=laufzeit_ms,
    )
    logger.debug(
        f"Episode beendet: {map_id} #{episode} Start {tuple(start)} -> "
        f"{record.total_steps} Schritte, {ticks} Ticks, {status.value} ({laufzeit_ms:.1f} ms)"
    )
    return record


def random_start(grid: GridMap, rng: SplitMix64) -> Coord:
    """Gleichverteilt über alle begehbaren Zellen."""
    zellen = grid.traversable_cells()
    return zellen[rng.randbelow(len(zellen))]
