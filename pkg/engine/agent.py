"""Gierige Policy: zur Nachbarzelle mit dem kleinsten Abstand zu Ungesehenem drehen und gehen."""

from typing import Optional

from errors import BlockedStepError
from models import (
    NEIGHBOR_ORDER,
    UNREACHED,
    AgentState,
    CellState,
    DistanceField,
    GridMap,
    Heading,
)


def choose_step(grid: GridMap, field: DistanceField, state: AgentState) -> Optional[Heading]:
    """Argmin über begehbare Nachbarn; None bedeutet NoMove.

    Ungesehene Nachbarn zählen als 0, UNREACHED als unendlich.
    Gleichstand: feste Reihenfolge oben, rechts, unten, links.
    """
    beste: Optional[Heading] = None
    bester_wert: Optional[int] = None
    erster_begehbarer: Optional[Heading] = None

    for heading in NEIGHBOR_ORDER:
        n = state.pos.step(heading)
        if not grid.in_bounds(n):
            continue
        zustand = grid.cells[n.y, n.x]
        if zustand == CellState.UNTRAVERSABLE:
            continue
        if erster_begehbarer is None:
            erster_begehbarer = heading

        wert = 0 if zustand == CellState.UNSEEN else field.value(n)
        if wert == UNREACHED:
            continue
        if bester_wert is None or wert < bester_wert:
            beste, bester_wert = heading, wert

    if beste is not None:
        return beste

    # Alle begehbaren Nachbarn UNREACHED
    if erster_begehbarer is None:
        return None
    if field.complete or field.value(state.pos) == UNREACHED:
        return None
    return erster_begehbarer


def apply_step(grid: GridMap, state: AgentState, direction: Heading) -> AgentState:
    """Ein Schritt in `direction`; Drehen ist kostenlos."""
    ziel = state.pos.step(direction)
    if not grid.is_traversable(ziel):
        raise BlockedStepError(f"Schritt {direction.name} von {state.pos} nach {ziel} blockiert")
    return AgentState(pos=ziel, heading=direction, steps_taken=state.steps_taken + 1)
