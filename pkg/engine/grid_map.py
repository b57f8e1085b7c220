"""Karten-Ingestion, Drei-Zustands-Modell, Nachbarschaft und Erreichbarkeit."""

from collections import deque
from collections.abc import Iterable
from pathlib import Path
from typing import Optional

import numpy as np

from errors import (
    EmptyMapError,
    IllegalCharError,
    MapLoadError,
    MapParseError,
    MultipleStartsError,
    OutOfBoundsError,
    RaggedRowsError,
    StartUntraversableError,
)
from models import NEIGHBOR_ORDER, CellState, Coord, CoverageStats, GridMap
from utils.logger import setup_logger

logger = setup_logger("ripplefront.grid_map")

_ZEICHEN = {
    "#": CellState.UNTRAVERSABLE,
    ".": CellState.UNSEEN,
    "S": CellState.UNSEEN,
}


def parse_map(text: str) -> tuple[GridMap, Optional[Coord]]:
    """Parst ein ASCII-Kartendokument (`#` Wand, `.` begehbar, `S` Start).

    LF und CRLF werden akzeptiert, leere Zeilen am Ende ignoriert.
    Alle begehbaren Zellen starten als UNSEEN.
    """
    zeilen = text.replace("\r\n", "\n").split("\n")
    while zeilen and not zeilen[-1].strip():
        zeilen.pop()
    if not zeilen:
        raise EmptyMapError("Kartendokument ist leer")

    breite = len(zeilen[0])
    if breite == 0:
        raise RaggedRowsError("Erste Kartenzeile ist leer", zeile=1)

    cells = np.empty((len(zeilen), breite), dtype=np.int8)
    start: Optional[Coord] = None

    for y, zeile in enumerate(zeilen):
        if len(zeile) != breite:
            raise RaggedRowsError(
                f"Zeilenlänge {len(zeile)} statt {breite}", zeile=y + 1
            )
        for x, zeichen in enumerate(zeile):
            zustand = _ZEICHEN.get(zeichen)
            if zustand is None:
                raise IllegalCharError(f"Unzulässiges Zeichen {zeichen!r}", zeile=y + 1, spalte=x + 1)
            if zeichen == "S":
                if start is not None:
                    raise MultipleStartsError("Mehr als ein Start 'S'", zeile=y + 1, spalte=x + 1)
                start = Coord(x, y)
            cells[y, x] = zustand

    return GridMap(width=breite, height=len(zeilen), cells=cells), start


def serialize_map(grid: GridMap, start: Optional[Coord] = None) -> str:
    """Inverser Emitter zu parse_map (kanonisch: LF, ein abschließender Zeilenumbruch)."""
    zeilen = []
    for y in range(grid.height):
        zeichen = []
        for x in range(grid.width):
            if start is not None and (x, y) == start:
                zeichen.append("S")
            elif grid.cells[y, x] == CellState.UNTRAVERSABLE:
                zeichen.append("#")
            else:
                zeichen.append(".")
        zeilen.append("".join(zeichen))
    return "\n".join(zeilen) + "\n"


def load_map(pfad: str | Path) -> tuple[GridMap, Optional[Coord]]:
    """Liest eine .map-Datei; I/O- und Parse-Fehler werden zu MapLoadError."""
    pfad = Path(pfad)
    try:
        text = pfad.read_text(encoding="utf-8")
        grid, start = parse_map(text)
    except (OSError, UnicodeDecodeError, MapParseError) as e:
        raise MapLoadError(pfad, e) from e

    logger.debug(
        f"Karte geladen: {pfad.name} ({grid.width}x{grid.height}, "
        f"{grid.traversable_count()} begehbar)"
    )
    return grid, start


def neighbors(grid: GridMap, c: Coord) -> list[Coord]:
    """Von-Neumann-Nachbarn im Gitter, Reihenfolge oben, rechts, unten, links.

    Filtert nicht nach Begehbarkeit.
    """
    if not grid.in_bounds(c):
        raise OutOfBoundsError(f"{c} liegt außerhalb von {grid.width}x{grid.height}")
    result = []
    for heading in NEIGHBOR_ORDER:
        n = c.step(heading)
        if grid.in_bounds(n):
            result.append(n)
    return result


def reachable_set(grid: GridMap, start: Coord) -> set[Coord]:
    """Flood-Fill über begehbare Zellen ab `start`."""
    if not grid.is_traversable(start):
        raise StartUntraversableError(f"Startzelle {start} ist nicht begehbar")

    gesehen = {start}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for n in neighbors(grid, c):
            if n not in gesehen and grid.cells[n.y, n.x] != CellState.UNTRAVERSABLE:
                gesehen.add(n)
                queue.append(n)
    return gesehen


def reachable_mask(grid: GridMap, start: Coord) -> np.ndarray:
    """reachable_set als Bool-Maske (height, width)."""
    mask = np.zeros((grid.height, grid.width), dtype=bool)
    for c in reachable_set(grid, start):
        mask[c.y, c.x] = True
    return mask


def coverage_stats(grid: GridMap, reachable: Iterable[Coord] | np.ndarray) -> CoverageStats:
    """Zählt ungesehene Zellen innerhalb der erreichbaren Menge."""
    if isinstance(reachable, np.ndarray):
        total = int(np.count_nonzero(reachable))
        unseen = int(np.count_nonzero(reachable & grid.unseen_mask()))
    else:
        zellen = list(reachable)
        total = len(zellen)
        unseen = sum(1 for c in zellen if grid.cells[c.y, c.x] == CellState.UNSEEN)

    prozent = 100.0 * unseen / total if total else 0.0
    return CoverageStats(total_traversable=total, unseen=unseen, unseen_percent=prozent)
