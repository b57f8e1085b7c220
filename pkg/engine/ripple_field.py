"""RippleFront-Distanzfeld: D(n) = Schritte durch begehbare Zellen zur nächsten ungesehenen Zelle.

Zwei Formen: exakter Fixpunkt (Multi-Source-BFS) und inkrementelle
Relaxations-Sweeps, die die periodische Ausführung pro Tick nachbilden.

Update-Regel der Sweeps: D(n) <- 1 + min D über begehbare Nachbarn,
ungesehene Zellen fest auf 0, Wände UNREACHED. Endliche Werte bleiben
unter width*height, größere Kandidaten werden zu UNREACHED.
"""

import numpy as np

from engine.kernels import bfs_kernel, relax_kernel
from errors import DimensionMismatchError
from models import UNREACHED, CellState, DistanceField, FieldMode, GridMap
from utils.logger import setup_logger

logger = setup_logger("ripplefront.ripple_field")


def new_field(grid: GridMap) -> DistanceField:
    """Startfeld: Quellen 0, alles andere UNREACHED."""
    values = np.where(grid.cells == CellState.UNSEEN, 0, UNREACHED).astype(np.int32)
    return DistanceField(values)


def _check_dims(grid: GridMap, field: DistanceField):
    if field.values.shape != (grid.height, grid.width):
        raise DimensionMismatchError(
            f"Feld {field.width}x{field.height} passt nicht zur Karte {grid.width}x{grid.height}"
        )


def _has_sources(grid: GridMap) -> bool:
    return bool(np.any(grid.cells == CellState.UNSEEN))


def bfs_oracle(grid: GridMap) -> DistanceField:
    """Exaktes Feld per Multi-Source-BFS ab allen ungesehenen Zellen."""
    values = np.empty((grid.height, grid.width), dtype=np.int32)
    quellen = bfs_kernel(grid.cells, values)
    return DistanceField(values, complete=quellen == 0)


def relax_sweep(grid: GridMap, field: DistanceField) -> tuple[DistanceField, bool]:
    """Ein Durchlauf in Zeilenreihenfolge, in-place auf einer Kopie des Feldes."""
    _check_dims(grid, field)
    result = field.copy()
    changed = bool(relax_kernel(grid.cells, result.values))
    result.complete = not _has_sources(grid)
    return result, changed


def _is_stale(grid: GridMap, field: DistanceField) -> bool:
    # Eine gesehene Zelle mit 0 war beim letzten Tick noch Quelle
    return bool(np.any((field.values == 0) & (grid.cells == CellState.SEEN)))


def invalidate(grid: GridMap, field: DistanceField) -> DistanceField:
    """Setzt nur die ehemaligen Quellen auf UNREACHED.

    Alle anderen Werte bleiben stehen; zu kleine Werte in der Nähe einer
    verschwundenen Quelle steigen durch die gedeckelte Relaxation wieder an.
    """
    values = field.values.copy()
    values[(values == 0) & (grid.cells == CellState.SEEN)] = UNREACHED
    values[grid.cells == CellState.UNSEEN] = 0
    return DistanceField(values, complete=field.complete)


def propagate(grid: GridMap, field: DistanceField, mode: FieldMode) -> DistanceField:
    """Ein Tick der Feldausbreitung.

    Fixpoint: Feld wird verworfen und exakt neu berechnet.
    Sweeps(k): nach Invalidierung veralteter Werte bis zu k Sweeps, Abbruch sobald stabil.
    """
    _check_dims(grid, field)
    if mode.is_fixpoint:
        return bfs_oracle(grid)

    if _is_stale(grid, field):
        field = invalidate(grid, field)

    for _ in range(mode.sweeps):
        field, changed = relax_sweep(grid, field)
        if not changed:
            break
    field.complete = not _has_sources(grid)
    return field
