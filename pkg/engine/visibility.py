"""Sichtkegel mit Verdeckung: macht ungesehene Zellen sichtbar.

Reichweite ist euklidisch zwischen Zellmittelpunkten, der Winkeltest
vergleicht exakt gegen den Einheitsvektor der Ausrichtung (Grenze inklusive).
Verdeckung per Bresenham vom Beobachter zum Ziel; diese Linie ist
richtungsabhängig, Symmetrie wird daher nicht zugesichert.
"""

import math

import numpy as np

from engine.kernels import cone_kernel, los_kernel
from errors import OutOfBoundsError, PosUntraversableError
from models import CellState, Coord, FovCone, GridMap, Heading


def line_of_sight(grid: GridMap, a: Coord, b: Coord) -> bool:
    """True, wenn keine Wand strikt zwischen a und b liegt (Endpunkt b darf Wand sein)."""
    for c in (a, b):
        if not grid.in_bounds(c):
            raise OutOfBoundsError(f"{c} liegt außerhalb von {grid.width}x{grid.height}")
    return bool(los_kernel(grid.cells, a.x, a.y, b.x, b.y))


def visible_mask(grid: GridMap, pos: Coord, heading: Heading, cone: FovCone) -> np.ndarray:
    """Sichtbare Zellen als Bool-Maske; enthält Wände (werden nie verändert)."""
    if not grid.is_traversable(pos):
        raise PosUntraversableError(f"Beobachterposition {pos} ist nicht begehbar")

    out = np.zeros((grid.height, grid.width), dtype=np.bool_)
    hx, hy = heading.vector
    cos_half = math.cos(math.radians(cone.half_angle))
    cone_kernel(grid.cells, pos.x, pos.y, hx, hy, float(cone.range), cos_half, out)
    return out


def visible_set(grid: GridMap, pos: Coord, heading: Heading, cone: FovCone) -> set[Coord]:
    mask = visible_mask(grid, pos, heading, cone)
    ys, xs = np.nonzero(mask)
    return {Coord(int(x), int(y)) for y, x in zip(ys, xs)}


def apply_vision(grid: GridMap, pos: Coord, heading: Heading, cone: FovCone) -> int:
    """Markiert alle sichtbaren ungesehenen Zellen als gesehen (mutiert `grid`).

    Die eigene Zelle ist danach immer gesehen. Gibt die Anzahl der Übergänge zurück.
    """
    mask = visible_mask(grid, pos, heading, cone)
    neu = mask & (grid.cells == CellState.UNSEEN)
    anzahl = int(np.count_nonzero(neu))
    grid.cells[neu] = CellState.SEEN
    return anzahl
