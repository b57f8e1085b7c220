"""Gemeinsame Fixtures: Repo-Root auf sys.path, Zufallskarten, Standardkarten."""

import sys
from collections import deque
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from models import UNREACHED, CellState, GridMap  # noqa: E402

GOLDEN = Path(__file__).resolve().parent / "golden"
MAPS = ROOT / "maps"


def random_grid(rng: np.random.Generator, width: int, height: int) -> GridMap:
    """Zufällige Wände (0-40 %) und zufällige gesehen/ungesehen-Verteilung."""
    wand_anteil = rng.uniform(0.0, 0.4)
    unseen_anteil = rng.uniform(0.0, 0.5)
    r = rng.random((height, width))
    cells = np.where(
        r < wand_anteil,
        CellState.UNTRAVERSABLE,
        np.where(rng.random((height, width)) < unseen_anteil, CellState.UNSEEN, CellState.SEEN),
    ).astype(np.int8)
    if not np.any(cells != CellState.UNTRAVERSABLE):
        cells[0, 0] = CellState.SEEN
    return GridMap(width, height, cells)


def reference_bfs(grid: GridMap) -> np.ndarray:
    """Unabhängige Referenz in reinem Python (deque), ohne die JIT-Kernel."""
    h, w = grid.height, grid.width
    dist = np.full((h, w), UNREACHED, dtype=np.int32)
    queue = deque()
    for y in range(h):
        for x in range(w):
            if grid.cells[y, x] == CellState.UNSEEN:
                dist[y, x] = 0
                queue.append((x, y))
    while queue:
        x, y = queue.popleft()
        for dx, dy in ((0, -1), (1, 0), (0, 1), (-1, 0)):
            nx, ny = x + dx, y + dy
            if (
                0 <= nx < w and 0 <= ny < h
                and grid.cells[ny, nx] != CellState.UNTRAVERSABLE
                and dist[ny, nx] == UNREACHED
            ):
                dist[ny, nx] = dist[y, x] + 1
                queue.append((nx, ny))
    return dist


def grid_from_rows(*rows: str) -> GridMap:
    """Testkarten kompakt: '#' Wand, '.' ungesehen, 'o' gesehen."""
    codes = {"#": CellState.UNTRAVERSABLE, ".": CellState.UNSEEN, "o": CellState.SEEN}
    cells = np.array([[codes[c] for c in row] for row in rows], dtype=np.int8)
    return GridMap(len(rows[0]), len(rows), cells)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def corridor_map() -> Path:
    return GOLDEN / "corridor.map"
