"""Einzelbilder einer Episode als ASCII-Text oder PPM (P6).

ASCII: `#` Wand, `·` gesehen, `█` ungesehen, `@` Agent; Kopfzeile mit Tick und
Anteil ungesehener Zellen, Legende mit Ausrichtungszeichen `^ > v <`.
PPM: ein Pixel pro Zelle.
"""

from pathlib import Path
from typing import Optional

import numpy as np

from models import AgentState, CellState, DistanceField, GridMap
from utils.logger import setup_logger

logger = setup_logger("ripplefront.render")

GLYPH_WALL = "#"
GLYPH_SEEN = "·"
GLYPH_UNSEEN = "█"
GLYPH_AGENT = "@"

RGB_WALL = (64, 64, 64)
RGB_UNSEEN = (16, 16, 16)
RGB_SEEN = (200, 200, 200)
RGB_AGENT = (220, 40, 40)

_GLYPHS = {
    CellState.UNTRAVERSABLE: GLYPH_WALL,
    CellState.UNSEEN: GLYPH_UNSEEN,
    CellState.SEEN: GLYPH_SEEN,
}


def unseen_percent(grid: GridMap) -> float:
    """Anteil ungesehener an allen begehbaren Zellen (0-100)."""
    total = grid.traversable_count()
    return 100.0 * int(np.count_nonzero(grid.unseen_mask())) / total


def render_ascii(
    grid: GridMap, state: AgentState, tick: int = 0, field: Optional[DistanceField] = None
) -> str:
    zeilen = [f"tick={tick} unseen={unseen_percent(grid):.1f}%"]
    for y in range(grid.height):
        zeichen = [_GLYPHS[CellState(int(v))] for v in grid.cells[y]]
        if y == state.pos.y:
            zeichen[state.pos.x] = GLYPH_AGENT
        zeilen.append("".join(zeichen))
    zeilen.append(
        f"legend: {GLYPH_WALL} wall {GLYPH_SEEN} seen {GLYPH_UNSEEN} unseen "
        f"{GLYPH_AGENT} agent heading {state.heading.glyph}"
    )
    text = "\n".join(zeilen) + "\n"
    if field is not None:
        text += "\n" + field.to_text()
    return text


def render_ppm(grid: GridMap, state: AgentState) -> bytes:
    rgb = np.empty((grid.height, grid.width, 3), dtype=np.uint8)
    rgb[grid.cells == CellState.UNTRAVERSABLE] = RGB_WALL
    rgb[grid.cells == CellState.UNSEEN] = RGB_UNSEEN
    rgb[grid.cells == CellState.SEEN] = RGB_SEEN
    rgb[state.pos.y, state.pos.x] = RGB_AGENT
    header = f"P6\n{grid.width} {grid.height}\n255\n".encode("ascii")
    return header + rgb.tobytes()


def render_frame(
    grid: GridMap,
    state: AgentState,
    field: Optional[DistanceField] = None,
    tick: int = 0,
    fmt: str = "ascii",
) -> str | bytes:
    if fmt == "ascii":
        return render_ascii(grid, state, tick, field)
    if fmt == "ppm":
        return render_ppm(grid, state)
    raise ValueError(f"Unbekanntes Bildformat: {fmt!r} (ascii | ppm)")


class FrameRecorder:
    """on_tick-Hook: schreibt jedes `every`-te Bild plus das letzte nach `out_dir`."""

    def __init__(self, out_dir: Path, every: int = 1, fmt: str = "ascii"):
        if every < 1:
            raise ValueError(f"every muss >= 1 sein, war {every}")
        self.out_dir = Path(out_dir)
        self.every = every
        self.fmt = fmt
        self.geschrieben: list[Path] = []
        self._letzter: Optional[tuple[int, GridMap, AgentState]] = None
        self.out_dir.mkdir(parents=True, exist_ok=True)

    def __call__(self, tick: int, grid: GridMap, state: AgentState, field: Optional[DistanceField]):
        if tick % self.every == 0:
            self._schreiben(tick, grid, state)
            self._letzter = None
        else:
            self._letzter = (tick, grid.copy(), state)

    def finish(self):
        """Schreibt das letzte Bild, falls es nicht auf das Intervall fiel."""
        if self._letzter is not None:
            self._schreiben(*self._letzter)
            self._letzter = None
        logger.info(f"{len(self.geschrieben)} Bilder geschrieben nach {self.out_dir}")

    def _schreiben(self, tick: int, grid: GridMap, state: AgentState):
        endung = "txt" if self.fmt == "ascii" else "ppm"
        pfad = self.out_dir / f"frame_{tick:05d}.{endung}"
        bild = render_frame(grid, state, tick=tick, fmt=self.fmt)
        if isinstance(bild, bytes):
            pfad.write_bytes(bild)
        else:
            # newline="" damit "\n" auch unter Windows byte-stabil bleibt
            with open(pfad, "w", encoding="utf-8", newline="") as f:
                f.write(bild)
        self.geschrieben.append(pfad)
