"""Datenmodelle für die RippleFront-Coverage-Engine."""

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from pathlib import Path
from typing import NamedTuple, Optional, Union

import numpy as np

from errors import EmptyMapError

# Sentinel für "keine Quelle erreichbar" im Distanzfeld
UNREACHED = -1


class CellState(IntEnum):
    UNTRAVERSABLE = 0
    UNSEEN = 1
    SEEN = 2


class Heading(Enum):
    NORTH = "n"
    EAST = "e"
    SOUTH = "s"
    WEST = "w"

    @property
    def vector(self) -> tuple[int, int]:
        return _HEADING_VECTORS[self]

    @property
    def glyph(self) -> str:
        return _HEADING_GLYPHS[self]

    @classmethod
    def parse(cls, text: str) -> "Heading":
        """Akzeptiert n/e/s/w und die vollen englischen Namen."""
        key = text.strip().lower()
        for heading in cls:
            if key in (heading.value, heading.name.lower()):
                return heading
        raise ValueError(f"Unbekannte Ausrichtung: {text!r} (erlaubt: n, e, s, w)")


_HEADING_VECTORS = {
    Heading.NORTH: (0, -1),
    Heading.EAST: (1, 0),
    Heading.SOUTH: (0, 1),
    Heading.WEST: (-1, 0),
}

_HEADING_GLYPHS = {
    Heading.NORTH: "^",
    Heading.EAST: ">",
    Heading.SOUTH: "v",
    Heading.WEST: "<",
}

# Feste Nachbarreihenfolge: oben, rechts, unten, links (im Uhrzeigersinn ab Norden)
NEIGHBOR_ORDER = (Heading.NORTH, Heading.EAST, Heading.SOUTH, Heading.WEST)


class Coord(NamedTuple):
    x: int
    y: int

    def step(self, heading: Heading) -> "Coord":
        dx, dy = heading.vector
        return Coord(self.x + dx, self.y + dy)


@dataclass(frozen=True)
class CoverageStats:
    total_traversable: int
    unseen: int
    unseen_percent: float   # 0-100


@dataclass(eq=False)
class GridMap:
    """Rechteckiges Gitter, Zellzustände zeilenweise als int8-Array (height, width)."""
    width: int
    height: int
    cells: np.ndarray

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise EmptyMapError(f"Ungültige Kartengröße {self.width}x{self.height}")
        self.cells = np.asarray(self.cells, dtype=np.int8)
        if self.cells.shape != (self.height, self.width):
            raise ValueError(
                f"Zellarray hat Form {self.cells.shape}, erwartet {(self.height, self.width)}"
            )
        if not np.any(self.cells != CellState.UNTRAVERSABLE):
            raise EmptyMapError("Karte enthält keine begehbare Zelle")

    def __eq__(self, other) -> bool:
        if not isinstance(other, GridMap):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and np.array_equal(self.cells, other.cells)
        )

    def in_bounds(self, c: Coord) -> bool:
        return 0 <= c.x < self.width and 0 <= c.y < self.height

    def state(self, c: Coord) -> CellState:
        return CellState(int(self.cells[c.y, c.x]))

    def is_traversable(self, c: Coord) -> bool:
        return self.in_bounds(c) and self.cells[c.y, c.x] != CellState.UNTRAVERSABLE

    def traversable_mask(self) -> np.ndarray:
        return self.cells != CellState.UNTRAVERSABLE

    def unseen_mask(self) -> np.ndarray:
        return self.cells == CellState.UNSEEN

    def traversable_count(self) -> int:
        return int(np.count_nonzero(self.traversable_mask()))

    def traversable_cells(self) -> list[Coord]:
        """Alle begehbaren Zellen in Zeilenreihenfolge."""
        ys, xs = np.nonzero(self.traversable_mask())
        return [Coord(int(x), int(y)) for y, x in zip(ys, xs)]

    def copy(self) -> "GridMap":
        return GridMap(self.width, self.height, self.cells.copy())


@dataclass(eq=False)
class DistanceField:
    """D(n) pro Zelle; UNREACHED für Wände und quellenlose Bereiche."""
    values: np.ndarray
    complete: bool = False

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.int32)

    @property
    def height(self) -> int:
        return int(self.values.shape[0])

    @property
    def width(self) -> int:
        return int(self.values.shape[1])

    def value(self, c: Coord) -> int:
        return int(self.values[c.y, c.x])

    def copy(self) -> "DistanceField":
        return DistanceField(self.values.copy(), self.complete)

    def to_text(self) -> str:
        """Debug-Dump: Zahlen durch Leerzeichen getrennt, '.' für UNREACHED."""
        zeilen = []
        for row in self.values:
            zeilen.append(" ".join("." if v == UNREACHED else str(int(v)) for v in row))
        return "\n".join(zeilen) + "\n"


@dataclass(frozen=True)
class FovCone:
    range: float          # Knoten, Mittelpunkt zu Mittelpunkt
    half_angle: float     # Grad, (0, 180]; 180 = rundum

    def __post_init__(self):
        if not self.range > 0:
            raise ValueError(f"Sichtweite muss > 0 sein, war {self.range}")
        if not 0 < self.half_angle <= 180:
            raise ValueError(f"Halbwinkel muss in (0, 180] liegen, war {self.half_angle}")

    @classmethod
    def omnidirectional(cls, range: float) -> "FovCone":
        return cls(range=range, half_angle=180.0)


@dataclass(frozen=True)
class FieldMode:
    """Fixpoint (sweeps=None) oder Sweeps(k)."""
    sweeps: Optional[int] = None

    def __post_init__(self):
        if self.sweeps is not None and self.sweeps < 1:
            raise ValueError(f"Sweeps(k) braucht k >= 1, war {self.sweeps}")

    @property
    def is_fixpoint(self) -> bool:
        return self.sweeps is None

    @classmethod
    def parse(cls, text: str) -> "FieldMode":
        """'fixpoint' oder 'sweeps:K'."""
        key = text.strip().lower()
        if key == "fixpoint":
            return cls()
        if key.startswith("sweeps:"):
            try:
                k = int(key.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"Ungültiger Feldmodus: {text!r}") from None
            return cls(sweeps=k)
        raise ValueError(f"Ungültiger Feldmodus: {text!r} (fixpoint | sweeps:K)")

    def __str__(self) -> str:
        return "fixpoint" if self.is_fixpoint else f"sweeps:{self.sweeps}"


@dataclass(frozen=True)
class AgentState:
    pos: Coord
    heading: Heading
    steps_taken: int = 0


class TickOutcome(Enum):
    CONTINUE = "continue"
    DONE = "done"
    STUCK = "stuck"


class EpisodeStatus(Enum):
    DONE = "done"
    STUCK = "stuck"
    LIMIT = "limit"     # max_ticks erreicht


@dataclass(frozen=True)
class SimConfig:
    cone: FovCone = field(default_factory=lambda: FovCone(6.0, 45.0))
    field_mode: FieldMode = field(default_factory=FieldMode)
    max_ticks: Optional[int] = None    # None = max_ticks_factor x |erreichbar|
    seed: int = 0
    trace: bool = False
    max_ticks_factor: int = 10

    def __post_init__(self):
        if self.max_ticks is not None and self.max_ticks < 1:
            raise ValueError(f"max_ticks muss >= 1 sein, war {self.max_ticks}")


@dataclass
class EpisodeRecord:
    """Ergebnis einer Episode."""
    map_id: str
    start: Coord
    seed: int
    total_steps: int
    completed: bool
    unreachable_unseen: int
    trace: Optional[list[tuple[int, float]]] = None
    episode: int = 0
    ticks: int = 0
    status: EpisodeStatus = EpisodeStatus.DONE
    unseen_percent_final: float = 0.0
    laufzeit_ms: float = field(default=0.0, compare=False)   # Rechenzeit, nicht in CSV


@dataclass
class BenchConfig:
    maps: list[Path]
    episodes: int = 200
    base_seed: int = 0
    sim: SimConfig = field(default_factory=SimConfig)
    initial_heading: Heading = Heading.EAST
    jobs: int = 1

    def __post_init__(self):
        if self.episodes < 1:
            raise ValueError(f"episodes muss >= 1 sein, war {self.episodes}")


@dataclass(frozen=True)
class MapSummary:
    map_id: str
    episodes: int
    mean_steps: float
    sd_steps: float
    min_steps: int
    median_steps: int
    max_steps: int
    completion_rate: float   # 0-1


@dataclass
class BenchSummary:
    maps: list[MapSummary]

    def get(self, map_id: str) -> MapSummary:
        for eintrag in self.maps:
            if eintrag.map_id == map_id:
                return eintrag
        raise KeyError(map_id)


# --- CLI-Kommandos -----------------------------------------------------

@dataclass
class RunCommand:
    map: Path
    sim: SimConfig
    heading: Heading
    start: Optional[Coord] = None
    out: Optional[Path] = None
    dump_field: bool = False


@dataclass
class BenchCommand:
    maps: list[Path]
    episodes: int
    base_seed: int
    sim: SimConfig
    heading: Heading
    out: Optional[Path] = None
    summary_out: Optional[Path] = None
    jobs: int = 1
    db: Optional[Path] = None
    aufbewahrung_tage: Optional[int] = None
    # Ohne --map: Szenario-Verzeichnis, das vor dem Lauf validiert wird
    szenarien: Optional[Path] = None


@dataclass
class RenderCommand:
    map: Path
    sim: SimConfig
    heading: Heading
    out_dir: Path
    start: Optional[Coord] = None
    every: int = 1
    format: str = "ascii"


Command = Union[RunCommand, BenchCommand, RenderCommand]
