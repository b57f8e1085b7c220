"""Mitgelieferte Szenario-Karten (vier Karten gleicher Gittergröße)."""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from engine.grid_map import load_map, reachable_set
from errors import ScenarioError
from models import GridMap
from utils.logger import setup_logger

logger = setup_logger("ripplefront.scenarios")

SCENARIO_NAMES = ("square", "passages", "docks", "hall")
DEFAULT_DIR = Path(__file__).resolve().parent.parent / "maps"


@dataclass
class ScenarioSet:
    maps: dict[str, GridMap]

    @property
    def size(self) -> tuple[int, int]:
        erste = next(iter(self.maps.values()))
        return erste.width, erste.height

    def paths(self, verzeichnis: Path = DEFAULT_DIR) -> list[Path]:
        return [verzeichnis / f"{name}.map" for name in self.maps]


def load_scenario(name: str, verzeichnis: Optional[Path] = None) -> GridMap:
    """Lädt eine Szenario-Karte und prüft ihren Zusammenhang."""
    pfad = (verzeichnis or DEFAULT_DIR) / f"{name}.map"
    grid, _ = load_map(pfad)

    zellen = grid.traversable_cells()
    erreichbar = reachable_set(grid, zellen[0])
    if len(erreichbar) != len(zellen):
        raise ScenarioError(
            f"Szenario {name}: nur {len(erreichbar)} von {len(zellen)} begehbaren Zellen verbunden"
        )
    return grid


def load_scenarios(verzeichnis: Optional[Path] = None) -> ScenarioSet:
    """Lädt alle vier Szenarien und validiert gemeinsame Größe und Zusammenhang."""
    maps = {name: load_scenario(name, verzeichnis) for name in SCENARIO_NAMES}

    groessen = {(m.width, m.height) for m in maps.values()}
    if len(groessen) != 1:
        raise ScenarioError(f"Szenarien haben unterschiedliche Größen: {sorted(groessen)}")

    anzahlen = [m.traversable_count() for m in maps.values()]
    if len(set(anzahlen)) != len(anzahlen):
        raise ScenarioError(f"Szenarien brauchen unterschiedlich viele begehbare Zellen: {anzahlen}")

    szenarien = ScenarioSet(maps)
    logger.info(
        f"Szenarien geladen ({szenarien.size[0]}x{szenarien.size[1]}): "
        + ", ".join(f"{n}={m.traversable_count()}" for n, m in maps.items())
    )
    return szenarien
