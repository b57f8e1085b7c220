"""Laden von config.yaml und Ableiten der Simulations-Defaults."""

from pathlib import Path

import yaml

from models import FieldMode, FovCone, Heading
from utils.logger import setup_logger

logger = setup_logger("ripplefront.config")

ROOT = Path(__file__).resolve().parent.parent


def load_config(pfad: str | Path = "config.yaml") -> dict:
    """Lädt die Konfiguration. Fehlt die Datei, gelten die Code-Defaults."""
    config_path = Path(pfad)
    if not config_path.is_absolute():
        config_path = ROOT / config_path

    if not config_path.exists():
        logger.warning(f"Config nicht gefunden: {config_path} - nutze Defaults")
        return {}

    with open(config_path, "r", encoding="utf-8") as f:
        config = yaml.safe_load(f) or {}

    logger.debug(f"Config geladen: {config_path}")
    return config


def cone_aus_config(config: dict) -> FovCone:
    sicht = config.get("sicht", {})
    return FovCone(
        range=float(sicht.get("reichweite", 6.0)),
        half_angle=float(sicht.get("halbwinkel_grad", 45.0)),
    )


def field_mode_aus_config(config: dict) -> FieldMode:
    return FieldMode.parse(str(config.get("feld", {}).get("modus", "fixpoint")))


def heading_aus_config(config: dict) -> Heading:
    return Heading.parse(str(config.get("simulation", {}).get("start_ausrichtung", "e")))


def max_ticks_faktor(config: dict) -> int:
    return int(config.get("simulation", {}).get("max_ticks_faktor", 10))


def szenario_verzeichnis(config: dict) -> Path:
    verzeichnis = Path(config.get("szenarien", {}).get("verzeichnis", "maps"))
    if not verzeichnis.is_absolute():
        verzeichnis = ROOT / verzeichnis
    return verzeichnis
