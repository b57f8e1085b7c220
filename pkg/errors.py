"""Fehlerhierarchie der RippleFront-Engine."""

from typing import Optional


class RippleFrontError(Exception):
    """Basisklasse aller Engine-Fehler."""


# --- Karten-Parsing ---------------------------------------------------

class MapParseError(RippleFrontError):
    """Kartendokument ist ungültig."""

    def __init__(self, nachricht: str, zeile: Optional[int] = None, spalte: Optional[int] = None):
        self.zeile = zeile
        self.spalte = spalte
        ort = ""
        if zeile is not None:
            ort = f" (Zeile {zeile}" + (f", Spalte {spalte})" if spalte is not None else ")")
        super().__init__(f"{nachricht}{ort}")


class RaggedRowsError(MapParseError):
    pass


class IllegalCharError(MapParseError):
    pass


class MultipleStartsError(MapParseError):
    pass


class EmptyMapError(MapParseError):
    pass


class MapLoadError(RippleFrontError):
    """Kartendatei nicht lesbar oder nicht parsbar."""

    def __init__(self, pfad, ursache: Exception):
        self.pfad = pfad
        self.ursache = ursache
        super().__init__(f"Karte {pfad} konnte nicht geladen werden: {ursache}")


class ScenarioError(RippleFrontError):
    """Szenario-Fixture verletzt Größe oder Zusammenhang."""


# --- Gitter / Engine ---------------------------------------------------

class OutOfBoundsError(RippleFrontError):
    pass


class StartUntraversableError(RippleFrontError):
    pass


class PosUntraversableError(RippleFrontError):
    pass


class DimensionMismatchError(RippleFrontError):
    pass


class BlockedStepError(RippleFrontError):
    """Schritt in Wand oder aus dem Gitter: deutet auf einen Fehler der Policy."""


class EmptyInputError(RippleFrontError):
    pass
