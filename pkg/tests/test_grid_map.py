"""Kartenformat, Nachbarschaft, Erreichbarkeit."""

import numpy as np
import pytest

from conftest import grid_from_rows, random_grid
from engine.grid_map import (
    coverage_stats,
    load_map,
    neighbors,
    parse_map,
    reachable_mask,
    reachable_set,
    serialize_map,
)
from errors import (
    EmptyMapError,
    IllegalCharError,
    MapLoadError,
    MultipleStartsError,
    OutOfBoundsError,
    RaggedRowsError,
    StartUntraversableError,
)
from models import CellState, Coord, GridMap


def test_parse_map_offen():
    grid, start = parse_map("..\n..")
    assert (grid.width, grid.height) == (2, 2)
    assert np.all(grid.cells == CellState.UNSEEN)
    assert start is None


def test_parse_map_mit_wand_und_start():
    grid, start = parse_map(".#\nS.")
    assert grid.state(Coord(1, 0)) is CellState.UNTRAVERSABLE
    assert start == Coord(0, 1)
    # Start ist begehbar und startet ungesehen
    assert grid.state(start) is CellState.UNSEEN


def test_parse_map_crlf_und_leerzeilen_am_ende():
    grid, _ = parse_map("..#\r\n...\r\n\r\n\n")
    assert (grid.width, grid.height) == (3, 2)


@pytest.mark.parametrize(
    "text, fehler",
    [
        ("..\n.\n", RaggedRowsError),
        ("..\n.x\n", IllegalCharError),
        ("S.\n.S\n", MultipleStartsError),
        ("", EmptyMapError),
        ("\n\n", EmptyMapError),
        ("##\n##\n", EmptyMapError),
    ],
)
def test_parse_map_fehler(text, fehler):
    with pytest.raises(fehler):
        parse_map(text)


def test_parse_map_fehler_nennt_position():
    with pytest.raises(IllegalCharError) as info:
        parse_map("...\n.?.\n")
    assert (info.value.zeile, info.value.spalte) == (2, 2)


def test_serialize_map_kanonisch():
    text = "#S.\n..#\n"
    grid, start = parse_map(text)
    assert serialize_map(grid, start) == text


def test_serialize_map_gesehene_zellen_als_punkt():
    grid = grid_from_rows("o.#")
    assert serialize_map(grid) == "..#\n"


def test_load_map(tmp_path):
    pfad = tmp_path / "mini.map"
    pfad.write_text("S.\n.#\n", encoding="utf-8")
    grid, start = load_map(pfad)
    assert grid.traversable_count() == 3
    assert start == Coord(0, 0)


def test_load_map_fehlende_datei(tmp_path):
    with pytest.raises(MapLoadError) as info:
        load_map(tmp_path / "gibt_es_nicht.map")
    assert "gibt_es_nicht.map" in str(info.value)


def test_load_map_parsefehler_wird_gewrappt(tmp_path):
    pfad = tmp_path / "kaputt.map"
    pfad.write_text("..\n.\n", encoding="utf-8")
    with pytest.raises(MapLoadError) as info:
        load_map(pfad)
    assert isinstance(info.value.ursache, RaggedRowsError)


def test_neighbors_reihenfolge():
    grid, _ = parse_map("...\n...\n...")
    assert neighbors(grid, Coord(1, 1)) == [Coord(1, 0), Coord(2, 1), Coord(1, 2), Coord(0, 1)]
    assert neighbors(grid, Coord(0, 0)) == [Coord(1, 0), Coord(0, 1)]


def test_neighbors_filtert_keine_waende():
    grid, _ = parse_map(".#.\n###\n...")
    assert Coord(1, 0) in neighbors(grid, Coord(0, 0))


def test_neighbors_ausserhalb():
    grid, _ = parse_map("..")
    with pytest.raises(OutOfBoundsError):
        neighbors(grid, Coord(2, 0))


def test_reachable_set_getrennte_taschen():
    grid, _ = parse_map("..#..\n..#..")
    assert reachable_set(grid, Coord(0, 0)) == {Coord(0, 0), Coord(1, 0), Coord(0, 1), Coord(1, 1)}
    mask = reachable_mask(grid, Coord(4, 1))
    assert int(mask.sum()) == 4
    assert mask[0, 3] and not mask[0, 0]


def test_reachable_set_wand_als_start():
    grid, _ = parse_map(".#")
    with pytest.raises(StartUntraversableError):
        reachable_set(grid, Coord(1, 0))


def test_coverage_stats_menge_und_maske():
    grid = grid_from_rows("oo.#.")
    erreichbar = reachable_set(grid, Coord(0, 0))
    stats = coverage_stats(grid, erreichbar)
    assert (stats.total_traversable, stats.unseen) == (3, 1)
    assert stats.unseen_percent == pytest.approx(100.0 / 3)
    assert coverage_stats(grid, reachable_mask(grid, Coord(0, 0))) == stats


def test_gridmap_copy_ist_unabhaengig():
    grid = grid_from_rows("..")
    kopie = grid.copy()
    kopie.cells[0, 0] = CellState.SEEN
    assert grid.state(Coord(0, 0)) is CellState.UNSEEN
    assert kopie != grid


def _zufalls_dokument(rng: np.random.Generator) -> str:
    breite, hoehe = rng.integers(1, 13, size=2)
    zeichen = np.where(rng.random((hoehe, breite)) < 0.3, "#", ".")
    zeichen[rng.integers(hoehe), rng.integers(breite)] = "."
    if rng.random() < 0.5:
        ys, xs = np.nonzero(zeichen == ".")
        i = rng.integers(len(ys))
        zeichen[ys[i], xs[i]] = "S"
    return "".join("".join(zeile) + "\n" for zeile in zeichen)


def test_kanonische_dokumente_ueberstehen_parse_und_serialize():
    rng = np.random.default_rng(31)
    for _ in range(200):
        text = _zufalls_dokument(rng)
        grid, start = parse_map(text)
        assert serialize_map(grid, start) == text


def test_reachable_set_gleich_von_jedem_mitglied():
    rng = np.random.default_rng(32)
    for _ in range(100):
        grid = random_grid(rng, int(rng.integers(1, 10)), int(rng.integers(1, 10)))
        zellen = grid.traversable_cells()
        start = zellen[rng.integers(len(zellen))]
        menge = reachable_set(grid, start)
        assert start in menge
        for c in menge:
            assert reachable_set(grid, c) == menge


def test_neighbors_nur_manhattan_abstand_eins():
    rng = np.random.default_rng(33)
    for _ in range(200):
        breite, hoehe = (int(v) for v in rng.integers(1, 10, size=2))
        grid = GridMap(breite, hoehe, np.full((hoehe, breite), CellState.UNSEEN, dtype=np.int8))
        c = Coord(int(rng.integers(breite)), int(rng.integers(hoehe)))
        nachbarn = neighbors(grid, c)
        assert all(abs(n.x - c.x) + abs(n.y - c.y) == 1 for n in nachbarn)
        assert all(grid.in_bounds(n) for n in nachbarn)
        assert len(set(nachbarn)) == len(nachbarn)


def test_neighbors_1x1_leer():
    grid = grid_from_rows(".")
    assert neighbors(grid, Coord(0, 0)) == []
