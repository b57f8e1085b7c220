"""Kommandozeile: Parsing, Exit-Codes, Ausgaben."""

import pytest

from conftest import GOLDEN, MAPS
from main import EXIT_INTERNAL, EXIT_IO, EXIT_OK, EXIT_USAGE, build_parser, main, parse_args
from models import BenchCommand, Coord, FieldMode, Heading, RenderCommand, RunCommand
from utils.config_loader import load_config, szenario_verzeichnis
from utils.rng import MASK64


@pytest.fixture
def config():
    return load_config()


def test_parse_run(config):
    cmd = parse_args(["run", "--map", "square.map", "--start", "0,0", "--fov-angle", "180"], config)
    assert isinstance(cmd, RunCommand)
    assert cmd.start == Coord(0, 0)
    assert cmd.sim.cone.half_angle == 180.0
    assert cmd.sim.cone.range == 6.0
    assert cmd.heading is Heading.EAST


def test_parse_bench(config):
    cmd = parse_args(
        ["bench", "--map", "a.map", "--map", "b.map", "--episodes", "200", "--seed", "7", "--out", "r.csv"],
        config,
    )
    assert isinstance(cmd, BenchCommand)
    assert [p.name for p in cmd.maps] == ["a.map", "b.map"]
    assert (cmd.episodes, cmd.base_seed, cmd.out.name) == (200, 7, "r.csv")


def test_parse_bench_ohne_karten_nimmt_szenarien(config):
    cmd = parse_args(["bench"], config)
    assert cmd.maps == []
    assert cmd.szenarien == szenario_verzeichnis(config)
    assert parse_args(["bench", "--map", "a.map"], config).szenarien is None


def test_parse_render(config):
    cmd = parse_args(
        ["render", "--map", "x.map", "--every", "3", "--format", "ppm",
         "--out-dir", "bilder", "--field-mode", "sweeps:4", "--heading", "w"],
        config,
    )
    assert isinstance(cmd, RenderCommand)
    assert (cmd.every, cmd.format, cmd.out_dir.name) == (3, "ppm", "bilder")
    assert cmd.sim.field_mode == FieldMode(sweeps=4)
    assert cmd.heading is Heading.WEST


def test_parse_seed_u64(config):
    assert parse_args(["bench", "--seed", str(MASK64)], config).base_seed == MASK64


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--map", "x.map", "--heading", "q"],
        ["run", "--map", "x.map", "--start", "1;2"],
        ["run", "--map", "x.map", "--fov-range", "0"],
        ["run", "--map", "x.map", "--fov-angle", "200"],
        ["run", "--map", "x.map", "--field-mode", "sweeps:0"],
        ["run", "--map", "a.map", "--map", "b.map"],
        ["bench", "--episodes", "0"],
        ["bench", "--seed", str(MASK64 + 1)],
        ["render"],
        [],
    ],
)
def test_aufruffehler_exit_2(argv):
    assert main(argv) == EXIT_USAGE


@pytest.mark.parametrize("kommando", ["run", "bench", "render"])
def test_hilfe_nennt_alle_flags_mit_default(kommando, capsys):
    with pytest.raises(SystemExit) as info:
        parse_args([kommando, "--help"])
    assert info.value.code == 0
    hilfe = capsys.readouterr().out

    sub = next(a for a in build_parser()._actions if a.dest == "kommando").choices[kommando]
    flags = [a for a in sub._actions if a.dest != "help"]
    for action in flags:
        assert action.option_strings[0] in hilfe
    assert hilfe.count("(default:") >= len(flags)


def test_run_report(capsys):
    code = main([
        "run", "--map", str(GOLDEN / "corridor.map"),
        "--fov-range", "2", "--fov-angle", "45", "--heading", "e",
    ])
    assert code == EXIT_OK
    assert capsys.readouterr().out == "corridor 2 1 0.0\n"


def test_run_dump_field_und_trace(capsys):
    code = main([
        "run", "--map", str(GOLDEN / "corridor.map"), "--start", "0,0",
        "--fov-range", "2", "--fov-angle", "45", "--dump-field", "--trace",
    ])
    assert code == EXIT_OK
    assert capsys.readouterr().out == (
        "corridor 2 1 0.0\n"
        "3 2 1 0 0\n"
        "tick,unseen_percent\n0,40.0000\n1,20.0000\n2,0.0000\n"
    )


def test_run_trace_in_datei(tmp_path, capsys):
    ziel = tmp_path / "trace.csv"
    code = main([
        "run", "--map", str(GOLDEN / "corridor.map"),
        "--fov-range", "2", "--trace", "--out", str(ziel),
    ])
    assert code == EXIT_OK
    assert capsys.readouterr().out == "corridor 2 1 0.0\n"
    assert ziel.read_text(encoding="utf-8").startswith("tick,unseen_percent\n0,40.0000\n")


def test_run_zufallsstart_deterministisch(tmp_path, capsys):
    karte = tmp_path / "feld.map"
    karte.write_text("......\n.#..#.\n......\n", encoding="utf-8")
    assert main(["run", "--map", str(karte), "--seed", "5"]) == EXIT_OK
    erster = capsys.readouterr().out
    assert main(["run", "--map", str(karte), "--seed", "5"]) == EXIT_OK
    assert capsys.readouterr().out == erster
    assert erster.startswith("feld ")


def test_run_fehlende_karte(tmp_path):
    assert main(["run", "--map", str(tmp_path / "fehlt.map")]) == EXIT_IO


def test_run_kaputte_karte(tmp_path):
    karte = tmp_path / "kaputt.map"
    karte.write_text("..\n.\n", encoding="utf-8")
    assert main(["run", "--map", str(karte)]) == EXIT_IO


def test_run_start_auf_wand(tmp_path):
    karte = tmp_path / "wand.map"
    karte.write_text(".#.\n", encoding="utf-8")
    assert main(["run", "--map", str(karte), "--start", "1,0"]) == EXIT_USAGE
    assert main(["run", "--map", str(karte), "--start", "9,0"]) == EXIT_USAGE


def test_run_limit_ist_kein_fehler(capsys):
    code = main(["run", "--map", str(MAPS / "passages.map"), "--max-ticks", "2"])
    assert code == EXIT_OK
    assert capsys.readouterr().out.split()[2] == "0"


def test_stuck_im_fixpoint_modus_exit_4(monkeypatch, capsys):
    import main as cli
    from models import EpisodeStatus

    original = cli.run_episode

    def festgefahren(*args, **kwargs):
        record = original(*args, **kwargs)
        record.status = EpisodeStatus.STUCK
        record.completed = False
        return record

    monkeypatch.setattr(cli, "run_episode", festgefahren)
    assert main(["run", "--map", str(GOLDEN / "corridor.map")]) == EXIT_INTERNAL


def test_bench_csv(tmp_path, capsys):
    out = tmp_path / "r.csv"
    summary = tmp_path / "s.csv"
    code = main([
        "bench", "--map", str(MAPS / "square.map"), "--map", str(MAPS / "docks.map"),
        "--episodes", "3", "--seed", "7", "--out", str(out), "--summary-out", str(summary),
    ])
    assert code == EXIT_OK
    zeilen = out.read_text(encoding="utf-8").splitlines()
    assert len(zeilen) == 7
    assert zeilen[1].startswith("square,0,")
    assert summary.read_text(encoding="utf-8").splitlines()[2].startswith("docks,3,")
    assert capsys.readouterr().out == ""


def test_bench_nach_stdout(tmp_path, capsys):
    karte = tmp_path / "mini.map"
    karte.write_text("..\n..\n", encoding="utf-8")
    assert main(["bench", "--map", str(karte), "--episodes", "2"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("map_id,episode,seed,")


def test_bench_mit_archiv(tmp_path):
    from database import Database

    db = tmp_path / "archiv.db"
    karte = tmp_path / "mini.map"
    karte.write_text("...\n.#.\n...\n", encoding="utf-8")
    code = main([
        "bench", "--map", str(karte), "--episodes", "4",
        "--out", str(tmp_path / "r.csv"), "--db", str(db),
    ])
    assert code == EXIT_OK
    archiv = Database(db)
    try:
        laeufe = archiv.conn.execute("SELECT id FROM laeufe").fetchall()
        assert len(laeufe) == 1
        assert len(archiv.episoden(laeufe[0]["id"])) == 4
    finally:
        archiv.close()


def test_render_golden(tmp_path, capsys):
    code = main([
        "render", "--map", str(GOLDEN / "corridor.map"),
        "--fov-range", "2", "--fov-angle", "45", "--out-dir", str(tmp_path),
    ])
    assert code == EXIT_OK
    assert capsys.readouterr().out == "corridor 2 1 0.0\n"
    geschrieben = sorted(p.name for p in tmp_path.iterdir())
    assert geschrieben == ["frame_00000.txt", "frame_00001.txt", "frame_00002.txt"]
    for name in geschrieben:
        assert (tmp_path / name).read_bytes() == (GOLDEN / name).read_bytes()


def test_eigene_config(tmp_path, capsys):
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text("sicht:\n  reichweite: 2.0\n  halbwinkel_grad: 45.0\n", encoding="utf-8")
    cmd = parse_args(["run", "--map", "x.map"], load_config(cfg))
    assert cmd.sim.cone.range == 2.0
    assert main(["run", "--config", str(cfg), "--map", str(GOLDEN / "corridor.map")]) == EXIT_OK
    assert capsys.readouterr().out == "corridor 2 1 0.0\n"


@pytest.mark.parametrize(
    "inhalt",
    [
        "feld:\n  modus: bogus\n",
        "sicht:\n  reichweite: 0\n",
        "simulation:\n  start_ausrichtung: q\n",
    ],
)
def test_ungueltige_config_ist_usage_fehler(tmp_path, inhalt):
    cfg = tmp_path / "kaputt.yaml"
    cfg.write_text(inhalt, encoding="utf-8")
    code = main(["run", "--config", str(cfg), "--map", str(GOLDEN / "corridor.map")])
    assert code == EXIT_USAGE


def test_bench_validiert_szenario_verzeichnis(tmp_path):
    # Zwei Szenarien gleicher Größe, aber verschieden groß gegenüber den anderen
    for name in ["square", "passages", "docks", "hall"]:
        zeile = "." * (3 if name == "square" else 4) + "\n"
        (tmp_path / f"{name}.map").write_text(zeile * 2, encoding="utf-8")
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text(f"szenarien:\n  verzeichnis: {tmp_path}\n", encoding="utf-8")
    assert main(["bench", "--config", str(cfg), "--episodes", "1"]) == EXIT_IO


def test_bench_mit_aufbewahrung_raeumt_alte_laeufe_auf(tmp_path):
    from database import Database

    db = tmp_path / "archiv.db"
    karte = tmp_path / "mini.map"
    karte.write_text("...\n", encoding="utf-8")
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text("datenbank:\n  aufbewahrung_tage: 30\n", encoding="utf-8")

    archiv = Database(db)
    archiv.conn.execute(
        "INSERT INTO laeufe (base_seed, episoden, fov_range, fov_angle, field_mode, karten, datum) "
        "VALUES ('1', 0, 6.0, 45.0, 'fixpoint', 'alt', '2000-01-01 00:00:00')"
    )
    archiv.conn.commit()
    archiv.close()

    code = main([
        "bench", "--config", str(cfg), "--map", str(karte), "--episodes", "1",
        "--out", str(tmp_path / "r.csv"), "--db", str(db),
    ])
    assert code == EXIT_OK
    archiv = Database(db)
    try:
        datums = [row["datum"] for row in archiv.conn.execute("SELECT datum FROM laeufe")]
        assert len(datums) == 1
        assert not datums[0].startswith("2000")
    finally:
        archiv.close()
