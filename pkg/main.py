"""
RippleFront - Coverage-Path-Planning-Engine
===========================================
Ein Agent mit Sichtkegel folgt gierig einem fortlaufend propagierten
Distanzfeld, bis alle erreichbaren begehbaren Zellen gesehen sind.

Nutzung:
    python main.py run --map maps/square.map --start 1,1 --fov-angle 180
    python main.py bench --episodes 200 --seed 7 --out r.csv --summary-out s.csv
    python main.py render --map maps/docks.map --every 10 --format ppm --out-dir frames/

Exit-Codes: 0 ok, 2 Aufruffehler, 3 I/O, 4 interne Invariante verletzt.
"""

import argparse
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# Projektroot zu sys.path hinzufügen
ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(ROOT))

# .env vor den Projekt-Imports laden: Logger lesen RIPPLEFRONT_LOG_* beim Import
load_dotenv(ROOT / ".env")

from bench.csv_export import write_records_csv, write_summary_csv, write_trace_csv
from bench.runner import run_bench
from database import Database
from engine.grid_map import load_map
from engine.ripple_field import bfs_oracle
from engine.scenarios import load_scenarios
from engine.sim import random_start, run_episode
from errors import BlockedStepError, MapLoadError, ScenarioError, StartUntraversableError
from models import (
    BenchCommand,
    BenchConfig,
    Command,
    Coord,
    DistanceField,
    EpisodeRecord,
    EpisodeStatus,
    FieldMode,
    FovCone,
    Heading,
    RenderCommand,
    RunCommand,
    SimConfig,
)
from render.frames import FrameRecorder
from utils.config_loader import (
    cone_aus_config,
    field_mode_aus_config,
    heading_aus_config,
    load_config,
    max_ticks_faktor,
    szenario_verzeichnis,
)
from utils.logger import setup_logger
from utils.rng import MASK64, SplitMix64, derive_seed

logger = setup_logger("ripplefront.main")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INTERNAL = 4


# --- Argument-Parsing --------------------------------------------------

def _coord(text: str) -> Coord:
    try:
        x, y = (int(teil) for teil in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"erwartet X,Y - bekommen {text!r}") from None
    return Coord(x, y)


def _u64(text: str) -> int:
    try:
        wert = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"keine Ganzzahl: {text!r}") from None
    if not 0 <= wert <= MASK64:
        raise argparse.ArgumentTypeError(f"Seed muss in [0, 2^64) liegen: {text}")
    return wert


def _positive_int(text: str) -> int:
    try:
        wert = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"keine Ganzzahl: {text!r}") from None
    if wert < 1:
        raise argparse.ArgumentTypeError(f"muss >= 1 sein: {text}")
    return wert


def _field_mode(text: str) -> FieldMode:
    try:
        return FieldMode.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser(config: Optional[dict] = None) -> argparse.ArgumentParser:
    """Parser mit Defaults aus config.yaml."""
    config = config or {}
    cone = cone_aus_config(config)
    bench_cfg = config.get("bench", {})
    render_cfg = config.get("render", {})
    fmt = argparse.ArgumentDefaultsHelpFormatter

    sim_flags = argparse.ArgumentParser(add_help=False)
    sim_flags.add_argument("--config", default="config.yaml", help="Pfad zur Config-Datei")
    sim_flags.add_argument("--heading", choices=["n", "e", "s", "w"],
                           default=heading_aus_config(config).value,
                           help="Startausrichtung")
    sim_flags.add_argument("--fov-range", type=float, default=cone.range,
                           help="Sichtweite in Knoten (Mittelpunkt zu Mittelpunkt)")
    sim_flags.add_argument("--fov-angle", type=float, default=cone.half_angle,
                           help="HALB-Winkel des Sichtkegels in Grad (180 = rundum)")
    sim_flags.add_argument("--field-mode", type=_field_mode, default=field_mode_aus_config(config),
                           help="Feldausbreitung: fixpoint | sweeps:K")
    sim_flags.add_argument("--seed", type=_u64, default=int(bench_cfg.get("seed", 0)),
                           help="Basis-Seed (u64) für Zufallsstarts")
    sim_flags.add_argument("--max-ticks", type=_positive_int, default=None,
                           help=f"Tick-Limit pro Episode (None = {max_ticks_faktor(config)} x erreichbare Zellen)")

    parser = argparse.ArgumentParser(
        prog="ripplefront", description="RippleFront - Coverage-Path-Planning-Engine"
    )
    sub = parser.add_subparsers(dest="kommando", required=True)

    run = sub.add_parser("run", parents=[sim_flags], formatter_class=fmt,
                         help="Eine Episode simulieren")
    run.add_argument("--map", action="append", required=True, type=Path, help="Kartendatei (.map)")
    run.add_argument("--start", type=_coord, default=None,
                     help="Startzelle X,Y (sonst 'S' der Karte, sonst Zufallsstart aus --seed)")
    run.add_argument("--out", type=Path, default=None, help="Ziel für --trace (CSV)")
    run.add_argument("--trace", action="store_true", help="Verlauf tick,unseen_percent ausgeben")
    run.add_argument("--dump-field", action="store_true",
                     help="Distanzfeld der ersten Entscheidung ausgeben")

    bench = sub.add_parser("bench", parents=[sim_flags], formatter_class=fmt,
                           help="Monte-Carlo-Benchmark über Karten")
    bench.add_argument("--map", action="append", type=Path, default=None,
                       help="Kartendatei, wiederholbar (None = alle mitgelieferten Szenarien)")
    bench.add_argument("--episodes", type=_positive_int, default=int(bench_cfg.get("episoden", 200)),
                       help="Episoden pro Karte")
    bench.add_argument("--jobs", type=_positive_int, default=int(bench_cfg.get("jobs", 1)),
                       help="Parallele Prozesse")
    bench.add_argument("--out", type=Path, default=None, help="Episoden-CSV (None = stdout)")
    bench.add_argument("--summary-out", type=Path, default=None, help="Zusammenfassungs-CSV")
    bench.add_argument("--db", type=Path, default=None, help="SQLite-Archiv für den Lauf")

    render = sub.add_parser("render", parents=[sim_flags], formatter_class=fmt,
                            help="Episode als Bildfolge ausgeben")
    render.add_argument("--map", action="append", required=True, type=Path, help="Kartendatei (.map)")
    render.add_argument("--start", type=_coord, default=None,
                        help="Startzelle X,Y (sonst 'S' der Karte, sonst Zufallsstart aus --seed)")
    render.add_argument("--every", type=_positive_int, default=int(render_cfg.get("intervall", 1)),
                        help="Jedes N-te Tick-Bild schreiben")
    render.add_argument("--format", choices=["ascii", "ppm"], default=render_cfg.get("format", "ascii"),
                        help="Bildformat")
    render.add_argument("--out-dir", type=Path, default=Path("frames"), help="Zielverzeichnis")
    return parser


def parse_args(argv: Optional[list[str]] = None, config: Optional[dict] = None) -> Command:
    """argv -> Command. Aufruffehler beenden mit Exit-Code 2 (SystemExit)."""
    config = config or {}
    parser = build_parser(config)
    args = parser.parse_args(argv)

    try:
        cone = FovCone(range=args.fov_range, half_angle=args.fov_angle)
    except ValueError as e:
        parser.error(str(e))

    sim = SimConfig(
        cone=cone,
        field_mode=args.field_mode,
        max_ticks=args.max_ticks,
        seed=args.seed,
        trace=getattr(args, "trace", False),
        max_ticks_factor=max_ticks_faktor(config),
    )
    heading = Heading.parse(args.heading)

    if args.kommando == "bench":
        szenarien = None if args.map else szenario_verzeichnis(config)
        db = args.db
        datenbank = config.get("datenbank", {})
        if db is None and datenbank.get("aktiv", False):
            db = Path(datenbank.get("pfad", "ripplefront.db"))
        aufbewahrung = datenbank.get("aufbewahrung_tage")
        return BenchCommand(
            maps=args.map or [], episodes=args.episodes, base_seed=args.seed, sim=sim,
            heading=heading, out=args.out, summary_out=args.summary_out, jobs=args.jobs, db=db,
            aufbewahrung_tage=int(aufbewahrung) if aufbewahrung else None, szenarien=szenarien,
        )

    if len(args.map) != 1:
        parser.error(f"{args.kommando} erwartet genau eine --map")

    if args.kommando == "run":
        return RunCommand(
            map=args.map[0], sim=sim, heading=heading, start=args.start,
            out=args.out, dump_field=args.dump_field,
        )
    return RenderCommand(
        map=args.map[0], sim=sim, heading=heading, out_dir=args.out_dir,
        start=args.start, every=args.every, format=args.format,
    )


# --- Ausführung --------------------------------------------------------

def _report_line(record: EpisodeRecord) -> str:
    return (
        f"{record.map_id} {record.total_steps} {int(record.completed)} "
        f"{record.unseen_percent_final:.1f}"
    )


class RippleFrontApp:
    """Hauptklasse: führt ein geparstes Kommando aus und liefert den Exit-Code."""

    def __init__(self, config: dict):
        self.config = config

    def ausfuehren(self, command: Command) -> int:
        try:
            if isinstance(command, RunCommand):
                return self.run(command)
            if isinstance(command, BenchCommand):
                return self.bench(command)
            return self.render(command)
        except (MapLoadError, ScenarioError) as e:
            logger.error(str(e))
            return EXIT_IO
        except StartUntraversableError as e:
            logger.error(str(e))
            return EXIT_USAGE
        except BlockedStepError as e:
            logger.error(f"Interne Invariante verletzt: {e}")
            return EXIT_INTERNAL
        except OSError as e:
            logger.error(f"I/O-Fehler: {e}")
            return EXIT_IO

    def _episode_vorbereiten(self, command: RunCommand | RenderCommand):
        """Karte laden und Start bestimmen: --start, sonst 'S', sonst Zufallsstart."""
        grid, karten_start = load_map(command.map)
        sim = command.sim
        start = command.start or karten_start
        if start is None:
            seed = derive_seed(sim.seed, 0)
            start = random_start(grid, SplitMix64(seed))
            sim = replace(sim, seed=seed)
            logger.info(f"Zufallsstart {tuple(start)} (Seed {seed})")
        if not grid.is_traversable(start):
            raise StartUntraversableError(f"Startzelle {tuple(start)} ist nicht begehbar")
        return grid, start, sim

    def _stuck_pruefen(self, records: list[EpisodeRecord], sim: SimConfig) -> int:
        if not sim.field_mode.is_fixpoint:
            return EXIT_OK
        stuck = [r for r in records if r.status is EpisodeStatus.STUCK]
        if stuck:
            logger.error(
                f"Interne Invariante verletzt: {len(stuck)} Episoden im Fixpoint-Modus festgefahren"
            )
            return EXIT_INTERNAL
        return EXIT_OK

    def run(self, command: RunCommand) -> int:
        grid, start, sim = self._episode_vorbereiten(command)
        felder: dict[int, DistanceField] = {}

        def feld_merken(tick, karte, zustand, feld):
            if tick == 0:
                felder[0] = bfs_oracle(karte)
            elif tick == 1:
                felder[1] = feld

        record = run_episode(
            grid, start, command.heading, sim, map_id=command.map.stem,
            on_tick=feld_merken if command.dump_field else None,
        )
        print(_report_line(record))

        if command.dump_field:
            feld = felder.get(1, felder.get(0))
            sys.stdout.write(feld.to_text())

        if record.trace is not None:
            if command.out:
                write_trace_csv(record.trace, command.out)
                logger.info(f"Trace geschrieben: {command.out}")
            else:
                write_trace_csv(record.trace, sys.stdout)

        return self._stuck_pruefen([record], sim)

    def bench(self, command: BenchCommand) -> int:
        maps = command.maps
        if command.szenarien is not None:
            maps = load_scenarios(command.szenarien).paths(command.szenarien)
        config = BenchConfig(
            maps=maps,
            episodes=command.episodes,
            base_seed=command.base_seed,
            sim=command.sim,
            initial_heading=command.heading,
            jobs=command.jobs,
        )
        archiv = Database(command.db) if command.db else None
        try:
            if archiv and command.aufbewahrung_tage:
                archiv.cleanup(command.aufbewahrung_tage)
            records, summary = run_bench(config, archiv=archiv, fortschritt=sys.stderr.isatty())
        finally:
            if archiv:
                archiv.close()

        if command.out:
            write_records_csv(records, command.out)
            logger.info(f"Episoden-CSV geschrieben: {command.out} ({len(records)} Zeilen)")
        else:
            write_records_csv(records, sys.stdout)
        if command.summary_out:
            write_summary_csv(summary, command.summary_out)
            logger.info(f"Zusammenfassung geschrieben: {command.summary_out}")

        return self._stuck_pruefen(records, command.sim)

    def render(self, command: RenderCommand) -> int:
        grid, start, sim = self._episode_vorbereiten(command)
        recorder = FrameRecorder(command.out_dir, every=command.every, fmt=command.format)
        record = run_episode(
            grid, start, command.heading, sim, map_id=command.map.stem, on_tick=recorder
        )
        recorder.finish()
        print(_report_line(record))
        return self._stuck_pruefen([record], sim)


def main(argv: Optional[list[str]] = None) -> int:
    # --config vorab lesen, damit die Defaults der übrigen Flags daraus kommen
    vorab = argparse.ArgumentParser(add_help=False)
    vorab.add_argument("--config", default="config.yaml")
    bekannt, _ = vorab.parse_known_args(argv)
    config = load_config(bekannt.config)

    try:
        command = parse_args(argv, config)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except ValueError as e:
        # Ungültige Defaults aus der Config (Modus, Reichweite, Ausrichtung)
        logger.error(f"Ungültige Konfiguration {bekannt.config}: {e}")
        return EXIT_USAGE

    return RippleFrontApp(config).ausfuehren(command)


if __name__ == "__main__":
    sys.exit(main())
