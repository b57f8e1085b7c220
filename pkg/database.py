"""SQLite-Archiv für Benchmark-Läufe (Episoden, Zusammenfassung, Rechenzeit)."""

import sqlite3
from datetime import datetime, timedelta, timezone
from pathlib import Path
from typing import Optional

from models import BenchConfig, BenchSummary, EpisodeRecord
from utils.logger import setup_logger

logger = setup_logger("ripplefront.db")


class Database:
    """SQLite-Datenbank-Manager für Benchmark-Ergebnisse."""

    def __init__(self, db_pfad: str | Path = "ripplefront.db"):
        pfad = Path(db_pfad)
        self.db_pfad = pfad if pfad.is_absolute() else Path(__file__).resolve().parent / pfad
        self.conn: Optional[sqlite3.Connection] = None
        self._init_db()

    def _init_db(self):
        """Erstellt Datenbank und Tabellen falls nicht vorhanden."""
        self.conn = sqlite3.connect(str(self.db_pfad))
        self.conn.row_factory = sqlite3.Row
        self.conn.execute("""
            CREATE TABLE IF NOT EXISTS laeufe (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                base_seed TEXT NOT NULL,
                episoden INTEGER NOT NULL,
                fov_range REAL NOT NULL,
                fov_angle REAL NOT NULL,
                field_mode TEXT NOT NULL,
                karten TEXT NOT NULL,
                datum TIMESTAMP DEFAULT CURRENT_TIMESTAMP
            )
        """)
        self.conn.execute("""
            CREATE TABLE IF NOT EXISTS episoden (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                lauf_id INTEGER NOT NULL REFERENCES laeufe(id) ON DELETE CASCADE,
                map_id TEXT NOT NULL,
                episode INTEGER NOT NULL,
                seed TEXT NOT NULL,
                start_x INTEGER NOT NULL,
                start_y INTEGER NOT NULL,
                steps INTEGER NOT NULL,
                ticks INTEGER NOT NULL,
                completed INTEGER NOT NULL,
                status TEXT NOT NULL,
                unreachable_unseen INTEGER DEFAULT 0,
                laufzeit_ms REAL DEFAULT 0
            )
        """)
        self.conn.execute("""
            CREATE TABLE IF NOT EXISTS zusammenfassungen (
                lauf_id INTEGER NOT NULL REFERENCES laeufe(id) ON DELETE CASCADE,
                map_id TEXT NOT NULL,
                episodes INTEGER NOT NULL,
                mean_steps REAL NOT NULL,
                sd_steps REAL NOT NULL,
                min_steps INTEGER NOT NULL,
                median_steps INTEGER NOT NULL,
                max_steps INTEGER NOT NULL,
                completion_rate REAL NOT NULL
            )
        """)
        self.conn.execute("""
            CREATE INDEX IF NOT EXISTS idx_episoden_lauf ON episoden(lauf_id)
        """)
        self.conn.commit()
        logger.info(f"Datenbank initialisiert: {self.db_pfad}")

    def lauf_speichern(
        self, config: BenchConfig, records: list[EpisodeRecord], summary: BenchSummary
    ) -> int:
        """Speichert einen kompletten Lauf. Gibt die Lauf-ID zurück."""
        cursor = self.conn.execute(
            """INSERT INTO laeufe
               (base_seed, episoden, fov_range, fov_angle, field_mode, karten)
               VALUES (?, ?, ?, ?, ?, ?)""",
            (
                # u64-Seeds passen nicht in SQLite INTEGER (i64) -> als Text
                str(config.base_seed),
                config.episodes,
                config.sim.cone.range,
                config.sim.cone.half_angle,
                str(config.sim.field_mode),
                ",".join(p.stem for p in config.maps),
            ),
        )
        lauf_id = cursor.lastrowid

        self.conn.executemany(
            """INSERT INTO episoden
               (lauf_id, map_id, episode, seed, start_x, start_y, steps, ticks,
                completed, status, unreachable_unseen, laufzeit_ms)
               VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)""",
            [
                (
                    lauf_id, r.map_id, r.episode, str(r.seed), r.start.x, r.start.y,
                    r.total_steps, r.ticks, int(r.completed), r.status.value,
                    r.unreachable_unseen, r.laufzeit_ms,
                )
                for r in records
            ],
        )
        self.conn.executemany(
            """INSERT INTO zusammenfassungen
               (lauf_id, map_id, episodes, mean_steps, sd_steps, min_steps,
                median_steps, max_steps, completion_rate)
               VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)""",
            [
                (
                    lauf_id, s.map_id, s.episodes, s.mean_steps, s.sd_steps,
                    s.min_steps, s.median_steps, s.max_steps, s.completion_rate,
                )
                for s in summary.maps
            ],
        )
        self.conn.commit()
        logger.info(f"Lauf #{lauf_id} archiviert: {len(records)} Episoden")
        return lauf_id

    def episoden(self, lauf_id: int) -> list[dict]:
        """Alle Episoden eines Laufs in (Karte, Index)-Reihenfolge."""
        cursor = self.conn.execute(
            "SELECT * FROM episoden WHERE lauf_id = ? ORDER BY id", (lauf_id,)
        )
        return [dict(row) for row in cursor.fetchall()]

    def statistik(self, lauf_id: int) -> dict:
        """Zusammenfassung und mittlere Rechenzeit pro Karte."""
        cursor = self.conn.execute(
            """SELECT z.map_id, z.episodes, z.mean_steps, z.completion_rate,
                      AVG(e.laufzeit_ms) AS mean_laufzeit_ms
               FROM zusammenfassungen z
               JOIN episoden e ON e.lauf_id = z.lauf_id AND e.map_id = z.map_id
               WHERE z.lauf_id = ?
               GROUP BY z.map_id
               ORDER BY MIN(e.id)""",
            (lauf_id,),
        )
        return {row["map_id"]: dict(row) for row in cursor.fetchall()}

    def cleanup(self, tage: int = 30):
        """Löscht Läufe älter als X Tage."""
        # CURRENT_TIMESTAMP ist UTC
        grenze = (datetime.now(timezone.utc) - timedelta(days=tage)).strftime("%Y-%m-%d %H:%M:%S")
        alte = [
            row["id"]
            for row in self.conn.execute("SELECT id FROM laeufe WHERE datum < ?", (grenze,))
        ]
        for lauf_id in alte:
            self.conn.execute("DELETE FROM episoden WHERE lauf_id = ?", (lauf_id,))
            self.conn.execute("DELETE FROM zusammenfassungen WHERE lauf_id = ?", (lauf_id,))
            self.conn.execute("DELETE FROM laeufe WHERE id = ?", (lauf_id,))
        self.conn.commit()
        if alte:
            logger.info(f"Cleanup: {len(alte)} Läufe älter als {tage} Tage gelöscht")

    def close(self):
        if self.conn:
            self.conn.close()
