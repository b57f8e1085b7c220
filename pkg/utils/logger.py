import logging
import os
import sys
from pathlib import Path


def setup_logger(name: str = "ripplefront", log_file: str | None = None) -> logging.Logger:
    """Konfiguriert Logger mit Konsolen- und optionalem Datei-Output.

    Konsole geht auf stderr, stdout bleibt für Report-Zeile, CSV und Dumps frei.
    Level und Logdatei kommen aus RIPPLEFRONT_LOG_LEVEL / RIPPLEFRONT_LOG_FILE.
    """
    logger = logging.getLogger(name)

    if logger.handlers:
        return logger

    logger.setLevel(logging.DEBUG)
    # Kein Doppel-Output über den Root-Logger
    logger.propagate = False

    formatter = logging.Formatter(
        "%(asctime)s | %(name)-20s | %(levelname)-8s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    level_name = os.getenv("RIPPLEFRONT_LOG_LEVEL", "INFO").upper()
    console = logging.StreamHandler(sys.stderr)
    console.setLevel(getattr(logging, level_name, logging.INFO))
    console.setFormatter(formatter)
    logger.addHandler(console)

    # Datei: DEBUG+ (nur wenn gewünscht)
    log_file = log_file or os.getenv("RIPPLEFRONT_LOG_FILE")
    if log_file:
        log_path = Path(log_file)
        if not log_path.is_absolute():
            log_path = Path(__file__).resolve().parent.parent / log_path
        file_handler = logging.FileHandler(log_path, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger
