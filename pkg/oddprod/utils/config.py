"""
Environment-aware Configuration for oddprod
Reads worker counts, oracle limits and output locations from the environment
(and an optional .env file in the working directory)
"""

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 12
DEFAULT_LOG_LEVEL = "WARNING"


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}; using {default}")
        return default
    if value < 1:
        logger.warning(f"Ignoring non-positive {name}={value}; using {default}")
        return default
    return value


@dataclass
class OddProdConfig:
    """Runtime configuration resolved from the environment"""

    workers: int
    oracle_cap: int
    output_dir: Path
    log_level: str = DEFAULT_LOG_LEVEL

    @classmethod
    def detect(cls, dotenv_path: Optional[Path] = None) -> "OddProdConfig":
        """
        Build the configuration from environment variables

        Variables:
        1. ODDPROD_WORKERS: default worker count for bench and oracle fan-out
        2. ODDPROD_ORACLE_CAP: default vertex cap of the exact oracle
        3. ODDPROD_OUTPUT_DIR: where bench CSVs land when no path is given
        4. ODDPROD_LOG_LEVEL: logging level for the CLI
        """
        load_dotenv(dotenv_path)

        workers = _int_from_env("ODDPROD_WORKERS", os.cpu_count() or 1)
        oracle_cap = _int_from_env("ODDPROD_ORACLE_CAP", DEFAULT_ORACLE_CAP)
        output_dir = Path(os.getenv("ODDPROD_OUTPUT_DIR", "outputs"))
        log_level = os.getenv("ODDPROD_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()
        if log_level not in logging.getLevelNamesMapping():
            log_level = DEFAULT_LOG_LEVEL

        return cls(
            workers=workers,
            oracle_cap=oracle_cap,
            output_dir=output_dir,
            log_level=log_level,
        )

    def get_output_path(self, filename: str) -> Path:
        """Get full path for an output file, creating the directory on demand"""
        self.output_dir.mkdir(parents=True, exist_ok=True)
        return self.output_dir / filename

    def __str__(self) -> str:
        return (
            f"workers={self.workers} oracle_cap={self.oracle_cap} "
            f"output={self.output_dir} log_level={self.log_level}"
        )


# Global configuration instance - initialized once when module is imported
ENV_CONFIG = OddProdConfig.detect()


def get_config() -> OddProdConfig:
    """Get the current environment configuration"""
    return ENV_CONFIG


def reload_config() -> OddProdConfig:
    """Re-read the environment (used by tests and after CLI flag parsing)"""
    global ENV_CONFIG
    ENV_CONFIG = OddProdConfig.detect()
    return ENV_CONFIG
