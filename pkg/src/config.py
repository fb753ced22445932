"""Configuration for recurrence-divisors.

All defaults live here as module constants. There are no configuration files
and no environment variables; the log directory is the only platform-dependent
location.
"""

import logging
import os
from dataclasses import dataclass, field
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

from platformdirs import user_log_dir
from sympy import isprime

__all__ = [
    "CliConfig",
    "DensitySettings",
    "SieveSettings",
    "UsageError",
    "setup_logging",
    "get_log_dir",
    "DEFAULT_RECURRENCE",
    "DEFAULT_LIMIT",
    "DEFAULT_EULER_BOUND",
    "DEFAULT_JOBS",
    "MIN_PRIME_BOUND",
]

logger = logging.getLogger(__name__)

APP_NAME = "recurrence-divisors"
APP_AUTHOR = "recurrence-divisors"
LOG_FILE_NAME = "recurrence-divisors.log"

# The Lagarias sequence 3, 1, 4, 5, 9, 14, ...
DEFAULT_RECURRENCE = (1, 1, 3, 1)
DEFAULT_LIMIT = 10**6

# Density evaluation
DEFAULT_EULER_BOUND = 10**7
DEFAULT_I_MAX = 500
DEFAULT_J_MAX = 500
DEFAULT_ARTIN_J_MAX = 10**4
DEFAULT_ARTIN_PRIME_BOUND = 10**6
# Smallest prime bound the truncated products accept
MIN_PRIME_BOUND = 100

# Sieve work partitioning
DEFAULT_BLOCK_SIZE = 2**14  # primes per worker block
DEFAULT_SEGMENT_SIZE = 2**18  # integers per sieve segment
DEFAULT_JOBS = os.cpu_count() or 1

SUBCOMMANDS = ("classify", "check", "sieve", "density", "compare", "artin")
OUTPUT_FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    """Invalid command-line arguments."""

    def __init__(self, flag: str, message: str):
        self.flag = flag
        super().__init__(f"{flag}: {message}")


@dataclass
class SieveSettings:
    """How a sieve run is partitioned."""

    limit: int = DEFAULT_LIMIT
    jobs: int = DEFAULT_JOBS
    block_size: int = DEFAULT_BLOCK_SIZE
    segment_size: int = DEFAULT_SEGMENT_SIZE
    emit_records: bool = False


@dataclass
class DensitySettings:
    """Truncation points for products and series."""

    euler_bound: int = DEFAULT_EULER_BOUND
    i_max: int = DEFAULT_I_MAX
    j_max: int = DEFAULT_J_MAX
    artin_j_max: int = DEFAULT_ARTIN_J_MAX
    artin_prime_bound: int = DEFAULT_ARTIN_PRIME_BOUND


@dataclass
class CliConfig:
    """Parsed command line."""

    subcommand: str
    recurrence: tuple[int, int, int, int] = DEFAULT_RECURRENCE
    sieve: SieveSettings = field(default_factory=SieveSettings)
    density: DensitySettings = field(default_factory=DensitySettings)
    prime: Optional[int] = None
    base: Optional[int] = None
    format: str = "text"
    out: Optional[Path] = None
    verbose: bool = False

    def validate(self) -> "CliConfig":
        """Check every field, naming the offending flag on failure.

        Raises:
            UsageError: If a numeric argument is not positive, a prime bound is
                below MIN_PRIME_BOUND, --prime is not prime, or a choice is unknown
        """
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError("subcommand", f"unknown subcommand {self.subcommand!r}")
        if self.format not in OUTPUT_FORMATS:
            raise UsageError("--format", f"expected one of {', '.join(OUTPUT_FORMATS)}")
        if len(self.recurrence) != 4:
            raise UsageError("--recurrence", "expected four integers A1 A0 X0 X1")

        positive = {
            "--limit": self.sieve.limit,
            "--jobs": self.sieve.jobs,
            "--block-size": self.sieve.block_size,
            "--euler-bound": self.density.euler_bound,
            "--i-max": self.density.i_max,
            "--j-max": self.density.j_max,
            "--artin-j-max": self.density.artin_j_max,
            "--artin-prime-bound": self.density.artin_prime_bound,
        }
        for flag, value in positive.items():
            if value < 1:
                raise UsageError(flag, f"must be positive, got {value}")
        for flag, value in (
            ("--euler-bound", self.density.euler_bound),
            ("--artin-prime-bound", self.density.artin_prime_bound),
        ):
            if value < MIN_PRIME_BOUND:
                raise UsageError(flag, f"must be at least {MIN_PRIME_BOUND}, got {value}")
        if self.subcommand in ("sieve", "compare") and self.sieve.limit < 2:
            raise UsageError("--limit", "must be at least 2")

        if self.subcommand == "check":
            if self.prime is None:
                raise UsageError("--prime", "required for check")
            if not isprime(self.prime):
                raise UsageError("--prime", f"{self.prime} is not prime")
        if self.subcommand == "artin" and self.base is None:
            raise UsageError("--base", "required for artin")
        return self


def get_log_dir() -> Path:
    return Path(user_log_dir(APP_NAME, APP_AUTHOR))


def setup_logging(debug: bool = False, log_dir: Optional[Path] = None) -> None:
    """Configure the root logger with a rotating file and a stderr handler.

    The console only shows warnings unless debug is set, so reports on stdout
    stay clean. Safe to call multiple times.
    """
    log_dir = log_dir or get_log_dir()
    log_dir.mkdir(parents=True, exist_ok=True)
    log_file = log_dir / LOG_FILE_NAME

    level = logging.DEBUG if debug else logging.INFO
    formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    root = logging.getLogger()
    root.setLevel(level)

    # Remove existing handlers to support re-configuration
    for h in root.handlers[:]:
        root.removeHandler(h)
        h.close()

    file_handler = RotatingFileHandler(
        log_file, maxBytes=5 * 1024 * 1024, backupCount=3,
    )
    file_handler.setFormatter(formatter)
    root.addHandler(file_handler)

    stream_handler = logging.StreamHandler()
    stream_handler.setFormatter(formatter)
    stream_handler.setLevel(logging.DEBUG if debug else logging.WARNING)
    root.addHandler(stream_handler)
