"""
Configuration

Environment-driven settings and the search bounds used by the explorer.
Values come from the process environment, optionally seeded from a ``.env``
file in the working directory.

Environment variables:
- EHRK_THREADS: worker process cap for parallel sweeps (default: CPU count)
- EHRK_FULL_SCALE: when truthy, sweeps default to the large published ranges
- EHRK_LOG_LEVEL: logging level name for the CLI (default: WARNING)
"""

import logging
import os
from dataclasses import asdict, dataclass

from dotenv import load_dotenv

from .errors import ConfigError

load_dotenv()

_TRUTHY = {"1", "true", "yes", "on"}
_FALSY = {"", "0", "false", "no", "off"}


def get_thread_count() -> int:
    """
    Worker count for parallel sweeps.

    Returns:
        EHRK_THREADS if set, otherwise os.cpu_count() (at least 1).

    Raises:
        ConfigError: If EHRK_THREADS is not a positive integer.
    """
    raw = os.environ.get("EHRK_THREADS")
    if raw is None or not raw.strip():
        return max(1, os.cpu_count() or 1)
    try:
        threads = int(raw)
    except ValueError:
        raise ConfigError(
            f"EHRK_THREADS must be a positive integer, got {raw!r}."
        ) from None
    if threads < 1:
        raise ConfigError(f"EHRK_THREADS must be a positive integer, got {threads}.")
    return threads


def is_full_scale() -> bool:
    """Whether EHRK_FULL_SCALE asks for the published search ranges."""
    raw = os.environ.get("EHRK_FULL_SCALE", "").strip().lower()
    if raw in _TRUTHY:
        return True
    if raw in _FALSY:
        return False
    raise ConfigError(
        f"EHRK_FULL_SCALE must be one of {sorted(_TRUTHY | _FALSY - {''})}, got {raw!r}."
    )


def get_log_level() -> int:
    """Logging level from EHRK_LOG_LEVEL (default WARNING)."""
    name = os.environ.get("EHRK_LOG_LEVEL", "WARNING").strip().upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ConfigError(f"EHRK_LOG_LEVEL must be a logging level name, got {name!r}.")
    return level


@dataclass(frozen=True)
class SearchBounds:
    """Inclusive upper bounds for every sweep the explorer runs."""

    # Two-support search (exception table reproduction)
    r_max: int
    x_max: int

    # r = (2, 2k-1) classification sweep
    k_max: int
    c_max: int

    # Fibonacci suite
    n_max: int

    # Three-support search over pairwise coprime s
    s_max: int
    s_x_max: int

    # Family theorem instances
    family_a_max: int
    family_k_max: int
    family_c_max: int
    family_532_c_max: int

    # Ehrhart positivity sweep
    positivity_r_max: int
    positivity_x_max: int

    # h* = (1 + ... + z^(ell-1)) g identity sweep
    identity_r_max: int
    identity_x_max: int

    @classmethod
    def desk(cls) -> "SearchBounds":
        """Bounds that finish in minutes on a laptop."""
        return cls(
            r_max=20,
            x_max=60,
            k_max=10,
            c_max=12,
            n_max=5,
            s_max=7,
            s_x_max=25,
            family_a_max=6,
            family_k_max=4,
            family_c_max=5,
            family_532_c_max=4,
            positivity_r_max=8,
            positivity_x_max=10,
            identity_r_max=12,
            identity_x_max=30,
        )

    @classmethod
    def full_scale(cls) -> "SearchBounds":
        """The ranges of the published experiments."""
        return cls(
            r_max=40,
            x_max=100,
            k_max=10,
            c_max=12,
            n_max=7,
            s_max=11,
            s_x_max=50,
            family_a_max=6,
            family_k_max=4,
            family_c_max=5,
            family_532_c_max=4,
            positivity_r_max=15,
            positivity_x_max=24,
            identity_r_max=20,
            identity_x_max=60,
        )

    @classmethod
    def from_env(cls) -> "SearchBounds":
        """Desk bounds, or full-scale bounds when EHRK_FULL_SCALE is set."""
        return cls.full_scale() if is_full_scale() else cls.desk()

    def to_dict(self) -> dict:
        """Convert bounds to dictionary."""
        return asdict(self)
