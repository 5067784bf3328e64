"""Run configuration: defaults, TOML loading and validation."""

# src/circlespace/config.py
import copy
import os
from dataclasses import dataclass, fields
from fractions import Fraction

import toml

from .errors import ConfigError
from .logger import logger

FORMATS = ("csv", "json", "table")

DEFAULT_CONFIG = {
    "alpha": 7.2973525693e-3,
    "mass_ev": 510998.9461,
    "tol": 1e-12,
    "seed": 42,
    "format": "csv",
    "max_n_theta": 3,
    "max_n_r": 3,
}


def parse_real(text: str | float | int) -> float:
    """Parse a real number, accepting exact fractions such as ``1/137``."""
    if isinstance(text, (int, float)):
        return float(text)
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f"Not a real number: {text!r}") from e


@dataclass(frozen=True)
class RunConfig:
    """Validated settings shared by every CLI command."""

    alpha: float = DEFAULT_CONFIG["alpha"]
    mass_ev: float = DEFAULT_CONFIG["mass_ev"]
    tol: float = DEFAULT_CONFIG["tol"]
    seed: int = DEFAULT_CONFIG["seed"]
    format: str = DEFAULT_CONFIG["format"]
    max_n_theta: int = DEFAULT_CONFIG["max_n_theta"]
    max_n_r: int = DEFAULT_CONFIG["max_n_r"]

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ConfigError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not self.mass_ev > 0.0:
            raise ConfigError(f"mass_ev must be positive, got {self.mass_ev}")
        if not self.tol > 0.0:
            raise ConfigError(f"tol must be positive, got {self.tol}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")

    @classmethod
    def from_mapping(cls, values: dict) -> "RunConfig":
        """Build a config from a merged settings dict, ignoring unknown keys."""
        known = {f.name for f in fields(cls)}
        kwargs = {k: v for k, v in values.items() if k in known and v is not None}
        for key in ("alpha", "mass_ev", "tol"):
            if key in kwargs:
                kwargs[key] = parse_real(kwargs[key])
        for key in ("seed", "max_n_theta", "max_n_r"):
            if key in kwargs:
                kwargs[key] = int(kwargs[key])
        return cls(**kwargs)


def _read_section(path: str) -> dict:
    data = toml.load(path)
    if os.path.basename(path) == "pyproject.toml":
        return data.get("tool", {}).get("circlespace", {})
    return data.get("circlespace", {})


def load_config(path: str | None = None) -> dict:
    """
    Load user configuration from circlespace.toml (or [tool.circlespace] in pyproject.toml).
    Merge with defaults.
    """
    config = copy.deepcopy(DEFAULT_CONFIG)
    candidates = [path] if path else [os.getenv("CIRCLESPACE_CONFIG"), "circlespace.toml", "pyproject.toml"]

    if path and not os.path.exists(path):
        logger.warning("Configuration file %s not found, using defaults", path)

    for candidate in candidates:
        if not candidate or not os.path.exists(candidate):
            continue
        try:
            config.update(_read_section(candidate))
            logger.debug("Loaded configuration from %s", candidate)
        except (toml.TomlDecodeError, OSError) as e:
            logger.warning("Ignoring unreadable configuration %s: %s", candidate, e)
        break

    return config
