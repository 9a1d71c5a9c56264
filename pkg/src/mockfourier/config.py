"""Flat ``key = value`` experiment configs.

Example::

    # Jorgensen-Pedersen Cantor measure
    R = 4
    B = 0,2
    L = 0,17
    depth = 22
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional

from .cycles import HadamardPair, check_hadamard
from .errors import ValidationError
from .ifs import IfsSystem, validate_system


class ConfigError(ValidationError):
    pass


def parse_ints(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.replace(";", ",").split(",") if p.strip()]
    return tuple(int(p) for p in parts)


_CONVERTERS = {
    "R": int,
    "B": parse_ints,
    "L": parse_ints,
    "backend": str,
    "depth": int,
    "orbit_length": int,
    "burn_in": int,
    "seed": int,
    "n": int,
    "margin": int,
    "out": str,
    "format": str,
}
_ALIASES = {"orbit": "orbit_length", "n_max": "n", "burn-in": "burn_in"}


@dataclass(frozen=True)
class ExperimentConfig:
    R: Optional[int] = None
    B: Optional[tuple[int, ...]] = None
    L: Optional[tuple[int, ...]] = None
    backend: str = "word"
    depth: Optional[int] = None
    orbit_length: int = 10**6
    burn_in: int = 1000
    seed: int = 0
    n: Optional[int] = None
    margin: int = 6
    out: Optional[str] = None
    format: str = "csv"

    def __post_init__(self):
        if self.backend not in ("word", "elton"):
            raise ConfigError(f"backend: expected 'word' or 'elton', got {self.backend!r}")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"format: expected 'csv' or 'json', got {self.format!r}")

    def merged(self, **overrides) -> "ExperimentConfig":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def system(self) -> IfsSystem:
        if self.R is None or self.B is None:
            raise ConfigError("R and B are required")
        return validate_system(self.R, self.B)

    def pair(self) -> HadamardPair:
        if self.L is None:
            raise ConfigError("L is required")
        return check_hadamard(self.system(), self.L)

    def items(self):
        return [(f.name, getattr(self, f.name)) for f in fields(self)]


def parse_config_text(text: str, source: str = "<config>") -> dict:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        key = _ALIASES.get(key, key)
        if key not in _CONVERTERS:
            raise ConfigError(f"{source}:{lineno}: unknown field {key!r}")
        try:
            values[key] = _CONVERTERS[key](value)
        except ValueError:
            raise ConfigError(f"{source}:{lineno}: field {key!r}: cannot parse {value!r}") from None
    return values


def load_config(path) -> ExperimentConfig:
    path = Path(path)
    return ExperimentConfig(**parse_config_text(path.read_text(), str(path)))
