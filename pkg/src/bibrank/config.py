"""Service configuration: TOML file, defaults, environment overrides."""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, fields
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import ConfigError

ENV_HOST = "BIBRANK_HOST"
ENV_PORT = "BIBRANK_PORT"


@dataclass
class ServiceConfig:
    """Knobs for the HTTP service and the recommenders."""

    corpus_path: str
    host: str = "127.0.0.1"
    port: int = 8000
    scope_limit: int = 500
    recommendation_k: int = 5
    expansion_boost: float = 1.0
    association_measure: str = "llr"
    stopword_path: str | None = None
    cors_origins: tuple[str, ...] = ("*",)

    def __post_init__(self):
        if self.recommendation_k < 1:
            raise ConfigError("recommendation_k must be >= 1")
        if self.scope_limit < 1:
            raise ConfigError("scope_limit must be >= 1")
        if self.association_measure not in ("llr", "dice"):
            raise ConfigError(
                f"association_measure must be 'llr' or 'dice', "
                f"got {self.association_measure!r}"
            )
        if not 1 <= self.port <= 65535:
            raise ConfigError(f"port must be in 1..65535, got {self.port}")
        self.cors_origins = tuple(self.cors_origins)


def load_config(path) -> ServiceConfig:
    """Read a TOML config file; BIBRANK_HOST/BIBRANK_PORT override host/port.

    Relative corpus/stopword paths are resolved against the config file's
    directory. Unknown keys are rejected.
    """
    path = Path(path)
    with open(path, "rb") as handle:
        data = tomllib.load(handle)
    known = {f.name for f in fields(ServiceConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown config key(s): {', '.join(unknown)}")
    if "corpus_path" not in data:
        raise ConfigError("config must set corpus_path")
    base = path.parent
    for key in ("corpus_path", "stopword_path"):
        if data.get(key):
            data[key] = str((base / data[key]).resolve())
    if "cors_origins" in data:
        data["cors_origins"] = tuple(data["cors_origins"])
    config = ServiceConfig(**data)
    if os.environ.get(ENV_HOST):
        config.host = os.environ[ENV_HOST]
    if os.environ.get(ENV_PORT):
        try:
            config.port = int(os.environ[ENV_PORT])
        except ValueError:
            raise ConfigError(f"{ENV_PORT} must be an integer") from None
    return config


def load_stopwords(path) -> frozenset[str]:
    """One lowercase stopword per line; blank lines and '#' comments skipped."""
    words = set()
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            word = line.strip().lower()
            if word and not word.startswith("#"):
                words.add(word)
    return frozenset(words)
