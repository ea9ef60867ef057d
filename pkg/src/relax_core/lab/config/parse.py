"""Entry points turning TOML documents into ``RelaxConfig``."""

import hashlib
import json
from pathlib import Path

from .loaders import FileLoader, TextLoader
from .schema import RelaxConfig


def parse_config(text: str) -> RelaxConfig:
    """Validate a TOML document; failures raise ``ConfigError`` naming the offending key."""
    return TextLoader[RelaxConfig](text=text).load()


def load_config(path: Path) -> RelaxConfig:
    return FileLoader[RelaxConfig](path=path).load()


def canonical_config(config: RelaxConfig) -> dict:
    return json.loads(canonical_json(config))


def canonical_json(config: RelaxConfig) -> str:
    return json.dumps(config.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))


def config_hash(config: RelaxConfig) -> str:
    """SHA-256 of the canonical JSON dump, recorded in every output."""
    return hashlib.sha256(canonical_json(config).encode()).hexdigest()
