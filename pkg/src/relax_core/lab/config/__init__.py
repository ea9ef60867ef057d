"""Run configuration: TOML documents, validated sections and runtime settings."""

from .loaders import FileLoader, LoaderBase, TextLoader
from .parse import canonical_config, canonical_json, config_hash, load_config, parse_config
from .schema import GridSection, ParamsSection, RelaxConfig, RunSection
from .settings import RuntimeSettings

__all__ = [
    FileLoader,
    GridSection,
    LoaderBase,
    ParamsSection,
    RelaxConfig,
    RunSection,
    RuntimeSettings,
    TextLoader,
    canonical_config,
    canonical_json,
    config_hash,
    load_config,
    parse_config,
]
