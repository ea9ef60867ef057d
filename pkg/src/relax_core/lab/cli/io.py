"""Output directories guarded by the configuration hash, plus CSV and JSON writers."""

import csv
import json
import logging
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

from deepdiff import DeepDiff
from pydantic import BaseModel, ConfigDict

from ..config import RelaxConfig, canonical_config, config_hash
from ..errors import ConfigError

logger = logging.getLogger(__name__)

MANIFEST = "manifest.json"


def dump_json(payload: Any) -> str:
    """Deterministic JSON text: sorted keys, fixed indentation and a trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, allow_nan=True) + "\n"


def emit(payload: Any) -> None:
    """Machine-readable result on stdout; logs stay on stderr."""
    sys.stdout.write(dump_json(payload))
    sys.stdout.flush()


class OutputDirectory(BaseModel):
    """Directory owned by one configuration.

    A ``manifest.json`` records the hash and canonical dump of the configuration that
    produced the files. Writing with a different configuration is refused unless forced.
    """

    model_config = ConfigDict(frozen=True)

    root: Path
    config_hash: str
    config: dict[str, Any]
    force: bool = False

    @classmethod
    def for_config(cls, root: Path, config: RelaxConfig, force: bool = False) -> "OutputDirectory":
        return cls(root=root, config_hash=config_hash(config), config=canonical_config(config), force=force)

    def prepare(self) -> None:
        manifest = self.root / MANIFEST
        if manifest.exists():
            stored = json.loads(manifest.read_text(encoding="utf-8"))
            if stored.get("config_hash") != self.config_hash:
                diff = DeepDiff(stored.get("config", {}), self.config, ignore_order=True)
                if not self.force:
                    raise ConfigError(
                        f"{str(self.root)!r} holds outputs of another configuration "
                        f"(hash {stored.get('config_hash')!r}); changes: {diff.to_json()}",
                        key="config_hash",
                    )
                logger.warning(f"Overwriting outputs of configuration {stored.get('config_hash')!r}")
        self.root.mkdir(parents=True, exist_ok=True)
        self.write_json(MANIFEST, {"config_hash": self.config_hash, "config": self.config})

    def path(self, name: str) -> Path:
        return self.root / name

    def write_json(self, name: str, payload: Any) -> Path:
        target = self.path(name)
        target.write_text(dump_json(payload), encoding="utf-8")
        return target

    def write_csv(self, name: str, columns: Sequence[str], rows: Iterable[Sequence[str]]) -> Path:
        target = self.path(name)
        with target.open("w", encoding="utf-8", newline="") as stream:
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(columns)
            writer.writerows(rows)
        logger.debug(f"Wrote {str(target)!r}")
        return target
