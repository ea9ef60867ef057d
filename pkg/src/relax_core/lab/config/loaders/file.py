"""Loader for TOML documents on disk."""

from pathlib import Path
from typing import override

from .base import DocumentLoaderBase, T


class FileLoader(DocumentLoaderBase[T]):
    """Read the document at ``path``; relative ``file:`` profiles resolve against the current directory."""

    path: Path

    @override
    def read(self) -> str:
        return self.path.read_text(encoding="utf-8")
