"""Loader for TOML documents held in memory."""

from typing import override

from .base import DocumentLoaderBase, T


class TextLoader(DocumentLoaderBase[T]):
    text: str

    @override
    def read(self) -> str:
        return self.text
