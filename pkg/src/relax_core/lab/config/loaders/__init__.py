"""Configuration loaders."""

from .base import DocumentLoaderBase, LoaderBase, cached_type_adapter, config_error
from .file import FileLoader
from .text import TextLoader

__all__ = [
    DocumentLoaderBase,
    FileLoader,
    LoaderBase,
    TextLoader,
    cached_type_adapter,
    config_error,
]
