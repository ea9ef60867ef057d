"""Base loader: read raw data from a source and validate it as ``T``."""

import logging
import tomllib
from abc import ABC, abstractmethod
from functools import cache, cached_property
from typing import Any, TypeVar, override

from generic_preserver.wrapper import generic_preserver
from pydantic import BaseModel, TypeAdapter, ValidationError

from ...errors import ConfigError

logger = logging.getLogger(__name__)

T = TypeVar("T")


@cache
def cached_type_adapter(_type: object) -> TypeAdapter:
    return TypeAdapter(_type)


def config_error(error: ValidationError) -> ConfigError:
    """First validation failure as a ``ConfigError`` naming its dotted key."""
    first = error.errors()[0]
    key = ".".join(str(part) for part in first["loc"]) or None
    return ConfigError(f"{key or 'document'}: {first['msg']}", key=key)


@generic_preserver
class LoaderBase[T](BaseModel, ABC):
    """Base class for all configuration loaders."""

    @abstractmethod
    def load_raw(self) -> Any:
        """Load the raw data before validation."""
        ...

    def load(self) -> T:
        """Load and validate, wrapping every failure in ``ConfigError``."""
        try:
            data = self.load_raw()
        except Exception as e:
            raise ConfigError(f"Error loading `{repr(self.type)}`: {e}") from e
        try:
            return self.type_adaptor.validate_python(data)
        except ValidationError as e:
            raise config_error(e) from e

    @cached_property
    def type(self) -> type[T]:
        return self[T]

    @cached_property
    def type_adaptor(self) -> TypeAdapter:
        return cached_type_adapter(self.type)


class DocumentLoaderBase(LoaderBase[T], ABC):
    """Loaders whose raw data is a TOML document."""

    @abstractmethod
    def read(self) -> str: ...

    @override
    def load_raw(self) -> Any:
        text = self.read()
        logger.debug(f"Parsing {len(text)} characters of TOML for {self.type!r}")
        return tomllib.loads(text)
