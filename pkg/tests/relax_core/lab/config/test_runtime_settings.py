import os
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from relax_core.lab.config import RuntimeSettings


def test_defaults():
    settings = RuntimeSettings()

    assert settings.threads == 1
    assert settings.log_level == "WARNING"


@pytest.mark.parametrize(
    "env_overrides, threads, log_level",
    [
        ({"RELAX_THREADS": "4"}, 4, "WARNING"),
        ({"RELAX_LOG_LEVEL": "DEBUG"}, 1, "DEBUG"),
        ({"RELAX_THREADS": "2", "RELAX_LOG_LEVEL": "INFO", "RELAX_UNRELATED": "x"}, 2, "INFO"),
    ],
)
def test_environment_overrides(env_overrides, threads, log_level):
    with patch.dict(os.environ, env_overrides, clear=False):
        settings = RuntimeSettings()

    assert settings.threads == threads
    assert settings.log_level == log_level


@pytest.mark.parametrize("env_overrides", [{"RELAX_THREADS": "0"}, {"RELAX_LOG_LEVEL": "LOUD"}])
def test_invalid_environment(env_overrides):
    with patch.dict(os.environ, env_overrides, clear=False), pytest.raises(ValidationError):
        RuntimeSettings()
