"""Error taxonomy shared by the library and the CLI.

The CLI maps each category to a fixed exit code: input errors exit 2,
configuration errors exit 3, output errors exit 4.
"""

from __future__ import annotations

__all__ = ["TopicMineError", "InputError", "ConfigurationError", "OutputError"]


class TopicMineError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TopicMineError):
    """A supplied document, directory or manifest is missing or unusable."""

    exit_code = 2


class ConfigurationError(TopicMineError):
    """A setting, vocabulary file or stop-word file violates its contract."""

    exit_code = 3


class OutputError(TopicMineError):
    """A result file could not be written."""

    exit_code = 4
