"""Exception types shared across the engine."""

from __future__ import annotations

from typing import Sequence


class BibrankError(Exception):
    """Base class for all engine errors."""


class CorpusError(BibrankError):
    """Corpus file cannot be parsed or fails validation."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConfigError(BibrankError):
    """Service configuration file is missing keys or holds invalid values."""


class InvalidQueryError(BibrankError):
    """Request cannot be turned into a searchable query."""


class UnknownRecordError(BibrankError):
    """Record id not present in the index."""


class EmptyScopeError(BibrankError):
    """Co-occurrence statistics requested over an empty document scope."""


class RerankMismatchError(BibrankError):
    """Re-rank input refers to journals/authors absent from the partition or scores."""


class AssessmentError(BibrankError):
    """Assessment CSV cannot be parsed or fails validation.

    Carries one message per offending row/group so callers can report
    them all at once.
    """

    def __init__(self, messages: Sequence[str] | str):
        if isinstance(messages, str):
            messages = [messages]
        self.messages = tuple(messages)
        super().__init__("; ".join(self.messages))


class UndefinedPrecisionError(BibrankError):
    """Precision requested over zero assessments."""
