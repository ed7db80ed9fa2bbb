"""Bibliographic corpus loading, validation, and text normalization."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterator

from .errors import CorpusError

_TOKEN_RE = re.compile(r"[^\W_]+")


def tokenize(text: str) -> list[str]:
    """Lowercased tokens, split on any non-alphanumeric character.

    Order and duplicates are preserved; empty tokens never occur.
    """
    return _TOKEN_RE.findall(text.lower())


def display_form(value: str) -> str:
    """Whitespace-collapsed value keeping the original casing."""
    return " ".join(value.split())


def normalize_author(name: str) -> str:
    """Canonical comparison key for an author name."""
    return " ".join(name.split()).casefold()


def normalize_term(term: str) -> str:
    """Canonical comparison key for a controlled descriptor."""
    return " ".join(term.split()).casefold()


@dataclass(frozen=True)
class BibRecord:
    """One bibliographic document.

    ``descriptors`` are controlled-vocabulary terms, ``authors`` are
    "Lastname, Firstname" strings; both are whitespace-collapsed and
    deduplicated case-insensitively at load time. ``year`` 0 means unknown.
    """

    id: str
    title: str = ""
    abstract: str = ""
    descriptors: tuple[str, ...] = ()
    authors: tuple[str, ...] = ()
    journal: str = ""
    year: int = 0

    @property
    def free_text(self) -> str:
        return self.title + " " + self.abstract


@dataclass
class Corpus:
    """Immutable in-memory record collection with id lookup."""

    records: tuple[BibRecord, ...]
    by_id: dict[str, BibRecord] = field(init=False, repr=False)

    def __post_init__(self):
        self.by_id = {record.id: record for record in self.records}

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[BibRecord]:
        return iter(self.records)


def _require_string(obj: dict, key: str, line: int | None) -> str:
    value = obj.get(key, "")
    if not isinstance(value, str):
        raise CorpusError(f"field {key!r} must be a string", line=line)
    return value.strip()


def _clean_name_list(obj: dict, key: str, line: int | None) -> tuple[str, ...]:
    value = obj.get(key, [])
    if not isinstance(value, list):
        raise CorpusError(f"field {key!r} must be a list of strings", line=line)
    cleaned: list[str] = []
    seen: set[str] = set()
    for item in value:
        if not isinstance(item, str):
            raise CorpusError(f"field {key!r} must contain only strings", line=line)
        display = display_form(item)
        if not display:
            continue
        key_form = display.casefold()
        if key_form in seen:
            continue
        seen.add(key_form)
        cleaned.append(display)
    return tuple(cleaned)


def record_from_dict(obj: dict, line: int | None = None) -> BibRecord:
    """Build a validated, normalized record; unknown fields are ignored."""
    record_id = obj.get("id")
    if not isinstance(record_id, str) or not record_id.strip():
        raise CorpusError("field 'id' must be a nonempty string", line=line)
    year = obj.get("year", 0)
    if isinstance(year, bool) or not isinstance(year, int):
        raise CorpusError("field 'year' must be an integer", line=line)
    if year < 0:
        raise CorpusError("field 'year' must be >= 0", line=line)
    return BibRecord(
        id=record_id.strip(),
        title=_require_string(obj, "title", line),
        abstract=_require_string(obj, "abstract", line),
        descriptors=_clean_name_list(obj, "descriptors", line),
        authors=_clean_name_list(obj, "authors", line),
        journal=_require_string(obj, "journal", line),
        year=year,
    )


def load_corpus(path) -> Corpus:
    """Load a JSON-Lines corpus file, one record object per line.

    Raises FileNotFoundError for a missing file and CorpusError (with the
    offending line number) for malformed lines, duplicate ids, or an
    empty corpus. Record order is preserved.
    """
    records: list[BibRecord] = []
    first_line_of: dict[str, int] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            if not raw.strip():
                continue
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"malformed JSON: {exc.msg}", line=lineno) from exc
            if not isinstance(obj, dict):
                raise CorpusError("record must be a JSON object", line=lineno)
            record = record_from_dict(obj, line=lineno)
            if record.id in first_line_of:
                raise CorpusError(
                    f"duplicate record id {record.id!r} (first seen on line "
                    f"{first_line_of[record.id]})",
                    line=lineno,
                )
            first_line_of[record.id] = lineno
            records.append(record)
    if not records:
        raise CorpusError("corpus contains no records")
    return Corpus(tuple(records))
