"""Inverted index with tf-idf scoring and controlled-vocabulary query expansion."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, replace
from typing import Iterable

from .corpus import Corpus, normalize_term, tokenize
from .errors import InvalidQueryError, UnknownRecordError

TFIDF = "tfidf"
BRADFORD = "bradford"
CENTRALITY = "centrality"
STRATEGIES = (TFIDF, BRADFORD, CENTRALITY)


@dataclass(frozen=True)
class Query:
    """Free-text tokens plus optional controlled expansion terms.

    Each expansion term that matches a record's descriptors adds
    ``expansion_boost`` to that record's score.
    """

    free_terms: tuple[str, ...]
    expansion_terms: tuple[str, ...] = ()
    expansion_boost: float = 1.0


@dataclass
class ResultSet:
    """Ordered (record id, score) pairs tagged with the ranking strategy.

    Entries are sorted by score descending, ties broken by id ascending;
    re-ranking strategies substitute their own total order but keep the
    original tf-idf scores.
    """

    entries: list[tuple[str, float]]
    strategy: str
    query: Query

    def ids(self) -> list[str]:
        return [record_id for record_id, _ in self.entries]


class Index:
    """Token postings over title+abstract plus descriptor membership.

    Immutable after construction; safe for concurrent reads.
    """

    def __init__(self, corpus: Corpus, stopwords: Iterable[str] | None = None):
        stop = frozenset(stopwords or ())
        self.doc_count = len(corpus)
        self.ids: tuple[str, ...] = tuple(record.id for record in corpus)
        self._id_set = frozenset(self.ids)
        # token -> {record id -> term frequency}, record ids in corpus order
        self.postings: dict[str, dict[str, int]] = {}
        # normalized descriptor -> record ids in corpus order
        self.descriptor_postings: dict[str, list[str]] = {}
        # normalized descriptor -> first-seen display form
        self.descriptor_display: dict[str, str] = {}
        self.record_descriptors: dict[str, frozenset[str]] = {}
        for record in corpus:
            counts = Counter(t for t in tokenize(record.free_text) if t not in stop)
            for token, tf in counts.items():
                self.postings.setdefault(token, {})[record.id] = tf
            normalized = []
            for descriptor in record.descriptors:
                key = normalize_term(descriptor)
                self.descriptor_display.setdefault(key, descriptor)
                self.descriptor_postings.setdefault(key, []).append(record.id)
                normalized.append(key)
            self.record_descriptors[record.id] = frozenset(normalized)

    @property
    def df(self) -> dict[str, int]:
        """Document frequency per token (derived from postings)."""
        return {token: len(per_doc) for token, per_doc in self.postings.items()}

    def docs_with_token(self, token: str) -> set[str]:
        return set(self.postings.get(token, ()))

    def docs_with_descriptor(self, descriptor: str) -> set[str]:
        return set(self.descriptor_postings.get(normalize_term(descriptor), ()))

    def __contains__(self, record_id: str) -> bool:
        return record_id in self._id_set


def build_index(corpus: Corpus, stopwords: Iterable[str] | None = None) -> Index:
    """Index the corpus; an optional stopword set filters free-text tokens."""
    return Index(corpus, stopwords=stopwords)


def score(index: Index, query: Query, record_id: str) -> float:
    """tf-idf score of one record for the query.

    Sum over free terms of tf * ln(N/df), plus expansion_boost per
    expansion term present in the record's descriptors. Unseen terms
    contribute 0.
    """
    if record_id not in index:
        raise UnknownRecordError(f"unknown record id {record_id!r}")
    total = 0.0
    for term in query.free_terms:
        per_doc = index.postings.get(term)
        if not per_doc:
            continue
        tf = per_doc.get(record_id, 0)
        if tf:
            total += tf * math.log(index.doc_count / len(per_doc))
    if query.expansion_terms:
        descriptors = index.record_descriptors.get(record_id, frozenset())
        matched = sum(
            1 for term in query.expansion_terms if normalize_term(term) in descriptors
        )
        total += query.expansion_boost * matched
    return total


def search(index: Index, query: Query, limit: int | None = None) -> ResultSet:
    """All records scoring > 0, ordered (score desc, id asc), truncated to limit.

    ``limit=None`` returns every match.
    """
    if not query.free_terms:
        raise InvalidQueryError("query has no searchable terms")
    scores: dict[str, float] = {}
    for term in query.free_terms:
        per_doc = index.postings.get(term)
        if not per_doc:
            continue
        idf = math.log(index.doc_count / len(per_doc))
        if idf == 0.0:
            continue
        for record_id, tf in per_doc.items():
            scores[record_id] = scores.get(record_id, 0.0) + tf * idf
    for term in query.expansion_terms:
        posted = index.descriptor_postings.get(normalize_term(term))
        if not posted:
            continue
        for record_id in posted:
            scores[record_id] = scores.get(record_id, 0.0) + query.expansion_boost
    entries = [(record_id, s) for record_id, s in scores.items() if s > 0.0]
    entries.sort(key=lambda entry: (-entry[1], entry[0]))
    if limit is not None:
        entries = entries[:limit]
    return ResultSet(entries=entries, strategy=TFIDF, query=query)


def expand_query(query: Query, terms: Iterable[str]) -> Query:
    """Union new expansion terms into the query, deduplicated by normalized form.

    Order of first appearance is kept; free terms are untouched.
    """
    seen = {normalize_term(t) for t in query.expansion_terms}
    merged = list(query.expansion_terms)
    for term in terms:
        key = normalize_term(term)
        if not key or key in seen:
            continue
        seen.add(key)
        merged.append(" ".join(term.split()))
    return replace(query, expansion_terms=tuple(merged))
