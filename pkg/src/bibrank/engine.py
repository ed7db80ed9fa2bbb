"""Core facade shared by the HTTP service and the CLI.

All computations live in the library modules; this layer only wires them
together and shapes JSON-ready payloads, so the CLI and the service cannot
drift apart.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from . import authors, journals, terms
from .config import ServiceConfig, load_stopwords
from .corpus import Corpus, load_corpus, tokenize
from .errors import InvalidQueryError
from .index import (
    BRADFORD,
    CENTRALITY,
    STRATEGIES,
    TFIDF,
    Query,
    build_index,
    expand_query,
    search,
)

DEFAULT_SEARCH_LIMIT = 10
RECOMMEND_KINDS = ("terms", "journals", "authors")
_KIND_SINGULAR = {"terms": "term", "journals": "journal", "authors": "author"}
MIN_DF_SCOPE = 2


def dump_json(payload) -> str:
    """Compact JSON used verbatim by both the service and the CLI."""
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


class Engine:
    """Loaded corpus + index + config, ready to answer queries."""

    def __init__(self, corpus: Corpus, config: ServiceConfig):
        self.corpus = corpus
        self.config = config
        self.stopwords = (
            load_stopwords(config.stopword_path)
            if config.stopword_path
            else frozenset()
        )
        self.index = build_index(corpus, stopwords=self.stopwords)

    @classmethod
    def from_config(cls, config: ServiceConfig) -> "Engine":
        return cls(load_corpus(config.corpus_path), config)

    @classmethod
    def open(cls, corpus_path, **overrides) -> "Engine":
        """Engine over a corpus file with default config knobs."""
        config = ServiceConfig(corpus_path=str(corpus_path), **overrides)
        return cls.from_config(config)

    def parse_query(self, q: str, expand: Iterable[str] = ()) -> Query:
        free_terms = tuple(t for t in tokenize(q) if t not in self.stopwords)
        if not free_terms:
            raise InvalidQueryError("query has no searchable terms")
        query = Query(
            free_terms=free_terms, expansion_boost=self.config.expansion_boost
        )
        expand = list(expand)
        if expand:
            query = expand_query(query, expand)
        return query

    def search_payload(
        self,
        q: str,
        rerank: str = TFIDF,
        expand: Sequence[str] = (),
        limit: int = DEFAULT_SEARCH_LIMIT,
    ) -> dict:
        """JSON-shaped search response; re-ranking runs over the full match set."""
        if rerank not in STRATEGIES:
            raise InvalidQueryError(
                f"unknown rerank {rerank!r}; valid values: {', '.join(STRATEGIES)}"
            )
        if limit < 1:
            raise InvalidQueryError("limit must be >= 1")
        query = self.parse_query(q, expand)
        full = search(self.index, query)
        result = full
        zones = None
        centrality = None
        if rerank == BRADFORD:
            partition = journals.bradford_partition(
                journals.journal_productivity(self.corpus, full)
            )
            result = journals.rerank_bradford(self.corpus, full, partition)
            zones = partition.zone_of
        elif rerank == CENTRALITY:
            scores = authors.betweenness(
                authors.build_coauthor_graph(self.corpus, full)
            )
            result = authors.rerank_centrality(self.corpus, full, scores)
            centrality = scores
        rows = []
        for record_id, entry_score in result.entries[:limit]:
            record = self.corpus.by_id[record_id]
            row = {
                "id": record.id,
                "title": record.title,
                "journal": record.journal,
                "authors": list(record.authors),
                "year": record.year,
                "score": entry_score,
            }
            if zones is not None:
                row["zone"] = zones.get(record.journal) if record.journal else None
            if centrality is not None:
                row["centrality_key"] = authors.doc_centrality_key(record, centrality)
            rows.append(row)
        return {
            "strategy": result.strategy,
            "total": len(full.entries),
            "results": rows,
        }

    def recommend_payload(self, kind: str, q: str, k: int | None = None) -> dict:
        """JSON-shaped recommendation response for one of the three kinds."""
        if kind not in RECOMMEND_KINDS:
            raise ValueError(
                f"unknown recommender {kind!r}; valid values: "
                f"{', '.join(RECOMMEND_KINDS)}"
            )
        if k is None:
            k = self.config.recommendation_k
        if k < 1:
            raise InvalidQueryError("k must be >= 1")
        query = self.parse_query(q)
        if kind == "terms":
            recommendations = terms.recommend_terms(
                self.index,
                query,
                k,
                scope_limit=self.config.scope_limit,
                min_df_scope=MIN_DF_SCOPE,
                measure=self.config.association_measure,
            )
        else:
            scope = search(self.index, query, self.config.scope_limit)
            if kind == "journals":
                recommendations = journals.recommend_journals(self.corpus, scope, k)
            else:
                recommendations = authors.recommend_authors(self.corpus, scope, k)
        return {
            "kind": _KIND_SINGULAR[kind],
            "recommendations": [
                {"value": r.value, "score": r.score, "rank": r.rank}
                for r in recommendations
            ],
        }
