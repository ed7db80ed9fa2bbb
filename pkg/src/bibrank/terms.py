"""Search term recommendation from free-term/descriptor co-occurrence.

Associations are measured over the query's result set: for every candidate
descriptor a 2x2 contingency table against each query term is scored with
a signed log-likelihood ratio (or the Dice coefficient), and the strongest
link decides the candidate's rank.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .corpus import normalize_term
from .errors import EmptyScopeError
from .index import Index, Query, search


@dataclass(frozen=True)
class ContingencyTable:
    """2x2 co-occurrence counts over a document scope.

    n11: docs with both free term and descriptor; n10 term only;
    n01 descriptor only; n00 neither.
    """

    n11: int
    n10: int
    n01: int
    n00: int

    @property
    def n(self) -> int:
        return self.n11 + self.n10 + self.n01 + self.n00


@dataclass(frozen=True)
class Recommendation:
    """One suggested item; ``kind`` is "term", "journal", or "author"."""

    kind: str
    value: str
    score: float
    rank: int


def contingency(
    index: Index, scope: set[str], free_term: str, descriptor: str
) -> ContingencyTable:
    """Count co-occurrence of a free term and a descriptor within scope.

    "Contains the free term" means the token occurs in the record's
    title+abstract; "contains the descriptor" means normalized
    descriptor membership.
    """
    if not scope:
        raise EmptyScopeError("contingency scope must not be empty")
    term_docs = index.docs_with_token(free_term) & scope
    descriptor_docs = index.docs_with_descriptor(descriptor) & scope
    n11 = len(term_docs & descriptor_docs)
    n10 = len(term_docs) - n11
    n01 = len(descriptor_docs) - n11
    n00 = len(scope) - n11 - n10 - n01
    return ContingencyTable(n11=n11, n10=n10, n01=n01, n00=n00)


def llr(table: ContingencyTable) -> float:
    """Signed log-likelihood ratio statistic (G-squared) of the 2x2 table.

    Cells with zero observations contribute nothing; a table with a zero
    marginal carries no evidence and scores 0. The value is negated when
    the observed co-occurrence falls below its expectation, so negative
    association ranks below independence.
    """
    n = table.n
    if n == 0:
        return 0.0
    row1 = table.n11 + table.n10
    row0 = table.n01 + table.n00
    col1 = table.n11 + table.n01
    col0 = table.n10 + table.n00
    if min(row1, row0, col1, col0) == 0:
        return 0.0
    expected = (
        (table.n11, row1 * col1 / n),
        (table.n10, row1 * col0 / n),
        (table.n01, row0 * col1 / n),
        (table.n00, row0 * col0 / n),
    )
    g2 = 0.0
    for observed, expect in expected:
        if observed:
            g2 += observed * math.log(observed / expect)
    g2 *= 2.0
    return g2 if table.n11 >= row1 * col1 / n else -g2


def dice(table: ContingencyTable) -> float:
    """Dice coefficient 2*n11 / (2*n11 + n10 + n01)."""
    denominator = 2 * table.n11 + table.n10 + table.n01
    if denominator == 0:
        return 0.0
    return 2 * table.n11 / denominator


_MEASURES = {"llr": llr, "dice": dice}


def recommend_terms(
    index: Index,
    query: Query,
    k: int,
    *,
    scope_limit: int = 500,
    min_df_scope: int = 2,
    measure: str = "llr",
) -> list[Recommendation]:
    """Top-k controlled descriptors associated with the query's free terms.

    Candidates are descriptors appearing in at least ``min_df_scope`` of
    the query's top ``scope_limit`` documents, excluding descriptors that
    equal a query term after normalization. Each candidate scores the
    maximum association over the query terms; ties break on the
    descriptor value ascending. Fewer than k are returned when candidates
    run out.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    try:
        measure_fn = _MEASURES[measure]
    except KeyError:
        raise ValueError(f"unknown association measure {measure!r}") from None
    scope = set(search(index, query, scope_limit).ids())
    if not scope:
        return []
    scoped_df: Counter[str] = Counter()
    for record_id in scope:
        scoped_df.update(index.record_descriptors.get(record_id, frozenset()))
    excluded = {normalize_term(term) for term in query.free_terms}
    seen_terms: list[str] = []
    seen: set[str] = set()
    for term in query.free_terms:
        if term not in seen:
            seen.add(term)
            seen_terms.append(term)
    scored: list[tuple[str, float]] = []
    for descriptor, count in scoped_df.items():
        if count < min_df_scope or descriptor in excluded:
            continue
        best = max(
            measure_fn(contingency(index, scope, term, descriptor))
            for term in seen_terms
        )
        scored.append((index.descriptor_display[descriptor], best))
    scored.sort(key=lambda item: (-item[1], item[0]))
    return [
        Recommendation(kind="term", value=value, score=value_score, rank=rank)
        for rank, (value, value_score) in enumerate(scored[:k], start=1)
    ]
