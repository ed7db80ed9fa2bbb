"""Journal productivity, Bradford zoning, and journal-based re-ranking.

The result set's journals are ordered by how many of its documents they
published; walking that order, the document count is cut into thirds to
form zones 1-3 (whole journals only). Documents from zone-1 ("core")
journals are promoted ahead of later zones.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .corpus import Corpus
from .errors import RerankMismatchError
from .index import BRADFORD, ResultSet
from .terms import Recommendation


@dataclass
class BradfordPartition:
    """Journals ordered by productivity with their zone assignment.

    ``zone_doc_counts`` are the document totals of zones 1, 2, 3 and sum
    to the number of result documents that carry a journal.
    """

    journals: list[tuple[str, int]]
    zone_of: dict[str, int]
    zone_doc_counts: tuple[int, int, int]


def journal_productivity(corpus: Corpus, result: ResultSet) -> list[tuple[str, int]]:
    """Documents per journal within the result set, count desc, name asc.

    Records without a journal are not counted.
    """
    counts: Counter[str] = Counter()
    for record_id, _ in result.entries:
        journal = corpus.by_id[record_id].journal
        if journal:
            counts[journal] += 1
    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))


def bradford_partition(productivity: list[tuple[str, int]]) -> BradfordPartition:
    """Cut the ordered journal list into three zones of equal document yield.

    A journal lands in zone 1 while the cumulative count before it is
    below M/3, zone 2 below 2M/3, zone 3 otherwise; journals are never
    split across zones.
    """
    total = sum(count for _, count in productivity)
    zone_of: dict[str, int] = {}
    zone_counts = [0, 0, 0]
    cumulative = 0
    for journal, count in productivity:
        if 3 * cumulative < total:
            zone = 1
        elif 3 * cumulative < 2 * total:
            zone = 2
        else:
            zone = 3
        zone_of[journal] = zone
        zone_counts[zone - 1] += count
        cumulative += count
    return BradfordPartition(
        journals=list(productivity),
        zone_of=zone_of,
        zone_doc_counts=(zone_counts[0], zone_counts[1], zone_counts[2]),
    )


def rerank_bradford(
    corpus: Corpus, result: ResultSet, partition: BradfordPartition
) -> ResultSet:
    """Reorder by (zone asc, original score desc, id asc); scores unchanged.

    Documents without a journal follow zone 3, keeping their relative
    tf-idf order. The partition must have been built from this result.
    """
    past_zones = 4  # slot after zone 3 for journal-less documents
    keyed = []
    for record_id, entry_score in result.entries:
        journal = corpus.by_id[record_id].journal
        if journal:
            zone = partition.zone_of.get(journal)
            if zone is None:
                raise RerankMismatchError(
                    f"journal {journal!r} missing from partition"
                )
        else:
            zone = past_zones
        keyed.append((zone, -entry_score, record_id, entry_score))
    keyed.sort(key=lambda item: item[:3])
    entries = [(record_id, entry_score) for _, _, record_id, entry_score in keyed]
    return ResultSet(entries=entries, strategy=BRADFORD, query=result.query)


def recommend_journals(
    corpus: Corpus, result: ResultSet, k: int
) -> list[Recommendation]:
    """Top-k journals by productivity; score is the document count."""
    if k < 1:
        raise ValueError("k must be >= 1")
    productivity = journal_productivity(corpus, result)
    return [
        Recommendation(kind="journal", value=journal, score=float(count), rank=rank)
        for rank, (journal, count) in enumerate(productivity[:k], start=1)
    ]
