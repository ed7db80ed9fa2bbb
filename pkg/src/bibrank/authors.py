"""Co-authorship graph, betweenness centrality, and author-based re-ranking.

The graph is built per query from the result set: every author is a node,
every pair of co-authors an undirected edge (multiplicity ignored).
Betweenness is computed exactly with Brandes' accumulation and normalized
by (n-1)(n-2)/2 over the whole graph, so scores live in [0, 1].
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable

from .corpus import BibRecord, Corpus, normalize_author
from .errors import RerankMismatchError
from .index import CENTRALITY, ResultSet
from .terms import Recommendation


@dataclass
class CoauthorGraph:
    """Undirected simple graph over canonical author keys.

    ``display`` maps each key to a display name (the lexicographically
    smallest observed form, so a permuted result set yields the identical
    graph). Isolated nodes are kept.
    """

    display: dict[str, str]
    adjacency: dict[str, tuple[str, ...]]

    @property
    def nodes(self) -> list[str]:
        return sorted(self.adjacency)

    def edges(self) -> set[tuple[str, str]]:
        return {
            (a, b)
            for a, neighbors in self.adjacency.items()
            for b in neighbors
            if a < b
        }

    @classmethod
    def from_edges(
        cls, nodes: Iterable[str], edges: Iterable[tuple[str, str]]
    ) -> "CoauthorGraph":
        neighbors: dict[str, set[str]] = {node: set() for node in nodes}
        for a, b in edges:
            if a == b:
                continue
            neighbors.setdefault(a, set()).add(b)
            neighbors.setdefault(b, set()).add(a)
        adjacency = {node: tuple(sorted(adj)) for node, adj in neighbors.items()}
        return cls(display={node: node for node in adjacency}, adjacency=adjacency)


@dataclass
class CentralityScores:
    """Normalized betweenness per graph node, all in [0, 1]."""

    score: dict[str, float]


def build_coauthor_graph(corpus: Corpus, result: ResultSet) -> CoauthorGraph:
    """Graph over all authors of the result documents; one edge per pair."""
    display: dict[str, str] = {}
    neighbors: dict[str, set[str]] = {}
    for record_id, _ in result.entries:
        record = corpus.by_id[record_id]
        keys = []
        for author in record.authors:
            key = normalize_author(author)
            shown = " ".join(author.split())
            if key not in display or shown < display[key]:
                display[key] = shown
            neighbors.setdefault(key, set())
            keys.append(key)
        for i in range(len(keys)):
            for j in range(i + 1, len(keys)):
                if keys[i] != keys[j]:
                    neighbors[keys[i]].add(keys[j])
                    neighbors[keys[j]].add(keys[i])
    adjacency = {key: tuple(sorted(adj)) for key, adj in neighbors.items()}
    return CoauthorGraph(display=display, adjacency=adjacency)


def betweenness(graph: CoauthorGraph) -> CentralityScores:
    """Exact betweenness via Brandes' algorithm on unweighted edges.

    Raw values count unordered pairs; normalization divides by
    (n-1)(n-2)/2 with n the full node count. Graphs with fewer than three
    nodes score 0 everywhere.
    """
    nodes = sorted(graph.adjacency)
    n = len(nodes)
    if n < 3:
        return CentralityScores(score={node: 0.0 for node in nodes})
    raw = {node: 0.0 for node in nodes}
    for source in nodes:
        stack: list[str] = []
        predecessors: dict[str, list[str]] = {node: [] for node in nodes}
        sigma = {node: 0 for node in nodes}
        distance = {node: -1 for node in nodes}
        sigma[source] = 1
        distance[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in graph.adjacency[v]:
                if distance[w] < 0:
                    distance[w] = distance[v] + 1
                    queue.append(w)
                if distance[w] == distance[v] + 1:
                    sigma[w] += sigma[v]
                    predecessors[w].append(v)
        delta = {node: 0.0 for node in nodes}
        while stack:
            w = stack.pop()
            for v in predecessors[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != source:
                raw[w] += delta[w]
    # Brandes over all sources counts each unordered pair twice.
    normalization = (n - 1) * (n - 2) / 2
    return CentralityScores(
        score={node: raw[node] / 2.0 / normalization for node in nodes}
    )


def doc_centrality_key(record: BibRecord, scores: CentralityScores) -> float:
    """Max betweenness over the record's authors; 0 for authorless records.

    Raises when an author is missing from the scores (graph/result mismatch).
    """
    best = 0.0
    for author in record.authors:
        key = normalize_author(author)
        if key not in scores.score:
            raise RerankMismatchError(f"author {author!r} missing from scores")
        best = max(best, scores.score[key])
    return best


def recommend_authors(
    corpus: Corpus, result: ResultSet, k: int
) -> list[Recommendation]:
    """Top-k authors by betweenness, ties by display name ascending.

    When every score is zero (e.g. no co-authorships at all), ordering
    falls back to the number of result documents authored.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    graph = build_coauthor_graph(corpus, result)
    if not graph.adjacency:
        return []
    scores = betweenness(graph)
    if any(value > 0.0 for value in scores.score.values()):
        ordered = sorted(
            scores.score, key=lambda key: (-scores.score[key], graph.display[key])
        )
    else:
        authored: Counter[str] = Counter()
        for record_id, _ in result.entries:
            for author in corpus.by_id[record_id].authors:
                authored[normalize_author(author)] += 1
        ordered = sorted(
            scores.score, key=lambda key: (-authored[key], graph.display[key])
        )
    return [
        Recommendation(
            kind="author",
            value=graph.display[key],
            score=scores.score[key],
            rank=rank,
        )
        for rank, key in enumerate(ordered[:k], start=1)
    ]


def rerank_centrality(
    corpus: Corpus, result: ResultSet, scores: CentralityScores
) -> ResultSet:
    """Reorder by (author-centrality key desc, original score desc, id asc).

    The scores must come from this result's graph; scores are carried
    over unchanged and the output is a permutation of the input.
    """
    keyed = []
    for record_id, entry_score in result.entries:
        key = doc_centrality_key(corpus.by_id[record_id], scores)
        keyed.append((-key, -entry_score, record_id, entry_score))
    keyed.sort(key=lambda item: item[:3])
    entries = [(record_id, entry_score) for _, _, record_id, entry_score in keyed]
    return ResultSet(entries=entries, strategy=CENTRALITY, query=result.query)
