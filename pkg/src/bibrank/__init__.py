"""Bibliometric-enhanced scholarly retrieval.

Free-text tf-idf search over bibliographic records plus three
topic-specific recommenders (controlled search terms, core journals,
central authors), result re-ranking by journal coreness or author
centrality, and a precision evaluation harness.
"""

from .authors import (
    CentralityScores,
    CoauthorGraph,
    betweenness,
    build_coauthor_graph,
    recommend_authors,
    rerank_centrality,
)
from .config import ServiceConfig, load_config
from .corpus import (
    BibRecord,
    Corpus,
    load_corpus,
    normalize_author,
    normalize_term,
    tokenize,
)
from .engine import Engine
from .errors import (
    AssessmentError,
    BibrankError,
    ConfigError,
    CorpusError,
    EmptyScopeError,
    InvalidQueryError,
    RerankMismatchError,
    UndefinedPrecisionError,
    UnknownRecordError,
)
from .evaluation import (
    Assessment,
    AssessmentSet,
    MetricsReport,
    load_assessments,
    p_at_k,
    parse_assessments,
    render_report,
    report,
    topic_precision,
)
from .index import Index, Query, ResultSet, build_index, expand_query, score, search
from .journals import (
    BradfordPartition,
    bradford_partition,
    journal_productivity,
    recommend_journals,
    rerank_bradford,
)
from .terms import ContingencyTable, Recommendation, contingency, dice, llr, recommend_terms

__version__ = "0.1.0"

__all__ = [
    "Assessment",
    "AssessmentError",
    "AssessmentSet",
    "BibRecord",
    "BibrankError",
    "BradfordPartition",
    "CentralityScores",
    "CoauthorGraph",
    "ConfigError",
    "ContingencyTable",
    "Corpus",
    "CorpusError",
    "EmptyScopeError",
    "Engine",
    "Index",
    "InvalidQueryError",
    "MetricsReport",
    "Query",
    "Recommendation",
    "RerankMismatchError",
    "ResultSet",
    "ServiceConfig",
    "UndefinedPrecisionError",
    "UnknownRecordError",
    "betweenness",
    "bradford_partition",
    "build_coauthor_graph",
    "build_index",
    "contingency",
    "dice",
    "expand_query",
    "journal_productivity",
    "llr",
    "load_assessments",
    "load_config",
    "load_corpus",
    "normalize_author",
    "normalize_term",
    "p_at_k",
    "parse_assessments",
    "recommend_authors",
    "recommend_journals",
    "recommend_terms",
    "render_report",
    "report",
    "rerank_bradford",
    "rerank_centrality",
    "score",
    "search",
    "tokenize",
    "topic_precision",
]
