"""Relevance-assessment ingestion, precision metrics, and report rendering.

Assessments are binary judgments of recommendations, grouped by topic and
service. Precision is macro-averaged: computed per topic first, then
averaged over topics. Reports keep unrounded values; rounding (half-up)
happens only in the text renderer.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Sequence

from .errors import AssessmentError, UndefinedPrecisionError

SERVICES = ("STR", "JNR", "ANR")
RESEARCHER_TYPES = ("practitioner", "phd", "postdoc")
_TYPE_LABELS = {
    "practitioner": "Practitioners",
    "phd": "PhD students",
    "postdoc": "Postdocs",
}
_COLUMNS = (
    "topic_id",
    "researcher_id",
    "researcher_type",
    "service",
    "rank",
    "recommendation",
    "relevant",
)
_BOOLEANS = {"true": True, "1": True, "false": False, "0": False}
P_AT_KS = (1, 2, 4)


@dataclass(frozen=True)
class Assessment:
    """One binary relevance judgment of a ranked recommendation."""

    topic_id: str
    researcher_id: str
    researcher_type: str
    service: str
    rank: int
    recommendation: str
    relevant: bool


@dataclass
class AssessmentSet:
    """Validated assessments; ranks per (topic, service) are 1..k gap-free."""

    rows: tuple[Assessment, ...]

    def by_topic_service(self) -> dict[tuple[str, str], list[Assessment]]:
        grouped: dict[tuple[str, str], list[Assessment]] = {}
        for row in self.rows:
            grouped.setdefault((row.topic_id, row.service), []).append(row)
        for rows in grouped.values():
            rows.sort(key=lambda a: a.rank)
        return grouped

    def topics(self) -> list[str]:
        ordered: list[str] = []
        seen: set[str] = set()
        for row in self.rows:
            if row.topic_id not in seen:
                seen.add(row.topic_id)
                ordered.append(row.topic_id)
        return ordered


def parse_assessments(text: str) -> AssessmentSet:
    """Parse and validate assessment CSV text.

    All row-level problems are collected and raised together as one
    AssessmentError.
    """
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise AssessmentError("assessment CSV is empty")
    missing = [c for c in _COLUMNS if c not in reader.fieldnames]
    if missing:
        raise AssessmentError(f"missing column(s): {', '.join(missing)}")
    errors: list[str] = []
    rows: list[Assessment] = []
    for lineno, raw in enumerate(reader, start=2):
        row_errors: list[str] = []
        topic_id = (raw.get("topic_id") or "").strip()
        researcher_id = (raw.get("researcher_id") or "").strip()
        researcher_type = (raw.get("researcher_type") or "").strip()
        service = (raw.get("service") or "").strip()
        recommendation = (raw.get("recommendation") or "").strip()
        if not topic_id:
            row_errors.append("topic_id must not be empty")
        if not researcher_id:
            row_errors.append("researcher_id must not be empty")
        if researcher_type not in RESEARCHER_TYPES:
            row_errors.append(
                f"unknown researcher_type {researcher_type!r} "
                f"(expected one of {', '.join(RESEARCHER_TYPES)})"
            )
        if service not in SERVICES:
            row_errors.append(
                f"unknown service {service!r} (expected one of {', '.join(SERVICES)})"
            )
        rank_text = (raw.get("rank") or "").strip()
        rank = 0
        try:
            rank = int(rank_text)
        except ValueError:
            row_errors.append(f"rank {rank_text!r} is not an integer")
        else:
            if rank < 1:
                row_errors.append(f"rank must be >= 1, got {rank}")
        relevant_text = (raw.get("relevant") or "").strip().lower()
        if relevant_text not in _BOOLEANS:
            row_errors.append(
                f"relevant {raw.get('relevant')!r} is not one of true/false/1/0"
            )
        if row_errors:
            errors.extend(f"row {lineno}: {message}" for message in row_errors)
            continue
        rows.append(
            Assessment(
                topic_id=topic_id,
                researcher_id=researcher_id,
                researcher_type=researcher_type,
                service=service,
                rank=rank,
                recommendation=recommendation,
                relevant=_BOOLEANS[relevant_text],
            )
        )
    if errors:
        raise AssessmentError(errors)
    if not rows:
        raise AssessmentError("assessment CSV contains no rows")
    errors.extend(_validate_groups(rows))
    if errors:
        raise AssessmentError(errors)
    return AssessmentSet(tuple(rows))


def _validate_groups(rows: Sequence[Assessment]) -> list[str]:
    errors: list[str] = []
    ranks: dict[tuple[str, str], list[int]] = {}
    researcher_of_topic: dict[str, str] = {}
    type_of_researcher: dict[str, str] = {}
    for row in rows:
        ranks.setdefault((row.topic_id, row.service), []).append(row.rank)
        known = researcher_of_topic.setdefault(row.topic_id, row.researcher_id)
        if known != row.researcher_id:
            errors.append(
                f"topic {row.topic_id!r} is assessed by both {known!r} "
                f"and {row.researcher_id!r}"
            )
        known_type = type_of_researcher.setdefault(
            row.researcher_id, row.researcher_type
        )
        if known_type != row.researcher_type:
            errors.append(
                f"researcher {row.researcher_id!r} appears as both "
                f"{known_type!r} and {row.researcher_type!r}"
            )
    for (topic_id, service), group in sorted(ranks.items()):
        expected = list(range(1, len(group) + 1))
        if sorted(group) != expected:
            errors.append(
                f"topic {topic_id!r} service {service}: ranks must be 1.."
                f"{len(group)} without gaps or duplicates, got {sorted(group)}"
            )
    return errors


def load_assessments(path) -> AssessmentSet:
    """Load an assessment CSV file."""
    with open(path, encoding="utf-8") as handle:
        return parse_assessments(handle.read())


def topic_precision(rows: Sequence[Assessment]) -> float:
    """Fraction of relevant judgments among all judgments."""
    if not rows:
        raise UndefinedPrecisionError("precision over zero assessments")
    return sum(1 for row in rows if row.relevant) / len(rows)


def p_at_k(rows: Sequence[Assessment], k: int) -> float:
    """Precision over ranks 1..min(k, max rank available)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not rows:
        raise UndefinedPrecisionError("precision over zero assessments")
    head = [row for row in rows if row.rank <= k]
    if not head:
        raise UndefinedPrecisionError(f"no assessments at ranks 1..{k}")
    return sum(1 for row in head if row.relevant) / len(head)


@dataclass
class MetricsReport:
    """Aggregated evaluation results; all values unrounded.

    ``precision`` maps service -> {"p_av", "p_at_1", "p_at_2", "p_at_4"};
    ``precision_by_type`` maps researcher type -> service -> P(av).
    """

    researchers: int
    topics: int
    assessments: dict[str, int]
    mean_assessments_per_topic: dict[str, float]
    precision: dict[str, dict[str, float]]
    researcher_type_counts: dict[str, int]
    precision_by_type: dict[str, dict[str, float]]

    def to_dict(self) -> dict:
        return {
            "descriptive": {
                "researchers": self.researchers,
                "topics": self.topics,
                "assessments": dict(self.assessments),
                "mean_assessments_per_topic": dict(self.mean_assessments_per_topic),
            },
            "precision": {
                service: dict(metrics) for service, metrics in self.precision.items()
            },
            "researcher_types": {
                rtype: {
                    "researchers": self.researcher_type_counts[rtype],
                    "p_av": dict(self.precision_by_type[rtype]),
                }
                for rtype in self.precision_by_type
            },
        }


def _mean(values: Iterable[float]) -> float:
    values = list(values)
    return sum(values) / len(values)


def report(assessments: AssessmentSet) -> MetricsReport:
    """Build the full metrics report from a validated assessment set."""
    if not assessments.rows:
        raise AssessmentError("assessment set contains no rows")
    grouped = assessments.by_topic_service()
    topics = assessments.topics()
    researcher_of_topic = {row.topic_id: row.researcher_id for row in assessments.rows}
    type_of_researcher = {
        row.researcher_id: row.researcher_type for row in assessments.rows
    }
    services_present = [
        service
        for service in SERVICES
        if any(key[1] == service for key in grouped)
    ]

    counts = {
        service: sum(
            len(rows) for (_, svc), rows in grouped.items() if svc == service
        )
        for service in services_present
    }
    means = {service: counts[service] / len(topics) for service in services_present}

    precision: dict[str, dict[str, float]] = {}
    for service in services_present:
        per_topic = [
            grouped[(topic, service)] for topic in topics if (topic, service) in grouped
        ]
        metrics = {"p_av": _mean(topic_precision(rows) for rows in per_topic)}
        for k in P_AT_KS:
            metrics[f"p_at_{k}"] = _mean(p_at_k(rows, k) for rows in per_topic)
        precision[service] = metrics

    researchers = {row.researcher_id for row in assessments.rows}
    type_counts = {
        rtype: sum(1 for r in researchers if type_of_researcher[r] == rtype)
        for rtype in RESEARCHER_TYPES
        if any(type_of_researcher[r] == rtype for r in researchers)
    }
    precision_by_type: dict[str, dict[str, float]] = {}
    for rtype in type_counts:
        row: dict[str, float] = {}
        for service in services_present:
            per_topic = [
                grouped[(topic, service)]
                for topic in topics
                if (topic, service) in grouped
                and type_of_researcher[researcher_of_topic[topic]] == rtype
            ]
            if per_topic:
                row[service] = _mean(topic_precision(rows) for rows in per_topic)
        precision_by_type[rtype] = row

    return MetricsReport(
        researchers=len(researchers),
        topics=len(topics),
        assessments=counts,
        mean_assessments_per_topic=means,
        precision=precision,
        researcher_type_counts=type_counts,
        precision_by_type=precision_by_type,
    )


def _round_half_up(value: float, places: int) -> str:
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(str(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def _precision_cell(value: float | None) -> str:
    return _round_half_up(value, 3) if value is not None else "-"


def render_statistics_table(metrics: MetricsReport) -> str:
    """Counts table plus the mean assessments per topic (one decimal)."""
    headers = ["Researchers", "Topics", "STR A.", "JNR A.", "ANR A."]
    values = [
        str(metrics.researchers),
        str(metrics.topics),
        *(
            str(metrics.assessments[s]) if s in metrics.assessments else "-"
            for s in SERVICES
        ),
    ]
    header_line = "  ".join(headers)
    value_line = "  ".join(
        value.rjust(len(header)) for header, value in zip(headers, values)
    )
    means = "  ".join(
        f"{s} {_round_half_up(metrics.mean_assessments_per_topic[s], 1)}"
        for s in SERVICES
        if s in metrics.mean_assessments_per_topic
    )
    return f"{header_line}\n{value_line}\nMean assessments per topic: {means}\n"


def render_precision_table(metrics: MetricsReport) -> str:
    """Three-column table of P(av), P@1, P@2, P@4 per service."""
    label_width = len("P(av)")
    lines = [
        " " * label_width + "".join(f"  {service:>5}" for service in SERVICES)
    ]
    rows = [("P(av)", "p_av")] + [(f"P@{k}", f"p_at_{k}") for k in P_AT_KS]
    for label, key in rows:
        cells = "".join(
            f"  {_precision_cell(metrics.precision.get(service, {}).get(key)):>5}"
            for service in SERVICES
        )
        lines.append(f"{label:<{label_width}}{cells}")
    return "\n".join(lines) + "\n"


def render_type_table(metrics: MetricsReport) -> str:
    """P(av) per researcher type and service."""
    labels = {
        rtype: f"P(av) {_TYPE_LABELS[rtype]} (N={metrics.researcher_type_counts[rtype]})"
        for rtype in RESEARCHER_TYPES
        if rtype in metrics.precision_by_type
    }
    if not labels:
        return ""
    width = max(len(label) for label in labels.values())
    lines = [" " * width + "".join(f"  {service:>5}" for service in SERVICES)]
    for rtype, label in labels.items():
        cells = "".join(
            f"  {_precision_cell(metrics.precision_by_type[rtype].get(service)):>5}"
            for service in SERVICES
        )
        lines.append(f"{label:<{width}}{cells}")
    return "\n".join(lines) + "\n"


def render_report(metrics: MetricsReport) -> str:
    """Plain-text report: statistics, per-service precision, per-type precision."""
    sections = [
        "Assessment statistics\n" + render_statistics_table(metrics),
        "Precision by service\n" + render_precision_table(metrics),
    ]
    type_table = render_type_table(metrics)
    if type_table:
        sections.append("Precision by researcher type\n" + type_table)
    return "\n".join(sections)
