"""Command-line interface: validate, query, recommend, evaluate, serve.

Exit codes: 0 success, 1 validation or usage error, 2 internal error.
--json output matches the corresponding HTTP response body, newline-terminated.
"""

from __future__ import annotations

import argparse
import sys

from .engine import DEFAULT_SEARCH_LIMIT, RECOMMEND_KINDS, Engine, dump_json
from .errors import AssessmentError, BibrankError, CorpusError
from .evaluation import load_assessments, render_report, report
from .index import STRATEGIES, TFIDF

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INTERNAL = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the CLI contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _split_expand(raw: str) -> list[str]:
    return [term.strip() for term in raw.split(",") if term.strip()]


def _emit_json(payload) -> None:
    sys.stdout.write(dump_json(payload) + "\n")


def cmd_validate(args) -> int:
    try:
        corpus = Engine.open(args.corpus).corpus
    except (CorpusError, FileNotFoundError) as exc:
        print(f"invalid corpus: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(f"ok: {len(corpus)} records")
    return EXIT_OK


def cmd_query(args) -> int:
    engine = Engine.open(args.corpus)
    payload = engine.search_payload(
        args.q,
        rerank=args.rerank,
        expand=_split_expand(args.expand),
        limit=args.limit,
    )
    if args.json:
        _emit_json(payload)
        return EXIT_OK
    print(f"strategy: {payload['strategy']}  total: {payload['total']}")
    for position, row in enumerate(payload["results"], start=1):
        extra = ""
        if "zone" in row:
            extra = f"  zone={row['zone'] if row['zone'] is not None else '-'}"
        elif "centrality_key" in row:
            extra = f"  key={row['centrality_key']:.6f}"
        where = f" ({row['journal']}, {row['year']})" if row["journal"] else ""
        print(
            f"{position:>3}. {row['score']:>10.4f}{extra}  "
            f"{row['id']}  {row['title']}{where}"
        )
    return EXIT_OK


def cmd_recommend(args) -> int:
    engine = Engine.open(args.corpus)
    payload = engine.recommend_payload(args.kind, args.q, k=args.k)
    if args.json:
        _emit_json(payload)
        return EXIT_OK
    for item in payload["recommendations"]:
        print(f"{item['rank']:>2}. {item['value']}  ({item['score']:.6f})")
    return EXIT_OK


def cmd_evaluate(args) -> int:
    try:
        metrics = report(load_assessments(args.assessments))
    except (AssessmentError, FileNotFoundError) as exc:
        if isinstance(exc, AssessmentError):
            for message in exc.messages:
                print(f"invalid assessments: {message}", file=sys.stderr)
        else:
            print(f"invalid assessments: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.json:
        _emit_json(metrics.to_dict())
    else:
        sys.stdout.write(render_report(metrics))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .config import load_config
    from .service import create_app

    config = load_config(args.config)
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bibrank", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", help="check a corpus file")
    validate.add_argument("corpus", help="JSONL corpus file")
    validate.set_defaults(func=cmd_validate)

    query = commands.add_parser("query", help="run a ranked search")
    query.add_argument("corpus", help="JSONL corpus file")
    query.add_argument("--q", required=True, help="free-text query")
    query.add_argument(
        "--rerank", default=TFIDF, choices=STRATEGIES, help="ranking strategy"
    )
    query.add_argument(
        "--expand", default="", help="comma-separated controlled expansion terms"
    )
    query.add_argument("--limit", type=int, default=DEFAULT_SEARCH_LIMIT)
    query.add_argument("--json", action="store_true", help="emit the JSON payload")
    query.set_defaults(func=cmd_query)

    recommend = commands.add_parser("recommend", help="suggest terms/journals/authors")
    recommend.add_argument("corpus", help="JSONL corpus file")
    recommend.add_argument("--q", required=True, help="free-text query")
    recommend.add_argument("--kind", required=True, choices=RECOMMEND_KINDS)
    recommend.add_argument("--k", type=int, default=None, help="number of suggestions")
    recommend.add_argument("--json", action="store_true", help="emit the JSON payload")
    recommend.set_defaults(func=cmd_recommend)

    evaluate = commands.add_parser("evaluate", help="score an assessment CSV")
    evaluate.add_argument("assessments", help="assessment CSV file")
    evaluate.add_argument("--json", action="store_true", help="emit the JSON payload")
    evaluate.set_defaults(func=cmd_evaluate)

    serve = commands.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--config", required=True, help="TOML config file")
    serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BibrankError, FileNotFoundError) as exc:
        messages = (
            exc.messages if isinstance(exc, AssessmentError) else [str(exc)]
        )
        for message in messages:
            print(f"error: {message}", file=sys.stderr)
        return EXIT_INVALID
    except KeyboardInterrupt:
        return EXIT_INTERNAL
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
