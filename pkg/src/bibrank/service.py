"""HTTP service over a loaded corpus: search, recommenders, evaluation.

Stateless and read-only: the corpus and index are built at startup, every
endpoint is a pure function of its request, and /evaluate never persists
uploads. JSON field names are a stable contract consumed by the web UI.
"""

from __future__ import annotations

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .config import ServiceConfig
from .engine import DEFAULT_SEARCH_LIMIT, RECOMMEND_KINDS, Engine, dump_json
from .errors import AssessmentError, InvalidQueryError
from .evaluation import parse_assessments, report
from .index import STRATEGIES, TFIDF


def _json(payload, status_code: int = 200) -> Response:
    return Response(
        content=dump_json(payload),
        media_type="application/json",
        status_code=status_code,
    )


def create_app(
    config: ServiceConfig | None = None, engine: Engine | None = None
) -> FastAPI:
    """Build the application; pass either a config or a prebuilt engine."""
    if engine is None:
        if config is None:
            raise ValueError("create_app needs a config or an engine")
        engine = Engine.from_config(config)
    app = FastAPI(title="bibrank", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(engine.config.cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/search")
    def search_endpoint(
        q: str = "",
        rerank: str = TFIDF,
        expand: str = "",
        limit: int = DEFAULT_SEARCH_LIMIT,
    ) -> Response:
        if not q.strip():
            return _json({"detail": "query parameter q must not be empty"}, 400)
        if rerank not in STRATEGIES:
            return _json(
                {
                    "detail": f"unknown rerank {rerank!r}; valid values: "
                    f"{', '.join(STRATEGIES)}"
                },
                400,
            )
        expand_terms = [t.strip() for t in expand.split(",") if t.strip()]
        try:
            payload = engine.search_payload(
                q, rerank=rerank, expand=expand_terms, limit=limit
            )
        except InvalidQueryError as exc:
            return _json({"detail": str(exc)}, 400)
        return _json(payload)

    @app.get("/recommend/{kind}")
    def recommend_endpoint(kind: str, q: str = "", k: int | None = None) -> Response:
        if kind not in RECOMMEND_KINDS:
            return _json(
                {
                    "detail": f"unknown recommender {kind!r}; valid values: "
                    f"{', '.join(RECOMMEND_KINDS)}"
                },
                404,
            )
        if not q.strip():
            return _json({"detail": "query parameter q must not be empty"}, 400)
        try:
            payload = engine.recommend_payload(kind, q, k=k)
        except InvalidQueryError as exc:
            return _json({"detail": str(exc)}, 400)
        return _json(payload)

    @app.post("/evaluate")
    async def evaluate_endpoint(request: Request) -> Response:
        body = await request.body()
        try:
            text = body.decode("utf-8")
        except UnicodeDecodeError:
            return _json({"detail": ["request body is not valid UTF-8"]}, 422)
        try:
            metrics = report(parse_assessments(text))
        except AssessmentError as exc:
            return _json({"detail": list(exc.messages)}, 422)
        return _json(metrics.to_dict())

    return app
