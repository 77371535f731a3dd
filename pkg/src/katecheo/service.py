"""Single-endpoint QA gateway: the three-stage pipeline behind REST.

A request flows question identification -> KB search -> comprehension,
with each stage passing a proceed/halt flag to the next; the first halt
short-circuits the remainder and is reported in the response's ``error``
field. Stage failures are part of the payload (HTTP 200) because clients
need the partial trace, e.g. "was a question, but off-topic"; only a
malformed request body yields a 4xx.

Endpoints:

* ``POST /api/v1/qa``   body {"question": str} -> the full pipeline trace
  with keys is_question, topic, article_id, article_title, search_score,
  answer, answer_score, backend, error (absent values are null; error is
  {"stage", "detail"} or null).
* ``GET /api/v1/health``  per-topic article counts, vocabulary size,
  configured strategy/threshold/mode, and per-stage invocation counters.

All pipeline state (config, KBs, indexes) is immutable after startup;
stage counters are updated under a lock.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import comprehension as rc
from . import kb as kbmod
from .kb import DeploymentConfig, KnowledgeBase
from .question_id import identify
from .search import SearchEngine, SearchMatch

logger = logging.getLogger("katecheo")

STAGE_QUESTION_ID = "question_id"
STAGE_KB_SEARCH = "kb_search"
STAGE_COMPREHENSION = "comprehension"

CONFIG_ENV_VAR = "KATECHEO_CONFIG"


class StartupError(Exception):
    """Initialization failed; the message names the offending topic."""


@dataclass(frozen=True)
class StageFlag:
    """Inter-stage metadata: whether the next module should proceed."""

    proceed: bool
    stage: str
    detail: str = ""

    def __post_init__(self) -> None:
        if self.proceed == bool(self.detail):
            raise ValueError("detail must be set exactly when proceed is False")


@dataclass(frozen=True)
class StageError:
    stage: str
    detail: str


@dataclass(frozen=True)
class PipelineResponse:
    """Full trace of one request; one JSON key per field, null if absent."""

    is_question: bool
    topic: Optional[str] = None
    article_id: Optional[str] = None
    article_title: Optional[str] = None
    search_score: Optional[float] = None
    answer: Optional[str] = None
    answer_score: Optional[float] = None
    backend: Optional[str] = None
    error: Optional[StageError] = None

    def to_dict(self) -> dict:
        return {
            "is_question": self.is_question,
            "topic": self.topic,
            "article_id": self.article_id,
            "article_title": self.article_title,
            "search_score": self.search_score,
            "answer": self.answer,
            "answer_score": self.answer_score,
            "backend": self.backend,
            "error": (
                {"stage": self.error.stage, "detail": self.error.detail}
                if self.error is not None else None
            ),
        }


class _StageCounters:
    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._counts = {STAGE_QUESTION_ID: 0, STAGE_KB_SEARCH: 0, STAGE_COMPREHENSION: 0}

    def hit(self, stage: str) -> None:
        with self._lock:
            self._counts[stage] += 1

    def snapshot(self) -> dict[str, int]:
        with self._lock:
            return dict(self._counts)


class Gateway:
    """Loaded pipeline state plus the three-stage request logic."""

    def __init__(self, config: DeploymentConfig, kbs: Sequence[KnowledgeBase]):
        names = [kb.topic for kb in kbs]
        expected = [t.name for t in config.topics]
        if names != expected:
            raise StartupError(f"loaded KBs {names} do not match configured topics {expected}")
        self.config = config
        self.kbs: dict[str, KnowledgeBase] = {kb.topic: kb for kb in kbs}
        self._articles = {
            kb.topic: {a.article_id: a for a in kb.articles} for kb in kbs
        }
        try:
            self.engine = SearchEngine.build(kbs, config.search_strategy)
        except Exception as exc:
            raise StartupError(f"index build failed: {exc}") from exc
        self._counters = _StageCounters()

    @classmethod
    def from_config_path(cls, config_path: str | Path) -> "Gateway":
        """Load config, fetch and parse every KB, build the index(es).

        Fails atomically: any unreachable or invalid KB aborts startup
        with the offending topic named. Relative file sources resolve
        against the config file's directory.
        """
        config_path = Path(config_path)
        try:
            config = kbmod.load_config(config_path.read_bytes())
        except OSError as exc:
            raise StartupError(f"cannot read config {config_path}: {exc}") from exc
        except kbmod.KnowledgeBaseError as exc:
            raise StartupError(f"invalid config {config_path}: {exc}") from exc

        base_dir = config_path.resolve().parent
        kbs = []
        for topic in config.topics:
            source = _resolve_source(topic.kb_source, base_dir)
            try:
                articles = kbmod.parse_kb(kbmod.fetch_kb(source))
            except kbmod.KnowledgeBaseError as exc:
                raise StartupError(f"topic {topic.name!r}: {exc}") from exc
            kbs.append(KnowledgeBase(topic.name, tuple(articles)))
            logger.info("loaded topic %r: %d articles", topic.name, len(articles))
        return cls(config, kbs)

    def answer_question(self, text: str) -> PipelineResponse:
        """Run the three stages, stopping at the first halt flag."""
        self._counters.hit(STAGE_QUESTION_ID)
        verdict = identify(text)
        if not verdict.is_question:
            flag = StageFlag(False, STAGE_QUESTION_ID, "input was not identified as a question")
            return PipelineResponse(is_question=False, error=_halt(flag))

        self._counters.hit(STAGE_KB_SEARCH)
        match = self.engine.query(text, self.config.threshold)
        if match is None:
            flag = StageFlag(
                False, STAGE_KB_SEARCH,
                f"no article matched at or above threshold {self.config.threshold:g}",
            )
            return PipelineResponse(is_question=True, error=_halt(flag))

        self._counters.hit(STAGE_COMPREHENSION)
        body = self._articles[match.topic][match.article_id].body
        try:
            answer = self._comprehend(text, body)
        except rc.ComprehensionError as exc:
            flag = StageFlag(False, STAGE_COMPREHENSION, str(exc))
            return PipelineResponse(is_question=True, error=_halt(flag), **_match_fields(match))

        return PipelineResponse(
            is_question=True,
            answer=answer.text,
            answer_score=answer.score,
            backend=answer.backend,
            **_match_fields(match),
        )

    def health(self) -> dict:
        return {
            "status": "ok",
            "topics": {kb.topic: len(kb.articles) for kb in self.kbs.values()},
            "vocabulary_size": self.engine.vocabulary_size(),
            "search_strategy": self.config.search_strategy,
            "threshold": self.config.threshold,
            "comprehension_mode": self.config.comprehension_mode,
            "stage_counters": self._counters.snapshot(),
        }

    def _comprehend(self, question: str, body: str) -> rc.Answer:
        if self.config.comprehension_mode == rc.BACKEND_REMOTE:
            backend = rc.BackendDescriptor(
                rc.BACKEND_REMOTE, self.config.remote_url, self.config.remote_timeout
            )
            return rc.answer_remote(question, body, backend)
        return rc.answer_baseline(question, body)


def _halt(flag: StageFlag) -> StageError:
    return StageError(flag.stage, flag.detail)


def _match_fields(match: SearchMatch) -> dict:
    return {
        "topic": match.topic,
        "article_id": match.article_id,
        "article_title": match.title,
        "search_score": match.score,
    }


def _resolve_source(source: str, base_dir: Path) -> str:
    if source.startswith(("http://", "https://")):
        return source
    if source.startswith("file://"):
        source = source[len("file://"):]
    path = Path(source)
    if not path.is_absolute():
        path = base_dir / path
    return str(path)


class QaRequest(BaseModel):
    question: str


def create_app(gateway: Gateway, ui_dir: Optional[str | Path] = None) -> FastAPI:
    """Wrap a loaded Gateway in the REST surface (and the demo UI, if built)."""
    app = FastAPI(title="katecheo", version="0.1.0")

    @app.post("/api/v1/qa")
    def qa(request: QaRequest) -> JSONResponse:
        return JSONResponse(gateway.answer_question(request.question).to_dict())

    @app.get("/api/v1/health")
    def health() -> JSONResponse:
        return JSONResponse(gateway.health())

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
