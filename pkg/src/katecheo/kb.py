"""Knowledge base model, JSON ingestion, and deployment configuration.

KB file format (fixed): UTF-8 JSON, a top-level array whose elements are
objects with exactly the keys ``article_id``, ``title`` and ``body``, all
strings. Unknown keys are rejected so schema typos surface at startup
rather than as silently unsearchable fields.

Deployment config format (fixed): UTF-8 JSON object with keys

    topics                  required, array of {"name", "kb_source"}
    threshold               optional number in [0, 1], default 0.15
    search_strategy         optional, "combined" (default) or "segmented"
    comprehension_mode      required, "baseline" or "remote"
    remote_url              required iff comprehension_mode is "remote"
    remote_timeout_seconds  optional positive number, default 10

``kb_source`` is a local path, a file:// URL, or an http(s) URL. Sources
are fetched once at startup; there is no hot reload.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import requests

DEFAULT_THRESHOLD = 0.15
DEFAULT_STRATEGY = "combined"
DEFAULT_REMOTE_TIMEOUT = 10.0

_ARTICLE_KEYS = {"article_id", "title", "body"}
_TOPIC_KEYS = {"name", "kb_source"}
_CONFIG_KEYS = {
    "topics",
    "threshold",
    "search_strategy",
    "comprehension_mode",
    "remote_url",
    "remote_timeout_seconds",
}

_MAX_REDIRECTS = 5
_FETCH_TIMEOUT_SECONDS = 30.0


class KnowledgeBaseError(Exception):
    """Base for KB ingestion and configuration failures."""


class MalformedJsonError(KnowledgeBaseError):
    pass


class SchemaViolationError(KnowledgeBaseError):
    pass


class DuplicateArticleIdError(KnowledgeBaseError):
    pass


class EmptyBodyError(KnowledgeBaseError):
    pass


class EmptyKnowledgeBaseError(KnowledgeBaseError):
    pass


class ThresholdOutOfRangeError(KnowledgeBaseError):
    pass


class DuplicateTopicNameError(KnowledgeBaseError):
    pass


class MissingRemoteUrlError(KnowledgeBaseError):
    pass


class SourceUnreachableError(KnowledgeBaseError):
    pass


class HttpStatusError(KnowledgeBaseError):
    def __init__(self, status_code: int, source: str):
        super().__init__(f"{source} returned HTTP {status_code}")
        self.status_code = status_code
        self.source = source


@dataclass(frozen=True)
class Article:
    article_id: str
    title: str
    body: str


@dataclass(frozen=True)
class KnowledgeBase:
    topic: str
    articles: tuple[Article, ...]

    def __post_init__(self) -> None:
        if not self.topic:
            raise ValueError("topic name must be non-empty")
        if not self.articles:
            raise EmptyKnowledgeBaseError(f"topic {self.topic!r} has no articles")


@dataclass(frozen=True)
class TopicSource:
    name: str
    kb_source: str


@dataclass(frozen=True)
class DeploymentConfig:
    topics: tuple[TopicSource, ...]
    threshold: float = DEFAULT_THRESHOLD
    search_strategy: str = DEFAULT_STRATEGY
    comprehension_mode: str = "baseline"
    remote_url: Optional[str] = None
    remote_timeout: float = DEFAULT_REMOTE_TIMEOUT


def parse_kb(json_bytes: bytes | str) -> list[Article]:
    """Parse and validate one KB document into its article list."""
    data = _load_json(json_bytes)
    if not isinstance(data, list):
        raise SchemaViolationError("KB document must be a top-level JSON array")
    if not data:
        raise EmptyKnowledgeBaseError("KB document contains no articles")

    articles: list[Article] = []
    seen_ids: set[str] = set()
    for i, entry in enumerate(data):
        if not isinstance(entry, dict):
            raise SchemaViolationError(f"article {i}: expected a JSON object")
        extra = set(entry) - _ARTICLE_KEYS
        if extra:
            raise SchemaViolationError(f"article {i}: unknown keys {sorted(extra)}")
        missing = _ARTICLE_KEYS - set(entry)
        if missing:
            raise SchemaViolationError(f"article {i}: missing keys {sorted(missing)}")
        for key in ("article_id", "title", "body"):
            if not isinstance(entry[key], str):
                raise SchemaViolationError(f"article {i}: {key!r} must be a string")
        article_id = entry["article_id"]
        if not article_id:
            raise SchemaViolationError(f"article {i}: article_id must be non-empty")
        if not entry["body"].strip():
            raise EmptyBodyError(f"article {i} ({article_id!r}): body is empty")
        if article_id in seen_ids:
            raise DuplicateArticleIdError(f"duplicate article_id {article_id!r}")
        seen_ids.add(article_id)
        articles.append(Article(article_id, entry["title"], entry["body"]))
    return articles


def serialize_kb(articles: list[Article]) -> bytes:
    """Inverse of parse_kb for valid article lists."""
    payload = [
        {"article_id": a.article_id, "title": a.title, "body": a.body}
        for a in articles
    ]
    return json.dumps(payload, ensure_ascii=False, indent=2).encode("utf-8")


def load_config(json_bytes: bytes | str) -> DeploymentConfig:
    """Parse and validate a deployment config, applying defaults."""
    data = _load_json(json_bytes)
    if not isinstance(data, dict):
        raise SchemaViolationError("config must be a top-level JSON object")
    extra = set(data) - _CONFIG_KEYS
    if extra:
        raise SchemaViolationError(f"config: unknown keys {sorted(extra)}")

    topics = _parse_topics(data)

    threshold = data.get("threshold", DEFAULT_THRESHOLD)
    if not _is_number(threshold):
        raise SchemaViolationError("config: 'threshold' must be a number")
    if not 0.0 <= threshold <= 1.0:
        raise ThresholdOutOfRangeError(f"threshold {threshold} outside [0, 1]")

    strategy = _parse_choice(data, "search_strategy", ("combined", "segmented"),
                             default=DEFAULT_STRATEGY)
    mode = _parse_choice(data, "comprehension_mode", ("baseline", "remote"),
                         default=None)
    if mode is None:
        raise SchemaViolationError("config: 'comprehension_mode' is required")

    remote_url = data.get("remote_url")
    if remote_url is not None and not isinstance(remote_url, str):
        raise SchemaViolationError("config: 'remote_url' must be a string")
    if mode == "remote" and not remote_url:
        raise MissingRemoteUrlError("comprehension_mode 'remote' requires 'remote_url'")
    if mode == "baseline" and remote_url is not None:
        raise SchemaViolationError("config: 'remote_url' is only valid in remote mode")

    timeout = data.get("remote_timeout_seconds", DEFAULT_REMOTE_TIMEOUT)
    if not _is_number(timeout) or timeout <= 0:
        raise SchemaViolationError("config: 'remote_timeout_seconds' must be positive")

    return DeploymentConfig(
        topics=topics,
        threshold=float(threshold),
        search_strategy=strategy,
        comprehension_mode=mode,
        remote_url=remote_url,
        remote_timeout=float(timeout),
    )


def fetch_kb(source: str) -> bytes:
    """Fetch raw KB bytes from a path, file:// URL, or http(s) URL."""
    if source.startswith(("http://", "https://")):
        return _fetch_http(source)
    if source.startswith("file://"):
        source = source[len("file://"):]
    try:
        return Path(source).read_bytes()
    except OSError as exc:
        raise SourceUnreachableError(f"cannot read {source!r}: {exc}") from exc


def _fetch_http(source: str) -> bytes:
    session = requests.Session()
    session.max_redirects = _MAX_REDIRECTS
    try:
        response = session.get(source, timeout=_FETCH_TIMEOUT_SECONDS)
    except requests.RequestException as exc:
        raise SourceUnreachableError(f"cannot fetch {source!r}: {exc}") from exc
    finally:
        session.close()
    if response.status_code // 100 != 2:
        raise HttpStatusError(response.status_code, source)
    return response.content


def _load_json(json_bytes: bytes | str):
    if isinstance(json_bytes, bytes):
        try:
            json_bytes = json_bytes.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedJsonError(f"input is not UTF-8: {exc}") from exc
    try:
        return json.loads(json_bytes)
    except json.JSONDecodeError as exc:
        raise MalformedJsonError(f"input is not valid JSON: {exc}") from exc


def _parse_topics(data: dict) -> tuple[TopicSource, ...]:
    raw = data.get("topics")
    if not isinstance(raw, list) or not raw:
        raise SchemaViolationError("config: 'topics' must be a non-empty array")
    topics: list[TopicSource] = []
    seen: set[str] = set()
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict) or set(entry) != _TOPIC_KEYS:
            raise SchemaViolationError(
                f"config: topics[{i}] must be an object with keys 'name', 'kb_source'"
            )
        name, kb_source = entry["name"], entry["kb_source"]
        if not isinstance(name, str) or not name:
            raise SchemaViolationError(f"config: topics[{i}].name must be a non-empty string")
        if not isinstance(kb_source, str) or not kb_source:
            raise SchemaViolationError(f"config: topics[{i}].kb_source must be a non-empty string")
        if name in seen:
            raise DuplicateTopicNameError(f"duplicate topic name {name!r}")
        seen.add(name)
        topics.append(TopicSource(name, kb_source))
    return tuple(topics)


def _parse_choice(data: dict, key: str, choices: tuple[str, ...], default):
    # Enum values are matched case-insensitively ("Baseline" == "baseline").
    value = data.get(key, default)
    if value is default:
        return default
    if not isinstance(value, str) or value.lower() not in choices:
        raise SchemaViolationError(f"config: {key!r} must be one of {list(choices)}")
    return value.lower()


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)
