"""Answer extraction from a matched article body.

Two interchangeable backends produce a span of the context:

* baseline: a pure sentence scorer, so the whole pipeline runs with no
  ML component. Sentences are ranked by the summed rarity of the distinct
  question tokens they contain.
* remote: an HTTP reader behind a fixed wire contract: POST
  ``<remote_url>/answer`` with ``{"question", "context"}``, expecting a
  200 response ``{"answer", "start", "end", "score"}`` where
  ``context[start:end] == answer`` and score is in [0, 1]. Offsets are
  Unicode code point indices into the context.

Both yield spans that are contiguous substrings of the context; for the
remote backend that is enforced by validation, never trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import requests

from .text import segment_sentences, token_surfaces

BACKEND_BASELINE = "baseline"
BACKEND_REMOTE = "remote"


class ComprehensionError(Exception):
    """Base for answer-extraction failures."""


class EmptyContextError(ComprehensionError):
    pass


class BackendError(ComprehensionError):
    """Remote reader failure; the message feeds the pipeline's error flag."""


class BackendUnreachableError(BackendError):
    pass


class BackendTimeoutError(BackendError):
    pass


class BackendMalformedResponseError(BackendError):
    pass


@dataclass(frozen=True)
class Answer:
    text: str
    start: int
    end: int
    score: float
    backend: str


@dataclass(frozen=True)
class BackendDescriptor:
    mode: str
    remote_url: Optional[str] = None
    timeout: float = 10.0

    def __post_init__(self) -> None:
        if (self.mode == BACKEND_REMOTE) != (self.remote_url is not None):
            raise ValueError("remote_url is required exactly in remote mode")


def answer_baseline(question: str, context: str) -> Answer:
    """Return the context sentence sharing the rarest question vocabulary.

    Each distinct question token t is weighted ln(1 + S / (1 + sf(t)))
    where S is the sentence count and sf(t) the number of sentences
    containing t; a sentence scores the sum of weights of the question
    tokens it contains. The reported score is normalized by the full
    weight sum for the question, so it lives in [0, 1] and hits 0 exactly
    when no question token occurs anywhere. Ties go to the earliest
    sentence; a zero-score answer still returns the first sentence.
    """
    sentences = segment_sentences(context)
    if not sentences:
        raise EmptyContextError("context contains no sentences")

    question_terms = sorted(set(token_surfaces(question)))
    sentence_terms = [set(token_surfaces(s.text)) for s in sentences]
    total = len(sentences)
    weights = {
        term: math.log(1 + total / (1 + sum(term in terms for terms in sentence_terms)))
        for term in question_terms
    }
    denominator = sum(weights.values())

    best_index = 0
    best_raw = -1.0
    for i, terms in enumerate(sentence_terms):
        raw = sum(weights[t] for t in question_terms if t in terms)
        if raw > best_raw:
            best_index, best_raw = i, raw

    score = best_raw / denominator if denominator > 0 else 0.0
    chosen = sentences[best_index]
    return Answer(chosen.text, chosen.start_offset, chosen.end_offset, score, BACKEND_BASELINE)


def answer_remote(question: str, context: str, backend: BackendDescriptor) -> Answer:
    """Ask a remote reader for a span and validate it against the context."""
    if backend.mode != BACKEND_REMOTE:
        raise ValueError("answer_remote requires a remote-mode descriptor")
    url = backend.remote_url.rstrip("/") + "/answer"
    try:
        response = requests.post(
            url,
            json={"question": question, "context": context},
            timeout=backend.timeout,
        )
    except requests.Timeout as exc:
        raise BackendTimeoutError(f"reader did not answer within {backend.timeout}s") from exc
    except requests.RequestException as exc:
        raise BackendUnreachableError(f"reader unreachable at {url}: {exc}") from exc

    if response.status_code != 200:
        raise BackendMalformedResponseError(f"reader returned HTTP {response.status_code}")
    try:
        payload = response.json()
    except ValueError as exc:
        raise BackendMalformedResponseError(f"reader response is not JSON: {exc}") from exc

    return Answer(*_validated_span(payload, context), backend=BACKEND_REMOTE)


def _validated_span(payload, context: str) -> tuple[str, int, int, float]:
    if not isinstance(payload, dict):
        raise BackendMalformedResponseError("reader response must be a JSON object")
    for key in ("answer", "start", "end", "score"):
        if key not in payload:
            raise BackendMalformedResponseError(f"reader response missing {key!r}")
    answer, start, end, score = (payload[k] for k in ("answer", "start", "end", "score"))
    if not isinstance(answer, str):
        raise BackendMalformedResponseError("'answer' must be a string")
    if not _is_int(start) or not _is_int(end):
        raise BackendMalformedResponseError("'start' and 'end' must be integers")
    if not isinstance(score, (int, float)) or isinstance(score, bool) or not 0.0 <= score <= 1.0:
        raise BackendMalformedResponseError("'score' must be a number in [0, 1]")
    if not 0 <= start < end <= len(context):
        raise BackendMalformedResponseError(
            f"span [{start}, {end}) out of bounds for context of length {len(context)}"
        )
    if context[start:end] != answer:
        raise BackendMalformedResponseError("answer text does not equal context[start:end]")
    return answer, start, end, float(score)


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)
