"""Batch evaluation: question-ID confusion matrix, search accuracy, and
threshold sweeps.

Corpora are plain JSON files in the same spirit as the KB format:

* question/statement corpus: array of {"text", "label"} with label
  "question" or "statement";
* labeled questions: array of {"text", "expected_topic",
  "expected_article_id"}; expected_topic null (or absent) marks an
  off-topic question, and expected_article_id is optional.

Search correctness is article-level: a question counts correct when the
match has the expected topic and article id. When a labeled question
carries no article id, topic equality is the fallback. Off-topic
questions count correct when they are rejected (no match at threshold).

Sweep output is CSV with header ``threshold,on_topic_accuracy,
off_topic_accuracy`` and all values printed with 4 decimal places.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .kb import KnowledgeBase, MalformedJsonError, SchemaViolationError
from .question_id import identify
from .search import SearchEngine, SearchMatch

OFF_TOPIC_LABEL = "(off-topic)"

SWEEP_CSV_HEADER = ("threshold", "on_topic_accuracy", "off_topic_accuracy")


class EvalError(Exception):
    pass


class EmptyCorpusError(EvalError):
    pass


class EmptyQuestionSetError(EvalError):
    pass


class UnknownTopicError(EvalError):
    pass


class InvalidRangeError(EvalError):
    pass


@dataclass(frozen=True)
class LabeledText:
    text: str
    label: str  # "question" | "statement"


@dataclass(frozen=True)
class LabeledQuestion:
    text: str
    expected_topic: Optional[str]          # None = off topic
    expected_article_id: Optional[str] = None

    def __post_init__(self) -> None:
        if self.expected_article_id is not None and self.expected_topic is None:
            raise ValueError("an expected article id requires an expected topic")


@dataclass(frozen=True)
class ConfusionMatrix:
    true_question_pred_question: int
    true_question_pred_statement: int
    true_statement_pred_question: int
    true_statement_pred_statement: int

    @property
    def total(self) -> int:
        return (self.true_question_pred_question + self.true_question_pred_statement
                + self.true_statement_pred_question + self.true_statement_pred_statement)

    @property
    def accuracy(self) -> float:
        return (self.true_question_pred_question
                + self.true_statement_pred_statement) / self.total

    @property
    def question_false_negative_rate(self) -> float:
        questions = self.true_question_pred_question + self.true_question_pred_statement
        return self.true_question_pred_statement / questions if questions else 0.0


@dataclass(frozen=True)
class TopicAccuracy:
    topic: str
    total: int
    correct: int

    @property
    def accuracy(self) -> float:
        return self.correct / self.total


@dataclass(frozen=True)
class SweepRow:
    threshold: float
    on_topic_accuracy: float
    off_topic_accuracy: float


def eval_question_id(corpus: Sequence[LabeledText]) -> ConfusionMatrix:
    """Tally the rule-based identifier against labeled texts."""
    if not corpus:
        raise EmptyCorpusError("question-id corpus is empty")
    cells = {("question", True): 0, ("question", False): 0,
             ("statement", True): 0, ("statement", False): 0}
    for item in corpus:
        cells[(item.label, identify(item.text).is_question)] += 1
    return ConfusionMatrix(
        true_question_pred_question=cells[("question", True)],
        true_question_pred_statement=cells[("question", False)],
        true_statement_pred_question=cells[("statement", True)],
        true_statement_pred_statement=cells[("statement", False)],
    )


def eval_search(questions: Sequence[LabeledQuestion], kbs: Sequence[KnowledgeBase],
                strategy: str, threshold: float) -> list[TopicAccuracy]:
    """Per-topic retrieval accuracy, one row per topic in sorted order.

    A trailing "(off-topic)" row reports the rejection rate when the
    question set contains off-topic entries.
    """
    _check_questions(questions, kbs)
    engine = SearchEngine.build(kbs, strategy)

    totals: dict[str, int] = {}
    corrects: dict[str, int] = {}
    off_total = off_correct = 0
    for question in questions:
        match = engine.query(question.text, threshold)
        if question.expected_topic is None:
            off_total += 1
            off_correct += match is None
            continue
        topic = question.expected_topic
        totals[topic] = totals.get(topic, 0) + 1
        corrects[topic] = corrects.get(topic, 0) + _is_correct(question, match)

    rows = [TopicAccuracy(t, totals[t], corrects[t]) for t in sorted(totals)]
    if off_total:
        rows.append(TopicAccuracy(OFF_TOPIC_LABEL, off_total, off_correct))
    return rows


def threshold_sweep(questions: Sequence[LabeledQuestion], kbs: Sequence[KnowledgeBase],
                    strategy: str, start: float = 0.10, stop: float = 0.30,
                    step: float = 0.01) -> list[SweepRow]:
    """On/off-topic accuracy at each threshold in [start, stop].

    The best match per question does not depend on the threshold, so it
    is computed once and each threshold only re-applies the cutoff.
    """
    thresholds = sweep_thresholds(start, stop, step)
    _check_questions(questions, kbs)
    on_topic = [q for q in questions if q.expected_topic is not None]
    off_topic = [q for q in questions if q.expected_topic is None]
    if not on_topic or not off_topic:
        raise EmptyQuestionSetError("sweep needs both on-topic and off-topic questions")

    engine = SearchEngine.build(kbs, strategy)
    on_matches = [(q, engine.query(q.text, 0.0)) for q in on_topic]
    off_scores = [
        match.score if match is not None else None
        for match in (engine.query(q.text, 0.0) for q in off_topic)
    ]

    rows = []
    for threshold in thresholds:
        on_correct = sum(
            match is not None and match.score >= threshold and _is_correct(q, match)
            for q, match in on_matches
        )
        off_correct = sum(score is None or score < threshold for score in off_scores)
        rows.append(SweepRow(threshold, on_correct / len(on_topic), off_correct / len(off_topic)))
    return rows


def sweep_thresholds(start: float, stop: float, step: float) -> list[float]:
    if not (0.0 <= start <= stop <= 1.0):
        raise InvalidRangeError(f"sweep range [{start}, {stop}] must sit inside [0, 1]")
    if step <= 0:
        raise InvalidRangeError("sweep step must be positive")
    count = int(round((stop - start) / step))
    values = [round(start + i * step, 10) for i in range(count + 1)]
    return [v for v in values if v <= stop + 1e-12]


def write_sweep_csv(rows: Sequence[SweepRow], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(SWEEP_CSV_HEADER)
        for row in rows:
            writer.writerow([f"{row.threshold:.4f}",
                             f"{row.on_topic_accuracy:.4f}",
                             f"{row.off_topic_accuracy:.4f}"])


def load_labeled_texts(json_bytes: bytes | str) -> list[LabeledText]:
    data = _load_json_array(json_bytes, "corpus")
    items = []
    for i, entry in enumerate(data):
        if not isinstance(entry, dict) or set(entry) != {"text", "label"}:
            raise SchemaViolationError(f"corpus[{i}]: expected keys 'text' and 'label'")
        text, label = entry["text"], entry["label"]
        if not isinstance(text, str) or not text:
            raise SchemaViolationError(f"corpus[{i}]: 'text' must be a non-empty string")
        if label not in ("question", "statement"):
            raise SchemaViolationError(f"corpus[{i}]: 'label' must be question|statement")
        items.append(LabeledText(text, label))
    return items


def load_labeled_questions(json_bytes: bytes | str) -> list[LabeledQuestion]:
    data = _load_json_array(json_bytes, "question set")
    allowed = {"text", "expected_topic", "expected_article_id"}
    items = []
    for i, entry in enumerate(data):
        if not isinstance(entry, dict) or not set(entry) <= allowed or "text" not in entry:
            raise SchemaViolationError(
                f"questions[{i}]: expected 'text' plus optional "
                f"'expected_topic'/'expected_article_id'"
            )
        text = entry["text"]
        if not isinstance(text, str) or not text:
            raise SchemaViolationError(f"questions[{i}]: 'text' must be a non-empty string")
        topic = entry.get("expected_topic")
        article_id = entry.get("expected_article_id")
        for key, value in (("expected_topic", topic), ("expected_article_id", article_id)):
            if value is not None and not isinstance(value, str):
                raise SchemaViolationError(f"questions[{i}]: {key!r} must be a string or null")
        if article_id is not None and topic is None:
            raise SchemaViolationError(
                f"questions[{i}]: 'expected_article_id' requires 'expected_topic'"
            )
        items.append(LabeledQuestion(text, topic, article_id))
    return items


def _is_correct(question: LabeledQuestion, match: Optional[SearchMatch]) -> bool:
    if match is None or match.topic != question.expected_topic:
        return False
    if question.expected_article_id is None:
        return True
    return match.article_id == question.expected_article_id


def _check_questions(questions: Sequence[LabeledQuestion],
                     kbs: Sequence[KnowledgeBase]) -> None:
    if not questions:
        raise EmptyQuestionSetError("question set is empty")
    known = {kb.topic for kb in kbs}
    for question in questions:
        if question.expected_topic is not None and question.expected_topic not in known:
            raise UnknownTopicError(f"expected topic {question.expected_topic!r} "
                                    f"is not among the loaded KBs")


def _load_json_array(json_bytes: bytes | str, what: str) -> list:
    if isinstance(json_bytes, bytes):
        try:
            json_bytes = json_bytes.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedJsonError(f"{what} is not UTF-8: {exc}") from exc
    try:
        data = json.loads(json_bytes)
    except json.JSONDecodeError as exc:
        raise MalformedJsonError(f"{what} is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise SchemaViolationError(f"{what} must be a top-level JSON array")
    return data
