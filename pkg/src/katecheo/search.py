"""TF-IDF retrieval over topic-tagged articles.

Document text is ``title + " " + body`` (titles carry strong signal for
question-to-article matching). Weights use raw term frequency and a
smoothed idf:

    weight(t, d) = tf(t, d) * (ln((1 + N) / (1 + df(t))) + 1)

with each document vector L2-normalized, so cosine similarity is a plain
dot product and lands in [0, 1]. Queries reuse the index's idf table;
query terms outside the vocabulary contribute nothing.

Two query strategies exist: combined (one index over every topic's
articles, one argmax) and segmented (one index per topic, per-topic
winners compared by raw score). A match is returned only when its score
reaches the configured threshold; absence is a value, not an error. Ties
break toward the lexicographically smallest (topic, article_id) so that
results are reproducible.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .kb import Article, KnowledgeBase
from .text import token_surfaces


class AllDocumentsEmptyError(Exception):
    """No document in the corpus produced a single token."""


@dataclass(frozen=True)
class DocRef:
    topic: str
    article_id: str
    title: str


@dataclass(frozen=True)
class TfIdfIndex:
    vocabulary: dict[str, int]          # term -> column index
    doc_freq: dict[str, int]            # term -> number of docs containing it
    doc_count: int
    doc_vectors: tuple[dict[str, float], ...]   # L2-normalized, term-keyed
    doc_refs: tuple[DocRef, ...]


@dataclass(frozen=True)
class SearchMatch:
    topic: str
    article_id: str
    title: str
    score: float


def build_index(docs: Sequence[tuple[str, Article]]) -> TfIdfIndex:
    """Build an immutable index; documents with no tokens are dropped."""
    token_lists: list[list[str]] = []
    refs: list[DocRef] = []
    for topic, article in docs:
        tokens = token_surfaces(article.title + " " + article.body)
        if not tokens:
            continue
        token_lists.append(tokens)
        refs.append(DocRef(topic, article.article_id, article.title))
    if not token_lists:
        raise AllDocumentsEmptyError("no document in the corpus produced any tokens")

    doc_count = len(token_lists)
    doc_freq: Counter[str] = Counter()
    for tokens in token_lists:
        doc_freq.update(set(tokens))

    vocabulary = {term: i for i, term in enumerate(sorted(doc_freq))}
    idf = {term: _idf(doc_count, df) for term, df in doc_freq.items()}

    vectors: list[dict[str, float]] = []
    for tokens in token_lists:
        weights = {term: count * idf[term] for term, count in Counter(tokens).items()}
        norm = math.sqrt(sum(w * w for w in weights.values()))
        vectors.append({term: w / norm for term, w in weights.items()})

    return TfIdfIndex(
        vocabulary=vocabulary,
        doc_freq=dict(doc_freq),
        doc_count=doc_count,
        doc_vectors=tuple(vectors),
        doc_refs=tuple(refs),
    )


def query_combined(index: TfIdfIndex, question: str, threshold: float) -> Optional[SearchMatch]:
    """Argmax-cosine article over a single all-topics index, or None."""
    query_vector = _vectorize_query(index, question)
    if query_vector is None:
        return None
    ref, score = _best_document(index, query_vector)
    if score >= threshold:
        return SearchMatch(ref.topic, ref.article_id, ref.title, score)
    return None


def query_segmented(indexes: Mapping[str, TfIdfIndex], question: str,
                    threshold: float) -> Optional[SearchMatch]:
    """Best per-topic match across isolated indexes, or None.

    Scores from differently built indexes are compared directly even
    though their idf tables differ; this is a documented modeling
    artifact of segmented search.
    """
    best: Optional[tuple[tuple[float, str, str], DocRef, float]] = None
    for topic in sorted(indexes):
        index = indexes[topic]
        query_vector = _vectorize_query(index, question)
        if query_vector is None:
            continue
        ref, score = _best_document(index, query_vector)
        key = (-score, ref.topic, ref.article_id)
        if best is None or key < best[0]:
            best = (key, ref, score)
    if best is None:
        return None
    _, ref, score = best
    if score >= threshold:
        return SearchMatch(ref.topic, ref.article_id, ref.title, score)
    return None


@dataclass(frozen=True)
class SearchEngine:
    """Built index(es) for one strategy, queried uniformly."""

    strategy: str
    combined: Optional[TfIdfIndex] = None
    per_topic: Optional[dict[str, TfIdfIndex]] = None

    @classmethod
    def build(cls, kbs: Iterable[KnowledgeBase], strategy: str) -> "SearchEngine":
        kbs = list(kbs)
        if strategy == "combined":
            docs = [(kb.topic, a) for kb in kbs for a in kb.articles]
            return cls(strategy="combined", combined=build_index(docs))
        if strategy == "segmented":
            per_topic = {
                kb.topic: build_index([(kb.topic, a) for a in kb.articles])
                for kb in kbs
            }
            return cls(strategy="segmented", per_topic=per_topic)
        raise ValueError(f"unknown search strategy {strategy!r}")

    def query(self, question: str, threshold: float) -> Optional[SearchMatch]:
        if self.strategy == "combined":
            assert self.combined is not None
            return query_combined(self.combined, question, threshold)
        assert self.per_topic is not None
        return query_segmented(self.per_topic, question, threshold)

    def vocabulary_size(self) -> int:
        if self.combined is not None:
            return len(self.combined.vocabulary)
        assert self.per_topic is not None
        terms: set[str] = set()
        for index in self.per_topic.values():
            terms.update(index.vocabulary)
        return len(terms)


def _idf(doc_count: int, doc_freq: int) -> float:
    return math.log((1 + doc_count) / (1 + doc_freq)) + 1.0


def _vectorize_query(index: TfIdfIndex, question: str) -> Optional[dict[str, float]]:
    counts = Counter(t for t in token_surfaces(question) if t in index.doc_freq)
    if not counts:
        return None
    weights = {
        term: count * _idf(index.doc_count, index.doc_freq[term])
        for term, count in counts.items()
    }
    norm = math.sqrt(sum(w * w for w in weights.values()))
    return {term: w / norm for term, w in weights.items()}


def _best_document(index: TfIdfIndex, query_vector: dict[str, float]) -> tuple[DocRef, float]:
    best_key: Optional[tuple[float, str, str]] = None
    best_ref: Optional[DocRef] = None
    best_score = 0.0
    for vector, ref in zip(index.doc_vectors, index.doc_refs):
        score = sum(qw * vector.get(term, 0.0) for term, qw in query_vector.items())
        key = (-score, ref.topic, ref.article_id)
        if best_key is None or key < best_key:
            best_key, best_ref, best_score = key, ref, score
    assert best_ref is not None
    # Rounding can push the dot of two unit vectors a hair past 1.
    return best_ref, min(max(best_score, 0.0), 1.0)
