import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from katecheo.kb import Article, KnowledgeBase
from katecheo.search import (
    AllDocumentsEmptyError,
    SearchEngine,
    SearchMatch,
    build_index,
    query_combined,
    query_segmented,
)

from tfidf_oracle import oracle_rank

LN_3_2_PLUS_1 = math.log(3 / 2) + 1.0          # idf of a term in 1 of 2 docs
COLD_SORES_SCORE = 0.816496580927726           # sqrt(2/3), frozen from the oracle


def _art(article_id, body, title=""):
    return Article(article_id, title, body)


class TestBuildIndex:
    def test_two_doc_idf_and_unit_vector(self):
        index = build_index([("T", _art("d1", "apple apple")),
                             ("T", _art("d2", "banana"))])
        assert index.doc_count == 2
        assert index.doc_freq == {"apple": 1, "banana": 1}
        idf_apple = math.log((1 + 2) / (1 + 1)) + 1.0
        assert idf_apple == pytest.approx(LN_3_2_PLUS_1, abs=1e-12)
        # one distinct term per doc: normalization collapses weight to 1.0
        assert index.doc_vectors[0] == {"apple": pytest.approx(1.0)}
        assert index.doc_vectors[1] == {"banana": pytest.approx(1.0)}

    def test_single_doc_unit_vector(self):
        index = build_index([("T", _art("only", "x"))])
        assert index.doc_vectors == ({"x": pytest.approx(1.0)},)

    def test_all_docs_empty(self):
        with pytest.raises(AllDocumentsEmptyError):
            build_index([("T", _art("d1", "   ")), ("T", _art("d2", "...!!"))])

    def test_tokenless_doc_dropped(self):
        index = build_index([("T", _art("d1", "---")), ("T", _art("d2", "word"))])
        assert index.doc_count == 1
        assert index.doc_refs[0].article_id == "d2"

    def test_vocabulary_columns_cover_terms(self):
        index = build_index([("T", _art("d1", "alpha beta")),
                             ("T", _art("d2", "beta gamma"))])
        assert sorted(index.vocabulary) == ["alpha", "beta", "gamma"]
        assert sorted(index.vocabulary.values()) == [0, 1, 2]


THREE_DOCS = [
    ("Medical Sciences", _art("d1", "cold sores lips")),
    ("Medical Sciences", _art("d2", "knee joint pain")),
    ("Christianity", _art("d3", "messianic secret jesus")),
]


class TestQueryCombined:
    def test_three_doc_corpus_frozen_score(self):
        index = build_index(THREE_DOCS)
        match = query_combined(index, "why do we get cold sores", threshold=0.15)
        assert match is not None
        assert match.article_id == "d1"
        assert match.score == pytest.approx(COLD_SORES_SCORE, abs=1e-9)

    def test_three_doc_corpus_matches_oracle(self):
        docs = [(t, a.article_id, a.title, a.body) for t, a in THREE_DOCS]
        oracle = oracle_rank(docs, "why do we get cold sores")
        assert oracle is not None
        topic, article_id, score = oracle
        assert (topic, article_id) == ("Medical Sciences", "d1")
        assert score == pytest.approx(COLD_SORES_SCORE, abs=1e-9)

    def test_self_similarity(self):
        index = build_index(THREE_DOCS)
        match = query_combined(index, "knee joint pain", threshold=0.15)
        assert match is not None
        assert match.article_id == "d2"
        assert match.score == pytest.approx(1.0, abs=1e-9)

    def test_zero_overlap_is_none(self):
        index = build_index(THREE_DOCS)
        assert query_combined(index, "quarterback touchdown", threshold=0.0) is None

    def test_score_exactly_at_threshold_passes(self):
        index = build_index(THREE_DOCS)
        at = query_combined(index, "knee joint pain", threshold=1.0)
        assert at is not None and at.article_id == "d2"

    def test_below_threshold_is_none(self):
        index = build_index(THREE_DOCS)
        score = query_combined(index, "why do we get cold sores", threshold=0.0).score
        assert query_combined(index, "why do we get cold sores", threshold=score + 1e-6) is None

    def test_empty_question_is_none(self):
        index = build_index(THREE_DOCS)
        assert query_combined(index, "", threshold=0.0) is None

    def test_tie_breaks_to_smallest_topic_then_id(self):
        index = build_index([
            ("B Topic", _art("a1", "orbit")),
            ("A Topic", _art("z9", "orbit")),
            ("A Topic", _art("a5", "orbit")),
        ])
        match = query_combined(index, "orbit", threshold=0.0)
        assert (match.topic, match.article_id) == ("A Topic", "a5")


class TestQuerySegmented:
    def test_single_topic_coincides_with_combined(self):
        docs = THREE_DOCS[:2]
        combined = query_combined(build_index(docs), "why do we get cold sores", 0.0)
        segmented = query_segmented({"Medical Sciences": build_index(docs)},
                                    "why do we get cold sores", 0.0)
        assert segmented == combined

    def test_argmax_across_topic_winners(self):
        indexes = {
            "A": build_index([("A", _art("a1", "solar panels convert sunlight"))]),
            "B": build_index([("B", _art("b1", "solar flares disturb radio"))]),
        }
        match = query_segmented(indexes, "how do solar panels convert sunlight", 0.0)
        assert (match.topic, match.article_id) == ("A", "a1")

    def test_duplicate_article_across_topics_tie_break(self):
        text = "identical article text"
        indexes = {
            "B Topic": build_index([("B Topic", _art("x1", text))]),
            "A Topic": build_index([("A Topic", _art("x1", text))]),
        }
        match = query_segmented(indexes, text, 0.0)
        assert (match.topic, match.article_id) == ("A Topic", "x1")
        assert match.score == pytest.approx(1.0, abs=1e-9)

    def test_topic_without_query_terms_skipped(self):
        indexes = {
            "A": build_index([("A", _art("a1", "galaxy cluster"))]),
            "B": build_index([("B", _art("b1", "soup recipe"))]),
        }
        match = query_segmented(indexes, "galaxy", 0.0)
        assert match.article_id == "a1"

    def test_all_topics_oov_is_none(self):
        indexes = {"A": build_index([("A", _art("a1", "galaxy cluster"))])}
        assert query_segmented(indexes, "zzz", 0.0) is None

    def test_threshold_applied_after_argmax(self):
        indexes = {"A": build_index([("A", _art("a1", "galaxy cluster far away"))])}
        assert query_segmented(indexes, "galaxy soup", 0.99) is None


class TestSearchEngine:
    def _kbs(self):
        return [
            KnowledgeBase("Medical Sciences", (Article("m1", "Cold sores", "cold sores lips"),)),
            KnowledgeBase("Christianity", (Article("c1", "Messianic Secret", "messianic secret jesus"),)),
        ]

    def test_combined_build_and_query(self):
        engine = SearchEngine.build(self._kbs(), "combined")
        match = engine.query("why do we get cold sores", 0.15)
        assert match.topic == "Medical Sciences"
        assert match.title == "Cold sores"

    def test_segmented_build_and_query(self):
        engine = SearchEngine.build(self._kbs(), "segmented")
        match = engine.query("what is the messianic secret", 0.15)
        assert match.article_id == "c1"

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            SearchEngine.build(self._kbs(), "hybrid")

    def test_vocabulary_size_is_distinct_term_count(self):
        combined = SearchEngine.build(self._kbs(), "combined")
        segmented = SearchEngine.build(self._kbs(), "segmented")
        assert combined.vocabulary_size() == segmented.vocabulary_size() == 6


# --- randomized properties -------------------------------------------------

_WORDS = st.sampled_from(
    "apple banana cherry knee joint pain cold sore lip secret orbit moon".split()
)
_PHRASE = st.lists(_WORDS, min_size=1, max_size=8).map(" ".join)


def _corpus_strategy(max_docs=8):
    return st.lists(_PHRASE, min_size=1, max_size=max_docs).map(
        lambda bodies: [("T%d" % (i % 3), _art("id%03d" % i, body))
                        for i, body in enumerate(bodies)]
    )


@settings(max_examples=60, deadline=None)
@given(docs=_corpus_strategy(max_docs=20), question=_PHRASE)
def test_oracle_equivalence(docs, question):
    index = build_index(docs)
    match = query_combined(index, question, threshold=0.0)
    oracle = oracle_rank([(t, a.article_id, a.title, a.body) for t, a in docs], question)
    if oracle is None:
        assert match is None
        return
    topic, article_id, score = oracle
    assert match is not None
    assert (match.topic, match.article_id) == (topic, article_id)
    assert match.score == pytest.approx(score, abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(docs=_corpus_strategy(), question=_PHRASE)
def test_scores_in_unit_range(docs, question):
    match = query_combined(build_index(docs), question, threshold=0.0)
    if match is not None:
        assert 0.0 <= match.score <= 1.0


@settings(max_examples=40, deadline=None)
@given(docs=_corpus_strategy(), question=_PHRASE,
       low=st.floats(0, 1), high=st.floats(0, 1))
def test_threshold_monotonicity(docs, question, low, high):
    if low > high:
        low, high = high, low
    index = build_index(docs)
    at_low = query_combined(index, question, low)
    at_high = query_combined(index, question, high)
    # raising the threshold can only drop the match, never create or change it
    if at_high is not None:
        assert at_low == at_high


@settings(max_examples=40, deadline=None)
@given(docs=_corpus_strategy(), question=_PHRASE)
def test_single_topic_strategy_coincidence(docs, question):
    docs = [("Only", article) for _t, article in docs]
    combined = query_combined(build_index(docs), question, 0.0)
    segmented = query_segmented({"Only": build_index(docs)}, question, 0.0)
    assert combined == segmented


@settings(max_examples=40, deadline=None)
@given(docs=_corpus_strategy(), question=_PHRASE)
def test_doubled_body_leaves_scores_unchanged(docs, question):
    doubled = [(t, Article(a.article_id, a.title, a.body + " " + a.body))
               for t, a in docs]
    before = query_combined(build_index(docs), question, 0.0)
    after = query_combined(build_index(doubled), question, 0.0)
    if before is None:
        assert after is None
    else:
        assert (after.topic, after.article_id) == (before.topic, before.article_id)
        assert after.score == pytest.approx(before.score, abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(docs=_corpus_strategy())
def test_doc_vectors_unit_norm(docs):
    index = build_index(docs)
    for vector in index.doc_vectors:
        norm = math.sqrt(sum(w * w for w in vector.values()))
        assert norm == pytest.approx(1.0, abs=1e-9)
    for term, df in index.doc_freq.items():
        assert 1 <= df <= index.doc_count
        assert term in index.vocabulary


@settings(max_examples=30, deadline=None)
@given(docs=_corpus_strategy())
def test_self_similarity_property(docs):
    index = build_index(docs)
    for topic, article in docs:
        text = article.title + " " + article.body
        match = query_combined(index, text, threshold=0.0)
        assert match is not None
        assert match.score == pytest.approx(1.0, abs=1e-9)
