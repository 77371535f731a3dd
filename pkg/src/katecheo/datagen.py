"""Deterministic synthetic corpora for evaluation and fixtures.

Nothing here is downloaded: the question/statement corpus imitates the
texture of a reading-comprehension dev split (interrogatives of several
shapes, declarative sentences lifted from encyclopedic prose), and the
two-topic article sample imitates Stack-Exchange style Q&A articles with
mostly disjoint vocabularies. Both are seeded and reproducible, so tests
and scripts can regenerate byte-identical data.

The question/statement mix is intentionally asymmetric, matching how the
first-token 5W1H rule behaves on real prose: questions lacking both a
question mark and a leading interrogative are rare (imperative phrasings
like "Name the ..."), while statements that open with a subordinate
wh-clause ("When the war ended, ...") are fairly common. The generated
corpus therefore produces few false negatives and noticeably more false
positives.
"""

from __future__ import annotations

import random
from typing import Sequence

from .evaluation import LabeledQuestion, LabeledText
from .kb import Article, KnowledgeBase
from .question_id import identify

_NAMES = [
    "Marie Curie", "Nikola Tesla", "Ada Lovelace", "Alan Turing",
    "Rosalind Franklin", "Charles Darwin", "Isaac Newton", "Grace Hopper",
    "Katherine Johnson", "Leonhard Euler", "Emmy Noether", "Michael Faraday",
]
_PLACES = [
    "Paris", "Warsaw", "Kyoto", "Cairo", "Lisbon", "Edinburgh", "Prague",
    "the Baltic coast", "the Andes", "the Rhine valley", "New England",
]
_NOUNS = [
    "observatory", "railway", "cathedral", "reservoir", "lighthouse",
    "printing house", "aqueduct", "shipyard", "library", "foundry",
    "botanical garden", "clock tower",
]
_PLURALS = [
    "manuscripts", "bridges", "windmills", "canals", "telescopes",
    "engravings", "locomotives", "archives", "frescoes", "granaries",
]
_EVENTS = [
    "flood", "great fire", "long drought", "border dispute", "harsh winter",
    "economic panic", "earthquake",
]

_QUESTION_WH_QM = [
    "What is the capital of {place}?",
    "When did {name} move to {place}?",
    "Who designed the {noun} in {place}?",
    "Where was {name} born?",
    "Why did the {noun} close in {year}?",
    "How many {plural} were built between {year} and {year2}?",
    "What did {name} publish in {year}?",
    "Which {noun} survived the {event}?",
    "In what year did the {noun} open?",
]
_QUESTION_AUX_QM = [
    "Did {name} ever visit {place}?",
    "Was the {noun} completed by {year}?",
    "Is the {noun} still in use?",
    "Can {plural} be restored?",
    "Are there {plural} in {place}?",
    "Does the {noun} in {place} still stand?",
]
_QUESTION_WH_PLAIN = [
    "Why do {plural} matter to historians",
    "How did {name} describe the {noun}",
    "What happened to the {noun} after {year}",
    "Where did {name} keep the {plural}",
    "Who restored the {noun} in {place}",
    "When was the {noun} in {place} abandoned",
]
_QUESTION_MISSED = [
    "Name the architect of the {noun} in {place}.",
    "Describe the purpose of the {noun}.",
    "List the {plural} mentioned in the passage.",
    "Identify the {noun} that replaced it.",
    "Explain the decline of the {noun} after {year}.",
    "Did the {noun} reopen after the {event}",
]
_STATEMENT_CLEAN = [
    "The {noun} in {place} opened in {year}.",
    "{name} published a study of {plural} in {year}.",
    "Construction of the {noun} began in {year} and lasted nine years.",
    "Several {plural} were damaged during the {event}.",
    "In {year}, the {noun} was restored by local craftsmen.",
    "{name} later moved to {place} to continue the work.",
    "The region exported {plural} for most of the century.",
    "A second {noun} was added beside the old {noun2}.",
    "By {year}, the {noun} employed over two hundred workers.",
    "Records from {place} mention the {noun} as early as {year}.",
]
_STATEMENT_WH_LEAD = [
    "When the {event} ended, the {noun} was rebuilt.",
    "Where the river bends, early settlers raised a {noun}.",
    "How the {noun} survived the {event} remains a subject of debate.",
    "What began as a modest {noun} grew into a famous {noun2}.",
    "Why the project stalled in {year} was never recorded.",
    "Who would inherit the {noun} remained unsettled for decades.",
]
_STATEMENT_WITH_QM = [
    "The pamphlet bore the title An End to {plural}?.",
    "Critics mocked the slogan Progress at What Cost? for years.",
    "Her essay Why {plural}? appeared in {year}.",
]


def question_id_corpus(n_questions: int = 3000, n_statements: int = 3000,
                       seed: int = 13) -> list[LabeledText]:
    """Questions and statement sentences with a dev-split-like mix."""
    rng = random.Random(seed)

    n_missed = round(n_questions * 0.004)
    n_wh_plain = round(n_questions * 0.046)
    n_qm = n_questions - n_missed - n_wh_plain
    n_wh_qm = round(n_qm * 0.72)
    question_plan = [
        (_QUESTION_WH_QM, n_wh_qm, True),
        (_QUESTION_AUX_QM, n_qm - n_wh_qm, True),
        (_QUESTION_WH_PLAIN, n_wh_plain, True),
        (_QUESTION_MISSED, n_missed, False),
    ]

    n_fp_wh = round(n_statements * 0.11)
    n_fp_qm = round(n_statements * 0.0017)
    statement_plan = [
        (_STATEMENT_CLEAN, n_statements - n_fp_wh - n_fp_qm, False),
        (_STATEMENT_WH_LEAD, n_fp_wh, True),
        (_STATEMENT_WITH_QM, n_fp_qm, True),
    ]

    corpus: list[LabeledText] = []
    for templates, count, predicted_question in question_plan:
        corpus.extend(
            _render_bucket(rng, templates, count, "question", predicted_question)
        )
    for templates, count, predicted_question in statement_plan:
        corpus.extend(
            _render_bucket(rng, templates, count, "statement", predicted_question)
        )
    rng.shuffle(corpus)
    return corpus


def _render_bucket(rng: random.Random, templates: Sequence[str], count: int,
                   label: str, predicted_question: bool) -> list[LabeledText]:
    items = []
    for _ in range(count):
        text = _fill(rng, rng.choice(templates))
        # Each bucket has a known verdict; a template edit that breaks
        # that silently would skew every accuracy figure downstream.
        if identify(text).is_question != predicted_question:
            raise ValueError(f"template produced unexpected verdict: {text!r}")
        items.append(LabeledText(text, label))
    return items


def _fill(rng: random.Random, template: str) -> str:
    year = rng.randint(1680, 1995)
    values = {
        "name": rng.choice(_NAMES),
        "place": rng.choice(_PLACES),
        "noun": rng.choice(_NOUNS),
        "noun2": rng.choice(_NOUNS),
        "plural": rng.choice(_PLURALS),
        "event": rng.choice(_EVENTS),
        "year": year,
        "year2": year + rng.randint(3, 40),
    }
    return template.format(**values)


_GARDEN_ADJS = ["heirloom", "dwarf", "climbing", "hardy", "variegated",
                "trailing", "alpine", "fragrant", "compact", "golden"]
_GARDEN_PLANTS = ["tomatoes", "ferns", "roses", "lavender", "carrots",
                  "geraniums", "clematis", "hostas", "dahlias", "peonies",
                  "basil", "irises", "tulips", "sage", "marigolds"]
_GARDEN_SOILS = ["sandy loam", "well drained", "slightly acidic", "chalky", "peaty"]
_GARDEN_LIGHT = ["full sun", "partial shade", "morning light"]
_GARDEN_WATER = ["twice a week", "sparingly", "deeply once a week", "every few days"]
_GARDEN_PESTS = ["aphids", "slugs", "spider mites", "whiteflies", "vine weevils"]
_GARDEN_MULCH = ["bark chips", "straw", "leaf mould", "garden compost"]

_SKY_ADJS = ["binary", "dwarf", "spiral", "variable", "distant", "young",
             "massive", "lenticular", "irregular", "ancient"]
_SKY_OBJECTS = ["star clusters", "galaxies", "nebulae", "pulsars", "exoplanets",
                "comets", "quasars", "supernovae", "asteroids", "meteor showers",
                "binaries", "protostars"]
_SKY_INSTRUMENTS = ["a small refractor", "a wide field telescope",
                    "adaptive optics", "a radio dish", "an orbiting observatory"]
_SKY_BANDS = ["the infrared", "radio wavelengths", "visible light", "the ultraviolet"]
_SKY_SURVEYS = ["sky survey", "photometric catalogue", "spectroscopic archive"]


def topic_sample(articles_per_topic: int = 25, questions_per_topic: int = 15,
                 off_topic_questions: int = 12,
                 seed: int = 7) -> tuple[list[KnowledgeBase], list[LabeledQuestion]]:
    """Two-topic article sample plus labeled on/off-topic questions.

    Each article gets a distinctive subject phrase so that most questions
    have one clearly best article; whether retrieval finds it is exactly
    what the evaluation measures.
    """
    rng = random.Random(seed)
    garden_subjects = _distinct_subjects(rng, _GARDEN_ADJS, _GARDEN_PLANTS,
                                         articles_per_topic)
    sky_subjects = _distinct_subjects(rng, _SKY_ADJS, _SKY_OBJECTS,
                                      articles_per_topic)

    gardening = KnowledgeBase("Gardening", tuple(
        _garden_article(rng, i, subject) for i, subject in enumerate(garden_subjects)
    ))
    astronomy = KnowledgeBase("Astronomy", tuple(
        _sky_article(rng, i, subject) for i, subject in enumerate(sky_subjects)
    ))

    questions: list[LabeledQuestion] = []
    for kb, subjects, templates in (
        (gardening, garden_subjects, _GARDEN_QUESTIONS),
        (astronomy, sky_subjects, _SKY_QUESTIONS),
    ):
        targets = rng.sample(range(len(subjects)), min(questions_per_topic, len(subjects)))
        for i in targets:
            template = rng.choice(templates)
            questions.append(LabeledQuestion(
                text=template.format(subject=subjects[i]),
                expected_topic=kb.topic,
                expected_article_id=kb.articles[i].article_id,
            ))
    for _ in range(off_topic_questions):
        questions.append(LabeledQuestion(_fill_off_topic(rng), None, None))
    rng.shuffle(questions)
    return [gardening, astronomy], questions


_GARDEN_QUESTIONS = [
    "How often should {subject} be watered?",
    "What kind of soil do {subject} prefer?",
    "When should I prune {subject}?",
    "Which pests attack {subject}?",
]
_SKY_QUESTIONS = [
    "What instrument do I need to observe {subject}?",
    "How far away are {subject}?",
    "In which wavelengths do {subject} shine?",
    "How are {subject} catalogued?",
]
_OFF_TOPIC_TEMPLATES = [
    "Who scored the winning goal in the {year} cup final?",
    "Which film won best picture in {year}?",
    "How many laps remain in a standard relay race?",
    "When does the sequel premiere in cinemas?",
    "What team drafted the quarterback first overall in {year}?",
    "Who directed the highest grossing musical of {year}?",
]


def _distinct_subjects(rng: random.Random, adjs: Sequence[str],
                       nouns: Sequence[str], count: int) -> list[str]:
    combos = [f"{a} {n}" for a in adjs for n in nouns]
    return rng.sample(combos, count)


def _garden_article(rng: random.Random, i: int, subject: str) -> Article:
    sentences = [
        f"{subject.capitalize()} prefer {rng.choice(_GARDEN_SOILS)} soil "
        f"and {rng.choice(_GARDEN_LIGHT)}.",
        f"Water {subject} {rng.choice(_GARDEN_WATER)} during the growing season.",
        f"Prune {subject} after flowering to encourage new growth.",
        f"Common pests include {rng.choice(_GARDEN_PESTS)} and "
        f"{rng.choice(_GARDEN_PESTS)}.",
        f"Mulch with {rng.choice(_GARDEN_MULCH)} to retain moisture.",
    ]
    rng.shuffle(sentences)
    return Article(
        article_id=f"garden-{i:03d}",
        title=f"How do I care for {subject}?",
        body=" ".join(sentences),
    )


def _sky_article(rng: random.Random, i: int, subject: str) -> Article:
    sentences = [
        f"Observing {subject} requires {rng.choice(_SKY_INSTRUMENTS)}.",
        f"{subject.capitalize()} emit most of their energy in {rng.choice(_SKY_BANDS)}.",
        f"The nearest {subject} lie roughly {rng.randint(4, 9000)} light years away.",
        f"Astronomers catalogue {subject} using {rng.choice(_SKY_SURVEYS)} data.",
        f"Long exposures reveal the faint structure around {subject}.",
    ]
    rng.shuffle(sentences)
    return Article(
        article_id=f"sky-{i:03d}",
        title=f"What should I know before observing {subject}?",
        body=" ".join(sentences),
    )


def _fill_off_topic(rng: random.Random) -> str:
    return rng.choice(_OFF_TOPIC_TEMPLATES).format(year=rng.randint(1970, 2019))
