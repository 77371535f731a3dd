"""Shared text primitives: tokenization and sentence segmentation.

Every downstream stage (question rules, TF-IDF search, the baseline
answerer) runs on the same tokens, so this module stays deliberately
small and deterministic: no stemming, no stopword list, no language
detection. IDF weighting downstream already dampens ubiquitous terms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

# \w minus underscore == Unicode alphanumerics; a token is a maximal run.
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

_TERMINATORS = frozenset(".!?")


@dataclass(frozen=True)
class Token:
    surface: str
    position: int


@dataclass(frozen=True)
class Sentence:
    """A trimmed sentence; offsets index the original source string."""

    text: str
    start_offset: int
    end_offset: int


def tokenize(text: str) -> list[Token]:
    """Split on non-alphanumeric runs, lowercased, preserving order.

    The text is lowercased before splitting so that case mappings which
    introduce combining marks (e.g. 'İ') split the same way on every
    pass; re-tokenizing the joined tokens is then a no-op.
    """
    return [
        Token(match.group(0), position)
        for position, match in enumerate(_TOKEN_RE.finditer(text.lower()))
    ]


def token_surfaces(text: str) -> list[str]:
    """Just the token strings, for callers that ignore positions."""
    return [match.group(0) for match in _TOKEN_RE.finditer(text.lower())]


def segment_sentences(text: str) -> list[Sentence]:
    """Split after '.', '!' or '?' followed by whitespace or end of text.

    Surrounding whitespace is trimmed from each sentence but the offsets
    still index the source, so ``text[s.start_offset:s.end_offset] == s.text``
    for every returned sentence. Whitespace-only segments are dropped.
    """
    sentences: list[Sentence] = []
    segment_start = 0
    length = len(text)
    for i, ch in enumerate(text):
        if ch in _TERMINATORS and (i + 1 == length or text[i + 1].isspace()):
            _append_trimmed(text, segment_start, i + 1, sentences)
            segment_start = i + 1
    _append_trimmed(text, segment_start, length, sentences)
    return sentences


def _append_trimmed(source: str, start: int, end: int, out: list[Sentence]) -> None:
    while start < end and source[start].isspace():
        start += 1
    while end > start and source[end - 1].isspace():
        end -= 1
    if start < end:
        out.append(Sentence(source[start:end], start, end))
