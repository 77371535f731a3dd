"""Rule-based question detection.

An input counts as a question when it contains a question mark anywhere,
or when its first token is one of the 5W1H interrogatives (who, what,
when, where, why, how). The 5W1H check is restricted to the first token:
matching anywhere in the text would flag most declaratives that merely
mention "what" or "how". The verdict gates the rest of the pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .text import token_surfaces

WH_WORDS = frozenset({"who", "what", "when", "where", "why", "how"})

TRIGGER_QUESTION_MARK = "question_mark"
TRIGGER_WH_WORD = "wh_word"

Trigger = Literal["question_mark", "wh_word"]


@dataclass(frozen=True)
class QuestionVerdict:
    is_question: bool
    trigger: Optional[Trigger]

    def __post_init__(self) -> None:
        if self.is_question != (self.trigger is not None):
            raise ValueError("is_question must hold exactly when a trigger fired")


def identify(text: str) -> QuestionVerdict:
    """Classify text as question or statement; case-insensitive, pure."""
    if "?" in text:
        return QuestionVerdict(True, TRIGGER_QUESTION_MARK)
    tokens = token_surfaces(text)
    if tokens and tokens[0] in WH_WORDS:
        return QuestionVerdict(True, TRIGGER_WH_WORD)
    return QuestionVerdict(False, None)
