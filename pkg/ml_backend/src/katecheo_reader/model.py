"""Span extraction with a pre-trained extractive QA checkpoint.

The model loads once and is immutable afterwards; inference calls are
serialized through a lock. Contexts longer than the model window are
split into overlapping windows (tokenizer stride); candidate spans from
every window compete in one softmax, so the returned score is the
probability mass of the best span among all candidates and lands in
(0, 1]. Offsets are character indices into the original context string,
which makes the wire contract's slice check hold by construction.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional

import torch
from transformers import AutoModelForQuestionAnswering, AutoTokenizer

DEFAULT_MODEL = "distilbert-base-cased-distilled-squad"

# hard ceiling so a pathological checkpoint config cannot demand huge windows
_WINDOW_CEILING = 4096


class InferenceError(Exception):
    """The model could not produce any valid span for this input."""


@dataclass(frozen=True)
class SpanPrediction:
    text: str
    start: int
    end: int
    score: float


class ReaderModel:
    """One loaded checkpoint plus its tokenizer and windowing parameters."""

    def __init__(self, model_path: str = DEFAULT_MODEL,
                 max_length: Optional[int] = None,
                 stride: Optional[int] = None,
                 device: str = "cpu",
                 max_answer_tokens: int = 64):
        self.model_id = model_path
        self.device = torch.device(device)
        self.tokenizer = AutoTokenizer.from_pretrained(model_path)
        if not self.tokenizer.is_fast:
            raise ValueError("a fast tokenizer is required for offset mapping")
        self.model = AutoModelForQuestionAnswering.from_pretrained(model_path)
        self.model.to(self.device)
        self.model.eval()

        window = min(int(self.tokenizer.model_max_length),
                     int(getattr(self.model.config, "max_position_embeddings",
                                 _WINDOW_CEILING)),
                     _WINDOW_CEILING)
        if max_length is not None:
            window = min(window, max_length)
        self.max_length = window
        self.stride = stride if stride is not None else max(8, window // 4)
        self.max_answer_tokens = max_answer_tokens
        self._lock = threading.Lock()

    def answer(self, question: str, context: str) -> SpanPrediction:
        """Best span across all windows, scored by softmax over candidates."""
        with self._lock:
            return self._answer(question, context)

    def health(self) -> dict:
        return {
            "status": "ok",
            "model": self.model_id,
            "device": str(self.device),
            "window_tokens": self.max_length,
            "stride_tokens": self.stride,
        }

    def _answer(self, question: str, context: str) -> SpanPrediction:
        batch = self.tokenizer(
            question,
            context,
            truncation="only_second",
            max_length=self.max_length,
            stride=self.stride,
            return_overflowing_tokens=True,
            return_offsets_mapping=True,
            return_tensors="pt",
            padding=True,
        )
        offset_mapping = batch["offset_mapping"]
        n_windows = offset_mapping.shape[0]
        sequence_ids = [batch.sequence_ids(w) for w in range(n_windows)]
        inputs = {
            k: v.to(self.device) for k, v in batch.items()
            if k in ("input_ids", "attention_mask", "token_type_ids")
        }

        with torch.no_grad():
            output = self.model(**inputs)

        best_logit = None
        best_span: Optional[tuple[int, int]] = None
        window_lses = []
        for w in range(n_windows):
            candidates = self._window_candidates(
                output.start_logits[w], output.end_logits[w],
                sequence_ids[w], offset_mapping[w],
            )
            if candidates is None:
                continue
            logits, span_chars = candidates
            window_lses.append(torch.logsumexp(logits, dim=0))
            top = int(torch.argmax(logits))
            if best_logit is None or float(logits[top]) > best_logit:
                best_logit = float(logits[top])
                best_span = span_chars[top]

        if best_span is None:
            raise InferenceError("context produced no candidate answer span")

        total_lse = float(torch.logsumexp(torch.stack(window_lses), dim=0))
        score = float(torch.exp(torch.tensor(best_logit - total_lse)))
        score = min(max(score, 0.0), 1.0)
        char_start, char_end = best_span
        return SpanPrediction(context[char_start:char_end], char_start, char_end, score)

    def _window_candidates(self, start_logits, end_logits, sequence_ids, offsets):
        """Flattened (logits, char span) for every admissible span in a window.

        Admissible: both endpoints are context tokens with nonzero
        character width, start token <= end token, and the span covers at
        most max_answer_tokens tokens.
        """
        context_positions = [
            i for i, sid in enumerate(sequence_ids)
            if sid == 1 and int(offsets[i][1]) > int(offsets[i][0])
        ]
        if not context_positions:
            return None
        positions = torch.tensor(context_positions)
        starts = start_logits[positions]
        ends = end_logits[positions]

        n = len(context_positions)
        matrix = starts.unsqueeze(1) + ends.unsqueeze(0)      # [i, j] span logit
        rows = torch.arange(n).unsqueeze(1)
        cols = torch.arange(n).unsqueeze(0)
        allowed = (cols >= rows) & (cols - rows < self.max_answer_tokens)

        flat_logits = matrix[allowed]
        row_index = rows.expand(n, n)[allowed]
        col_index = cols.expand(n, n)[allowed]
        span_chars = [
            (int(offsets[context_positions[int(r)]][0]),
             int(offsets[context_positions[int(c)]][1]))
            for r, c in zip(row_index, col_index)
        ]
        return flat_logits, span_chars
