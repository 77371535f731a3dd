"""Fixtures: a tiny randomly initialized BERT QA checkpoint built locally.

Contract conformance (slice consistency, score range, windowing) does
not depend on trained weights, so the suite runs fully offline against
this stand-in. Qualitative answer checks live in test_spot_check and
need a real fine-tuned checkpoint.
"""

from __future__ import annotations

import pytest
import torch

_WORDS = (
    "the a an of to and in on for did say about what who where church "
    "scribes bible changed corrected theology fit their answer question "
    "context cat dog mat sores lips knee pain ice stars orbit moon water "
    "roses soil aspirin statins risk patients doctors"
).split()

_VOCAB = (["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"]
          + list("abcdefghijklmnopqrstuvwxyz0123456789")
          + _WORDS
          + [f"##{letter}" for letter in "sdegont"])


@pytest.fixture(scope="session")
def tiny_model_dir(tmp_path_factory):
    from transformers import BertConfig, BertForQuestionAnswering, BertTokenizerFast

    path = tmp_path_factory.mktemp("tiny-reader")
    (path / "vocab.txt").write_text("\n".join(_VOCAB))
    tokenizer = BertTokenizerFast(vocab_file=str(path / "vocab.txt"),
                                  do_lower_case=True)
    config = BertConfig(
        vocab_size=len(_VOCAB),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=96,
    )
    torch.manual_seed(1234)
    model = BertForQuestionAnswering(config)
    model.save_pretrained(path)
    tokenizer.save_pretrained(path)
    return path


@pytest.fixture(scope="session")
def reader(tiny_model_dir):
    from katecheo_reader import ReaderModel

    return ReaderModel(str(tiny_model_dir), max_length=48, stride=12)


@pytest.fixture(scope="session")
def client(reader):
    from fastapi.testclient import TestClient

    from katecheo_reader import create_app

    return TestClient(create_app(reader))
