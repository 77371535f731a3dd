"""Topic-scoped question answering gateway.

Routes an input text through rule-based question identification, TF-IDF
knowledge-base search with off-topic threshold filtering, and an
extractive comprehension backend, exposed as one REST endpoint.
"""

from .comprehension import Answer, BackendDescriptor, answer_baseline, answer_remote
from .kb import (
    Article,
    DeploymentConfig,
    KnowledgeBase,
    fetch_kb,
    load_config,
    parse_kb,
)
from .question_id import QuestionVerdict, identify
from .search import SearchMatch, TfIdfIndex, build_index, query_combined, query_segmented
from .service import Gateway, PipelineResponse, create_app
from .text import Sentence, Token, segment_sentences, tokenize

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "Article",
    "BackendDescriptor",
    "DeploymentConfig",
    "Gateway",
    "KnowledgeBase",
    "PipelineResponse",
    "QuestionVerdict",
    "SearchMatch",
    "Sentence",
    "TfIdfIndex",
    "Token",
    "answer_baseline",
    "answer_remote",
    "build_index",
    "create_app",
    "fetch_kb",
    "identify",
    "load_config",
    "parse_kb",
    "query_combined",
    "query_segmented",
    "segment_sentences",
    "tokenize",
]
