"""Extractive QA model served behind the gateway's remote comprehension contract."""

from .model import InferenceError, ReaderModel, SpanPrediction
from .server import create_app

__version__ = "0.1.0"

__all__ = ["InferenceError", "ReaderModel", "SpanPrediction", "create_app"]
