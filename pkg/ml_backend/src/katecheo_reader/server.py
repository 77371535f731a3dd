"""HTTP surface: POST /answer per the comprehension wire contract.

Success is status 200 with {"answer", "start", "end", "score"} where
context[start:end] == answer and score is in [0, 1]. Empty question or
context is a 422; an inference failure is a 500 with {"detail"}.
GET /health reports the loaded model identifier.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .model import InferenceError, ReaderModel


class AnswerRequest(BaseModel):
    question: str
    context: str


def create_app(model: ReaderModel) -> FastAPI:
    app = FastAPI(title="katecheo-reader", version="0.1.0")

    @app.post("/answer")
    def answer(request: AnswerRequest) -> JSONResponse:
        if not request.question.strip():
            raise HTTPException(status_code=422, detail="'question' must be non-empty")
        if not request.context.strip():
            raise HTTPException(status_code=422, detail="'context' must be non-empty")
        try:
            span = model.answer(request.question, request.context)
        except InferenceError as exc:
            raise HTTPException(status_code=500, detail=str(exc))
        except Exception as exc:  # model/tokenizer failure must not leak a traceback
            raise HTTPException(status_code=500, detail=f"inference failed: {exc}")
        return JSONResponse({
            "answer": span.text,
            "start": span.start,
            "end": span.end,
            "score": span.score,
        })

    @app.get("/health")
    def health() -> JSONResponse:
        return JSONResponse(model.health())

    return app
