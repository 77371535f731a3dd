"""Command line entry point for the reader service."""

from __future__ import annotations

import logging

import click

from .model import DEFAULT_MODEL, ReaderModel
from .server import create_app

MODEL_ENV_VAR = "KATECHEO_READER_MODEL"


@click.command()
@click.option("--model", "model_path", envvar=MODEL_ENV_VAR, default=DEFAULT_MODEL,
              show_default=True,
              help=f"Checkpoint name or local path (or set {MODEL_ENV_VAR}).")
@click.option("--port", default=9090, show_default=True, type=int)
@click.option("--host", default="0.0.0.0", show_default=True)
@click.option("--log-level", default="info", show_default=True,
              type=click.Choice(["critical", "error", "warning", "info", "debug"]))
@click.option("--max-length", default=None, type=int,
              help="Cap the token window (defaults to the model's own limit).")
@click.option("--stride", default=None, type=int,
              help="Overlap between windows for long contexts.")
@click.option("--device", default="cpu", show_default=True)
def main(model_path: str, port: int, host: str, log_level: str,
         max_length: int | None, stride: int | None, device: str) -> None:
    """Serve an extractive QA model behind POST /answer."""
    import uvicorn

    logging.basicConfig(level=log_level.upper())
    model = ReaderModel(model_path, max_length=max_length, stride=stride, device=device)
    logging.getLogger("katecheo_reader").info(
        "loaded %s (window %d tokens)", model.model_id, model.max_length)
    uvicorn.run(create_app(model), host=host, port=port, log_level=log_level)


if __name__ == "__main__":
    main()
