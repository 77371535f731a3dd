"""Command line entry points: serve the gateway, run evaluations."""

from __future__ import annotations

import logging
import sys
from pathlib import Path

import click

from . import evaluation as ev
from .kb import KnowledgeBaseError, fetch_kb, load_config, parse_kb, KnowledgeBase
from .service import CONFIG_ENV_VAR, Gateway, StartupError, create_app, _resolve_source


@click.group()
def main() -> None:
    """Topic-scoped question answering gateway and its evaluation tools."""


@main.command()
@click.option("--config", "config_path", envvar=CONFIG_ENV_VAR, required=True,
              type=click.Path(exists=True, dir_okay=False),
              help=f"Deployment config (or set {CONFIG_ENV_VAR}).")
@click.option("--port", default=8080, show_default=True, type=int)
@click.option("--host", default="0.0.0.0", show_default=True)
@click.option("--log-level", default="info", show_default=True,
              type=click.Choice(["critical", "error", "warning", "info", "debug"]))
@click.option("--ui-dir", default=None, type=click.Path(file_okay=False),
              help="Directory of built demo UI assets to mount at /ui.")
def serve(config_path: str, port: int, host: str, log_level: str, ui_dir: str | None) -> None:
    """Load KBs per the config and serve the QA endpoint."""
    import uvicorn

    logging.basicConfig(level=log_level.upper())
    try:
        gateway = Gateway.from_config_path(config_path)
    except StartupError as exc:
        raise click.ClickException(str(exc))
    if ui_dir is None and Path("frontend/dist").is_dir():
        ui_dir = "frontend/dist"
    app = create_app(gateway, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level=log_level)


@main.group("eval")
def eval_group() -> None:
    """Offline evaluation of the pipeline stages."""


@eval_group.command("question-id")
@click.option("--corpus", "corpus_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON array of {text, label} items.")
def eval_question_id_cmd(corpus_path: str) -> None:
    """Confusion matrix of the rule-based question identifier."""
    corpus = _load(ev.load_labeled_texts, corpus_path)
    matrix = _run(lambda: ev.eval_question_id(corpus))
    click.echo("                      predicted")
    click.echo("                      question  statement")
    click.echo(f"actual question     {matrix.true_question_pred_question:9d}  {matrix.true_question_pred_statement:9d}")
    click.echo(f"actual statement    {matrix.true_statement_pred_question:9d}  {matrix.true_statement_pred_statement:9d}")
    click.echo(f"accuracy: {matrix.accuracy:.4f}")
    click.echo(f"question false negative rate: {matrix.question_false_negative_rate:.4f}")


@eval_group.command("search")
@click.option("--questions", "questions_path", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--config", "config_path", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--strategy", type=click.Choice(["combined", "segmented"]), default=None,
              help="Override the config's search strategy.")
def eval_search_cmd(questions_path: str, config_path: str, strategy: str | None) -> None:
    """Per-topic accuracy of question-to-article matching."""
    questions = _load(ev.load_labeled_questions, questions_path)
    config, kbs = _load_kbs(config_path)
    rows = _run(lambda: ev.eval_search(
        questions, kbs, strategy or config.search_strategy, config.threshold))
    click.echo(f"strategy: {strategy or config.search_strategy}   "
               f"threshold: {config.threshold:g}")
    for row in rows:
        click.echo(f"{row.topic:24s} {row.correct:4d}/{row.total:<4d} "
                   f"accuracy {row.accuracy:.4f}")


@eval_group.command("sweep")
@click.option("--questions", "questions_path", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--config", "config_path", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--from", "start", default=0.10, show_default=True, type=float)
@click.option("--to", "stop", default=0.30, show_default=True, type=float)
@click.option("--step", default=0.01, show_default=True, type=float)
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.option("--strategy", type=click.Choice(["combined", "segmented"]), default=None,
              help="Override the config's search strategy.")
def eval_sweep_cmd(questions_path: str, config_path: str, start: float, stop: float,
                   step: float, out_path: str, strategy: str | None) -> None:
    """Sweep the off-topic threshold and write accuracy curves as CSV."""
    questions = _load(ev.load_labeled_questions, questions_path)
    config, kbs = _load_kbs(config_path)
    rows = _run(lambda: ev.threshold_sweep(
        questions, kbs, strategy or config.search_strategy, start, stop, step))
    ev.write_sweep_csv(rows, out_path)
    click.echo(f"wrote {len(rows)} rows to {out_path}")


def _load(loader, path: str):
    try:
        return loader(Path(path).read_bytes())
    except (KnowledgeBaseError, OSError) as exc:
        raise click.ClickException(f"{path}: {exc}")


def _load_kbs(config_path: str):
    path = Path(config_path)
    try:
        config = load_config(path.read_bytes())
        base_dir = path.resolve().parent
        kbs = []
        for topic in config.topics:
            source = _resolve_source(topic.kb_source, base_dir)
            kbs.append(KnowledgeBase(topic.name, tuple(parse_kb(fetch_kb(source)))))
    except KnowledgeBaseError as exc:
        raise click.ClickException(f"{config_path}: {exc}")
    return config, kbs


def _run(thunk):
    try:
        return thunk()
    except ev.EvalError as exc:
        raise click.ClickException(str(exc))


if __name__ == "__main__":
    main()
