"""Options and helpers shared by every subcommand."""
import logging
from pathlib import Path
from typing import Optional

import click
from pydantic import ValidationError

from pythforms.models.report import OutputFormat, RunConfig

logger = logging.getLogger(__name__)

format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.MARKDOWN.value,
    show_default=True,
    help="Output format.",
)
out_option = click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write to this file instead of standard output.",
)
jobs_option = click.option(
    "--jobs",
    type=click.IntRange(min=1),
    default=None,
    help="Worker processes [default: number of processors].",
)


def run_config(command: str, **flags) -> RunConfig:
    """Validate parsed flags, turning pydantic errors into usage errors"""
    try:
        return RunConfig(command=command, **flags)
    except ValidationError as e:
        message = "; ".join(err["msg"].removeprefix("Value error, ") for err in e.errors())
        raise click.UsageError(message)


def emit(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    Path(out).write_text(text, encoding="utf-8")
    logger.info(f"Wrote {len(text)} characters to {out}")
