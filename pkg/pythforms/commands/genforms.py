import logging
from typing import Tuple

import click
from pydantic import ValidationError

from pythforms.commands.common import emit, format_option, out_option, run_config
from pythforms.core.config import get_settings
from pythforms.models.general import GeneralForm
from pythforms.services.genform_service import GenFormService
from pythforms.services.table_service import TableService
from pythforms.utils.render import render_table

logger = logging.getLogger(__name__)


def _parse_form(text: str) -> GeneralForm:
    try:
        k, l = (int(part) for part in text.split(","))  # noqa: E741
        return GenFormService.make_form(k, l)
    except ValueError as e:
        detail = e.errors()[0]["msg"].removeprefix("Value error, ") if isinstance(e, ValidationError) else "expected k,l"
        raise click.BadParameter(f"{text}: {detail}", param_hint="--form")


@click.command()
@click.option(
    "--form",
    "forms",
    multiple=True,
    default=("8,3", "32,5"),
    show_default=True,
    help="A general form (a + lb)² - kb² as k,l; repeatable.",
)
@click.option("--a-max", type=int, default=None, help="Largest generator a [default: 10].")
@click.option("--limit", type=int, default=None, help="Number of rows [default: 20].")
@format_option
@out_option
def genforms(forms: Tuple[str, ...], a_max, limit, output_format, out):
    """Values of generalized forms over the first Pythagorean generator pairs."""
    config = run_config("genforms", output_format=output_format, out=out)
    settings = get_settings()
    a_max = settings.general_a_max if a_max is None else a_max
    limit = settings.general_rows if limit is None else limit
    if a_max < 2:
        raise click.BadParameter(f"must be at least 2, got {a_max}", param_hint="--a-max")
    if limit < 1:
        raise click.BadParameter(f"must be positive, got {limit}", param_hint="--limit")

    table = TableService.general_table([_parse_form(text) for text in forms], a_max, limit)
    for note in table.notes:
        logger.warning(f"Printed annotation differs: {note}")
    emit(render_table(table, config.output_format), config.out)
