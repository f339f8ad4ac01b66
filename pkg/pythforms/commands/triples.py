import logging

import click

from pythforms.commands.common import emit, format_option, out_option, run_config
from pythforms.core.config import get_settings
from pythforms.core.errors import PythformsError
from pythforms.services.table_service import TableService
from pythforms.utils.render import render_table

logger = logging.getLogger(__name__)


@click.command()
@click.option("--a-max", type=int, default=None, help="Largest generator a [default: 7].")
@format_option
@out_option
def triples(a_max, output_format, out):
    """Primitive triples with their three form values, one row per (a, b)."""
    config = run_config("triples", output_format=output_format, out=out)
    a_max = get_settings().table_a_max if a_max is None else a_max
    if a_max < 2:
        raise click.BadParameter(f"must be at least 2, got {a_max}", param_hint="--a-max")
    try:
        table = TableService.triples_table(a_max)
    except PythformsError as e:
        logger.warning(f"Rejected input: {e}")
        raise click.UsageError(str(e))
    emit(render_table(table, config.output_format), config.out)
