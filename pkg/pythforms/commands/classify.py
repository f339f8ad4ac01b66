import logging

import click

from pythforms.commands.common import emit, format_option, out_option, run_config
from pythforms.core.config import get_settings
from pythforms.core.errors import PythformsError
from pythforms.services.table_service import TableService
from pythforms.utils.render import render_table

logger = logging.getLogger(__name__)


@click.command()
@click.argument("n", type=int, required=False)
@click.option("--bound", type=int, default=None, help="Classify every odd N in [3, bound).")
@format_option
@out_option
def classify(n, bound, output_format, out):
    """Factorization and residue-set memberships of N or of every odd N below --bound."""
    config = run_config("classify", output_format=output_format, out=out, value=n, bound=bound)
    if config.value is None and config.bound is None:
        bound = get_settings().segregated_bound
    try:
        table = TableService.classify_table(n=config.value, bound=bound)
    except PythformsError as e:
        logger.warning(f"Rejected input: {e}")
        raise click.UsageError(str(e))
    emit(render_table(table, config.output_format), config.out)
