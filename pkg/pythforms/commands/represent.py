import logging

import click
from pydantic import ValidationError

from pythforms.commands.common import emit, format_option, out_option, run_config
from pythforms.core.config import get_settings
from pythforms.core.errors import PythformsError
from pythforms.models.form import FormKind
from pythforms.services.genform_service import GenFormService
from pythforms.services.table_service import TableService
from pythforms.utils.render import render_table

logger = logging.getLogger(__name__)

KINDS = [kind.value for kind in FormKind] + ["segregated", "general"]


@click.command()
@click.argument("n", type=int, required=False)
@click.option("--bound", type=int, default=None, help="List every odd prime below this bound.")
@click.option("--kind", type=click.Choice(KINDS), default="segregated", show_default=True)
@click.option("--k", "k", type=int, default=8, show_default=True, help="k of the general form.")
@click.option("--l", "l", type=int, default=3, show_default=True, help="l of the general form.")  # noqa: E741
@format_option
@out_option
def represent(n, bound, kind, k, l, output_format, out):  # noqa: E741
    """
    Representations of N, or of every odd prime below --bound.

    With neither given, lists the segregated representations of the primes
    below 100 side by side.
    """
    config = run_config("represent", output_format=output_format, out=out, value=n, bound=bound)
    if config.value is None and config.bound is None:
        bound = get_settings().segregated_bound

    try:
        form = GenFormService.make_form(k, l) if kind == "general" else None
    except ValidationError as e:
        raise click.BadParameter(e.errors()[0]["msg"].removeprefix("Value error, "), param_hint="--k/--l")

    try:
        table = TableService.representation_table(kind, n=config.value, bound=bound, form=form)
    except PythformsError as e:
        logger.warning(f"Rejected input: {e}")
        raise click.UsageError(str(e))
    emit(render_table(table, config.output_format), config.out)
