import click

from pythforms.commands.common import emit, format_option, out_option, run_config
from pythforms.core.ledger import list_runs
from pythforms.models.report import TableData
from pythforms.utils.render import render_table

COLUMNS = ["id", "check", "bound", "status", "checked", "counterexamples", "elapsed", "finished_at"]


@click.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--check", default=None, help="Only runs of this check.")
@format_option
@out_option
def ledger(path, check, output_format, out):
    """List the sweep runs recorded in a ledger file."""
    config = run_config("ledger", output_format=output_format, out=out)
    table = TableData(columns=COLUMNS, records=list_runs(path, check), title=f"runs in {path}")
    emit(render_table(table, config.output_format), config.out)
