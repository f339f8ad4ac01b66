import logging

import click

from pythforms.commands.common import emit, format_option, jobs_option, out_option, run_config
from pythforms.core.config import get_settings
from pythforms.core.errors import PythformsError
from pythforms.core.ledger import record_run
from pythforms.services.sweep_service import SweepService
from pythforms.utils.render import render_report

logger = logging.getLogger(__name__)


@click.command()
@click.argument("check")
@click.option("--bound", type=int, default=None, help="Sweep bound [default: per check].")
@click.option("--samples", type=int, default=None, help="Sample count for sampled checks.")
@click.option("--seed", type=int, default=None, help="Random seed for sampled checks.")
@click.option("--ledger", "ledger_path", type=click.Path(dir_okay=False), default=None, help="Record the run in this ledger.")
@jobs_option
@format_option
@out_option
@click.pass_context
def sweep(ctx, check, bound, samples, seed, ledger_path, jobs, output_format, out):
    """
    Run the named check and print its report.

    Exits with status 1 when a non-exploratory check finds counterexamples.
    """
    config = run_config("sweep", output_format=output_format, out=out, bound=bound, jobs=jobs or get_settings().jobs)
    try:
        report = SweepService.run(check, bound=config.bound, samples=samples, seed=seed, jobs=config.jobs)
    except PythformsError as e:
        logger.warning(f"Rejected input: {e}")
        raise click.UsageError(str(e))

    emit(render_report(report, config.output_format), config.out)

    ledger_path = ledger_path or get_settings().ledger_path
    if ledger_path:
        record_run(report, ledger_path)
    if not report.passed:
        ctx.exit(1)
