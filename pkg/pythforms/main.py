import logging

import click

from pythforms import __version__
from pythforms.commands import classify, genforms, ledger, represent, sweep, triples, triplets
from pythforms.core.config import get_settings

logger = logging.getLogger(__name__)


@click.group()
@click.option("--log-level", default=None, help="Override the configured log level.")
@click.version_option(__version__, prog_name="pythforms")
def cli(log_level):
    """Pythagorean binary quadratic forms: tables, representations and sweeps."""
    settings = get_settings()
    # Logs go to stderr; stdout carries only rendered output
    logging.basicConfig(
        level=(log_level or settings.log_level).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logger.debug(f"{settings.app_name} started with {settings.jobs} workers available")


# commands
cli.add_command(triples.triples)
cli.add_command(represent.represent)
cli.add_command(classify.classify)
cli.add_command(triplets.triplets)
cli.add_command(genforms.genforms)
cli.add_command(sweep.sweep)
cli.add_command(ledger.ledger)


def main():
    cli()


if __name__ == "__main__":
    main()
