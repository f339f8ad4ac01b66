import logging

import click

from pythforms.commands.common import emit, format_option, jobs_option, out_option, run_config
from pythforms.core.config import get_settings
from pythforms.models.triplet import FlavorFilter
from pythforms.services.table_service import TableService
from pythforms.services.triplet_service import TripletService
from pythforms.utils.render import render_table

logger = logging.getLogger(__name__)


def _default_r_max(flavor_filter: FlavorFilter) -> int:
    settings = get_settings()
    return {
        FlavorFilter.ALL: settings.r_max,
        FlavorFilter.ALL_ONE: settings.all_one_r_max,
        FlavorFilter.NONE_ONE: settings.none_one_r_max,
    }[flavor_filter]


@click.command()
@click.option("--r-max", type=int, default=None, help="Largest inradius [default: 105, 216 or 273 by flavor].")
@click.option("--flavor", type=click.Choice([f.value for f in FlavorFilter]), default="all", show_default=True)
@jobs_option
@format_option
@out_option
def triplets(r_max, flavor, jobs, output_format, out):
    """Pythagorean prime triplets sorted by (r, p13), with gap statistics."""
    config = run_config(
        "triplets",
        output_format=output_format,
        out=out,
        r_max=r_max,
        flavor=flavor,
        jobs=jobs or get_settings().jobs,
    )
    r_max = config.r_max or _default_r_max(config.flavor)
    records = TripletService.search(r_max, config.flavor, config.jobs)
    logger.info(f"Found {len(records)} triplets with r <= {r_max}")
    table = TableService.triplet_table(records, r_max, config.flavor)
    emit(render_table(table, config.output_format), config.out)
