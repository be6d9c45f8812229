import logging

import click

from haemers import __version__
from haemers.commands.bounds import command as bounds_command
from haemers.commands.chif import command as chif_command
from haemers.commands.formulas import command as formulas_command
from haemers.commands.graph import command as graph_command
from haemers.commands.lift import command as lift_command
from haemers.commands.search import command as search_command
from haemers.commands.verify import command as verify_command
from haemers.core.config import settings

_logger = logging.getLogger(__name__)


@click.group()
@click.version_option(__version__, prog_name="haemers")
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker cap for per-vertex jobs.")
@click.option("--verbose", is_flag=True, help="Log at DEBUG level to stderr.")
def cli(threads, verbose):
    """Dual subspace representations, Mycielski lifts and their bounds."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )
    if threads is not None:
        settings.threads = threads
    _logger.debug(f"threads={settings.threads} max_cells={settings.max_cells}")


cli.add_command(lift_command)
cli.add_command(verify_command)
cli.add_command(search_command)
cli.add_command(bounds_command)
cli.add_command(chif_command)
cli.add_command(formulas_command)
cli.add_command(graph_command)


if __name__ == "__main__":
    cli()
