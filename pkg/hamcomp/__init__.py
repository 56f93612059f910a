import logging
import sys

import click
from dotenv import load_dotenv

from hamcomp.config import Config

__version__ = "0.1.0"

load_dotenv()


def create_cli():
    config = Config()

    # Logs go to stderr only; stdout carries results
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL, logging.INFO),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr
    )

    @click.group()
    @click.version_option(__version__, prog_name='hamcomp')
    @click.pass_context
    def cli(ctx):
        """Completion numbers of random graphs: estimate, simulate, certify, cross-check."""
        ctx.obj = config

    # Register commands
    from hamcomp.commands.estimate import estimate
    from hamcomp.commands.process import process
    from hamcomp.commands.complete import complete
    from hamcomp.commands.oracle import oracle
    from hamcomp.commands.core_stats import core_stats

    cli.add_command(estimate)
    cli.add_command(process)
    cli.add_command(complete)
    cli.add_command(oracle)
    cli.add_command(core_stats)

    return cli
