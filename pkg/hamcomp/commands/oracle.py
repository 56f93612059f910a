import logging
import sys

import click

from hamcomp.algorithms.oracle import HAMILTONIAN_CAP
from hamcomp.algorithms.suites import run_suites
from hamcomp.commands import emit, handle_errors, stamp
from hamcomp.models.experiment import ExperimentConfig
from hamcomp.utils.errors import CapacityError

logger = logging.getLogger(__name__)

SUITE_FAILURE_EXIT = 6


@click.command('oracle')
@click.option('--trials', type=int, default=1, show_default=True, help='Suite size multiplier.')
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--max-n', type=int, default=10, show_default=True, help='Largest random instance.')
@click.option('--mutant', is_flag=True, hidden=True)
@click.option('--out', type=click.Path(), default=None)
@click.option('--format', 'fmt', type=click.Choice(['csv', 'json']), default='csv', show_default=True)
@click.pass_obj
@handle_errors
def oracle(settings, trials, seed, max_n, mutant, out, fmt):
    """Cross-check the fast algorithms against brute force on random small instances."""
    config = ExperimentConfig('oracle', n=max_n, trials=trials, seed=seed, out=out, fmt=fmt,
                              extra={'mutant': mutant})
    config.validate(need_density=False, minimum_n=3)
    if max_n > HAMILTONIAN_CAP:
        raise CapacityError(f"Oracle instances are capped at n={HAMILTONIAN_CAP}, got {max_n}",
                            size=max_n, cap=HAMILTONIAN_CAP)

    results = run_suites(seed, scale=trials, max_n=max_n, mutant=mutant)
    emit([stamp(result.to_dict(), config) for result in results], config)

    failed = [result.name for result in results if not result.passed]
    if failed:
        logger.error(f"Oracle suites failed: {', '.join(failed)}")
        sys.exit(SUITE_FAILURE_EXIT)
    logger.info(f"All {len(results)} oracle suites passed")
