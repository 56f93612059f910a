import functools
import logging
import math
import sys

import click
import numpy as np

from hamcomp import __version__
from hamcomp.algorithms.random_graphs import gen_gnm, gen_gnp
from hamcomp.utils.errors import HamcompError, ParameterError
from hamcomp.utils.reporting import ReportWriterFactory

logger = logging.getLogger(__name__)


def density_options(func):
    func = click.option('--m', 'm', type=int, default=None, help='Edge count for G(n,m).')(func)
    func = click.option('--p', 'p', type=float, default=None, help='Edge probability for G(n,p).')(func)
    func = click.option('--d', 'd', type=float, default=None, help='Average degree d = np.')(func)
    func = click.option('--n', 'n', type=int, default=None, help='Number of vertices.')(func)
    return func


def output_options(func):
    func = click.option('--format', 'fmt', type=click.Choice(['csv', 'json']), default='csv',
                        show_default=True)(func)
    func = click.option('--out', 'out', type=click.Path(), default=None,
                        help='Output path (default: stdout).')(func)
    func = click.option('--threads', type=int, default=None, help='Parallel trial workers.')(func)
    func = click.option('--seed', type=int, default=0, show_default=True)(func)
    func = click.option('--trials', type=int, default=1, show_default=True)(func)
    return func


def handle_errors(func):
    """Map artifact errors to their exit codes at the command boundary"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except HamcompError as e:
            logger.warning(f"{type(e).__name__}: {e}")
            click.echo(f"Error: {e}", err=True)
            sys.exit(e.exit_code)
        except ValueError as e:
            logger.warning(f"Invalid parameters: {e}")
            click.echo(f"Error: {e}", err=True)
            sys.exit(ParameterError.exit_code)
        except Exception as e:
            logger.error(f"Unexpected error: {str(e)}", exc_info=True)
            click.echo(f"Error: {e}", err=True)
            sys.exit(HamcompError.exit_code)

    return wrapper


def sample_graph(config, seed):
    """One graph from G(n,m) or G(n,p) per the configured density flag"""
    if config.m is not None:
        return gen_gnm(config.n, config.m, seed)
    return gen_gnp(config.n, config.probability, seed)


def stamp(record, config, seed=None):
    """Prefix a record with version, seed and the config echo"""
    stamped = {'version': __version__, 'seed': config.seed if seed is None else seed}
    stamped.update({f'cfg_{key}': value for key, value in config.echo().items() if value is not None})
    stamped.update(record)
    return stamped


def emit(records, config, columns=None, path=None):
    writer = ReportWriterFactory.create_writer(config.fmt, columns)
    target = path if path is not None else config.out
    if target is None:
        return writer.write(records, stream=click.get_text_stream('stdout'))
    logger.info(f"Writing {len(records)} records to {target}")
    return writer.write(records, path=target)


def parse_checkpoints(value, horizon):
    """Comma list of process times, or geom:<count> spaced geometrically up to horizon"""
    if value is None or value.strip() == '':
        return []
    value = value.strip()
    if value.startswith('geom:'):
        try:
            count = int(value[5:])
        except ValueError:
            raise ParameterError(f"Invalid checkpoint list: {value!r}")
        if count < 1 or horizon < 1:
            return []
        points = np.unique(np.round(np.geomspace(1, horizon, count)).astype(np.int64))
        return [int(t) for t in points]
    try:
        return [int(part) for part in value.split(',') if part.strip()]
    except ValueError:
        raise ParameterError(f"Invalid checkpoint list: {value!r}")


def default_horizon(n):
    """Process length used for geometric checkpoints: about n log n, capped at C(n,2)"""
    return min(n * (n - 1) // 2, int(math.ceil(n * math.log(max(n, 2)))))
