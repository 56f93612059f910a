import logging
import sys

import click

from hamcomp import __version__
from hamcomp.algorithms.completion import build_completion, verify_certificate
from hamcomp.commands import density_options, handle_errors, sample_graph
from hamcomp.models.certificate import CertificateStatus
from hamcomp.models.experiment import ExperimentConfig
from hamcomp.utils.graph_io import read_graph
from hamcomp.utils.reporting import write_document

logger = logging.getLogger(__name__)


@click.command('complete')
@click.option('--graph', 'graph_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Graph file (header `n m`, one `u v` per line).')
@density_options
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--engine', type=click.Choice(['exact', 'heuristic']), default='heuristic', show_default=True)
@click.option('--budget', type=int, default=None, help='Engine step budget.')
@click.option('--out', type=click.Path(dir_okay=False), default=None, help='Certificate path (default: stdout).')
@click.pass_obj
@handle_errors
def complete(settings, graph_path, n, d, p, m, seed, engine, budget, out):
    """Build and verify a completion certificate F with witness cycles."""
    if graph_path is not None:
        G = read_graph(graph_path)
        config = ExperimentConfig('complete', n=G.n, seed=seed, engine=engine, out=out, fmt='json',
                                  extra={'graph': graph_path})
    else:
        config = ExperimentConfig('complete', n=n, d=d, p=p, m=m, seed=seed, engine=engine, out=out, fmt='json')
        config.validate()
        G = sample_graph(config, seed)
    config.budget = budget if budget is not None else settings.ENGINE_BUDGET

    cert = build_completion(
        G, engine_mode=engine, budget=config.budget, seed=seed,
        cap=settings.EXHAUSTIVE_CAP, exact_cap=settings.EXACT_ENGINE_CAP
    )
    problems = verify_certificate(G, cert) if cert.ok else []
    if problems:
        logger.error(f"Certificate failed verification: {problems}")
        cert.fail(CertificateStatus.STRUCTURAL_FAILURE, '; '.join(problems))

    document = {'version': __version__, 'seed': seed, 'config': config.echo(), 'certificate': cert.to_dict()}
    if out is None:
        write_document(document, stream=click.get_text_stream('stdout'))
    else:
        write_document(document, path=out)

    if not cert.ok:
        logger.warning(f"Completion {cert.status.value}: {cert.reason}")
        sys.exit(cert.status.exit_code)
