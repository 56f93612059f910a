import click

from hamcomp.algorithms.strong_core import core_summary
from hamcomp.commands import density_options, emit, handle_errors, output_options, sample_graph, stamp
from hamcomp.models.experiment import ExperimentConfig
from hamcomp.utils.trials import run_trials


def core_trial(trial, seed, config):
    G = sample_graph(config, seed)
    summary = core_summary(G, d=config.density if config.density > 0 else None)
    return {'record': 'trial', 'trial': trial, 'trial_seed': seed, **summary}


@click.command('core-stats')
@density_options
@output_options
@click.pass_obj
@handle_errors
def core_stats(settings, n, d, p, m, trials, seed, threads, out, fmt):
    """Strong 4-core partition statistics per sampled graph."""
    config = ExperimentConfig('core-stats', n=n, d=d, p=p, m=m, trials=trials, seed=seed,
                              out=out, fmt=fmt, threads=threads or settings.THREADS)
    config.validate()
    rows = run_trials(core_trial, config.trials, config.seed, threads=config.threads, config=config)
    emit([stamp(row, config, seed=row['trial_seed']) for row in rows], config)
