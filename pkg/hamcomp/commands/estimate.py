import logging
import math

import click
import pandas as pd

from hamcomp.algorithms.local_estimator import eval_f_approx, mu_k_estimate
from hamcomp.algorithms.motifs import count_motifs, expected_lb_closed_form
from hamcomp.algorithms.path_cover import mu_prime
from hamcomp.algorithms.strong_core import ab_components, strong_core
from hamcomp.commands import density_options, emit, handle_errors, output_options, sample_graph, stamp
from hamcomp.models.experiment import ExperimentConfig
from hamcomp.utils.errors import CapacityError
from hamcomp.utils.reporting import summarize
from hamcomp.utils.trials import run_trials
from hamcomp.utils.validators import validate_radius

logger = logging.getLogger(__name__)

METRICS = ['mu_prime_over_n', 'mu_k_over_n', 'lb_over_n', 'a_over_n', 'prespider_sum_over_n']
COLUMNS = ['record', 'trial', 'trial_seed'] + METRICS + ['truncated', 'over_cap', 'f_approx', 'expected_lb', 'error']


def estimate_trial(trial, seed, config, cap):
    """
    One sampled graph: mu'/n, mu_k/n and the motif lower bounds.

    The motif columns never depend on mu'. When a component of G^AB is beyond
    the cover caps, mu'/n and a/n are NaN and the error column says why.
    """
    G = sample_graph(config, seed)
    part = strong_core(G)
    comps = ab_components(G, part)
    n = G.n
    error = ''
    try:
        result = mu_prime(G, part, comps, cap=cap)
        mu_prime_over_n, a_over_n = result.mu_prime / n, result.a_total / n
    except CapacityError as e:
        logger.warning(f"trial {trial}: mu' not computed, core size {len(part.C)}: {e}")
        error = f"trial {trial}: {e}"
        mu_prime_over_n = a_over_n = math.nan
    counts = count_motifs(G)
    d = config.density
    if d > 0:
        report = mu_k_estimate(G, config.k, d, cap=cap)
        mu_k, truncated, over_cap = report.mu_k, report.truncated_count, report.over_cap_count
    else:
        mu_k, truncated, over_cap = math.nan, 0, 0
    return {
        'record': 'trial',
        'trial': trial,
        'trial_seed': seed,
        'mu_prime_over_n': mu_prime_over_n,
        'mu_k_over_n': mu_k / n,
        'lb_over_n': counts.lower_bound() / n,
        'a_over_n': a_over_n,
        'prespider_sum_over_n': counts.expected_lb_sample() / n,
        'truncated': truncated,
        'over_cap': over_cap,
        'error': error
    }


@click.command('estimate')
@density_options
@click.option('--k', type=int, default=2, show_default=True, help='Estimator radius.')
@output_options
@click.pass_obj
@handle_errors
def estimate(settings, n, d, p, m, k, trials, seed, threads, out, fmt):
    """Per-trial mu'/n, mu_k/n and lb/n with mean, std and standard error."""
    config = ExperimentConfig('estimate', n=n, d=d, p=p, m=m, trials=trials, seed=seed, k=k,
                              out=out, fmt=fmt, threads=threads or settings.THREADS)
    config.validate()
    validate_radius(k, minimum=1)

    rows = run_trials(estimate_trial, config.trials, config.seed, threads=config.threads,
                      config=config, cap=settings.EXHAUSTIVE_CAP)
    for row in summarize(pd.DataFrame(rows), METRICS):
        row.update(trial='', trial_seed='', truncated='', over_cap='', error='')
        rows.append(row)

    f_approx = eval_f_approx(config.density) if config.density > 0 else math.nan
    expected = expected_lb_closed_form(config.density)
    records = []
    for row in rows:
        row['f_approx'] = f_approx
        row['expected_lb'] = expected
        trial_seed = row['trial_seed']
        records.append(stamp(row, config, seed=config.seed if trial_seed == '' else trial_seed))
    columns = list(records[0].keys())
    columns = [c for c in columns if c not in COLUMNS] + COLUMNS
    emit(records, config, columns=columns)
