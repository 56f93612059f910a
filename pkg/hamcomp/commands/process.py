import logging
import os

import click
import pandas as pd

from hamcomp.algorithms.process_sim import detect_equalities, reference_time, run_process
from hamcomp.commands import default_horizon, emit, handle_errors, output_options, parse_checkpoints, stamp
from hamcomp.models.experiment import ExperimentConfig
from hamcomp.models.trace import TRACE_COLUMNS
from hamcomp.utils.reporting import ReportWriterFactory, write_document
from hamcomp.utils.trials import run_trials

logger = logging.getLogger(__name__)

QUANTILES = (0.25, 0.5, 0.75)


def process_trial(trial, seed, config, checkpoints, mu_mode, spider_cap, g, max_t, verify_counts, cap):
    trace = run_process(config.n, seed, checkpoints=checkpoints, mu_mode=mu_mode, spider_cap=spider_cap,
                        g=g, max_t=max_t, verify_counts=verify_counts, cap=cap)
    summary = detect_equalities(trace) if mu_mode != 'off' else None
    return trace, summary


def _quantile_columns(name, values):
    series = pd.Series([v for v in values if v is not None], dtype=float)
    row = {f'{name}_count': int(series.size)}
    for q in QUANTILES:
        label = 'median' if q == 0.5 else f'q{int(q * 100)}'
        row[f'{name}_{label}'] = float(series.quantile(q)) if series.size else None
    return row


def aggregate(traces, config):
    n = config.n
    reference = reference_time(n)
    row = {'record': 'aggregate', 'seeds': len(traces), 'reference_t1': reference}
    row.update(_quantile_columns('t1', [trace.t_spider.get(1) for trace in traces]))
    row.update(_quantile_columns('t1_star', [trace.t_star.get(1) for trace in traces]))
    row.update(_quantile_columns('hitting_n1_le_2', [trace.hitting_n1_le_2 for trace in traces]))
    median = row['t1_median']
    row['t1_median_over_reference'] = median / reference if median is not None else None
    lower, upper = n ** (2 / 3) / 10, 10 * n ** (2 / 3)
    inside = [t for t in (trace.t_star.get(1) for trace in traces) if t is not None and lower <= t <= upper]
    row['t1_star_in_window_rate'] = len(inside) / len(traces) if traces else None
    increases = sum(trace.s3_increases_after_t_minus for trace in traces)
    steps = sum(trace.steps_after_t_minus for trace in traces)
    row['s3_violation_rate'] = increases / steps if steps else 0.0
    return row


@click.command('process')
@click.option('--n', 'n', type=int, default=None, help='Number of vertices.')
@click.option('--checkpoints', type=str, default=None,
              help='Comma list of process times or geom:<count>.')
@click.option('--max-t', type=int, default=None, help='Stop the process at this time.')
@click.option('--mu/--no-mu', default=True, show_default=True, help="Compute mu' at checkpoints.")
@click.option('--verify-counts', is_flag=True, help='Recount motifs from scratch at every checkpoint.')
@output_options
@click.pass_obj
@handle_errors
def process(settings, n, checkpoints, max_t, mu, verify_counts, trials, seed, threads, out, fmt):
    """Random graph process traces, event times t_i*, t_i and an aggregate summary."""
    config = ExperimentConfig('process', n=n, trials=trials, seed=seed, checkpoints=checkpoints,
                              out=out, fmt=fmt, threads=threads or settings.THREADS,
                              extra={'g': settings.PROCESS_G, 'spider_cap': settings.SPIDER_CAP})
    config.validate(need_density=False, minimum_n=2)
    horizon = default_horizon(n) if max_t is None else max_t
    points = parse_checkpoints(checkpoints, horizon)
    mu_mode = 'at-checkpoints' if mu else 'off'

    results = run_trials(
        process_trial, config.trials, config.seed, threads=config.threads, config=config,
        checkpoints=points, mu_mode=mu_mode, spider_cap=settings.SPIDER_CAP, g=settings.PROCESS_G,
        max_t=max_t, verify_counts=verify_counts, cap=settings.EXHAUSTIVE_CAP
    )
    traces = [trace for trace, _ in results]

    if out is not None:
        os.makedirs(out, exist_ok=True)
        trace_writer = ReportWriterFactory.create_writer('csv', TRACE_COLUMNS)
        for trace, summary in results:
            trace_writer.write([r.to_dict() for r in trace.records],
                               path=os.path.join(out, f'trace_{trace.seed}.csv'))
            events = stamp(trace.events_dict(), config, seed=trace.seed)
            events['equalities'] = summary
            write_document(events, path=os.path.join(out, f'events_{trace.seed}.json'))
        emit([stamp(aggregate(traces, config), config)], config,
             path=os.path.join(out, f'aggregate.{fmt}'))
    else:
        emit([stamp(aggregate(traces, config), config)], config)
