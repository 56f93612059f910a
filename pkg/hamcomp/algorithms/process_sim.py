"""
The random graph process with incrementally maintained motif counts, event
times t_i* and t_i, and mu' at checkpoints.
"""
import logging
import math

from hamcomp.algorithms.motifs import MotifCounter, count_motifs
from hamcomp.algorithms.path_cover import DEFAULT_EXHAUSTIVE_CAP, mu_prime
from hamcomp.algorithms.random_graphs import process_stream
from hamcomp.models.graph import Graph
from hamcomp.models.trace import ProcessTrace, TraceRecord
from hamcomp.utils.errors import CapacityError, ContractError, ParameterError
from hamcomp.utils.validators import validate_checkpoints

logger = logging.getLogger(__name__)

DEFAULT_SPIDER_CAP = 64
MU_MODES = ('off', 'at-checkpoints')


def reference_time(n):
    """n (log n / 6 + log log n)"""
    return n * (math.log(n) / 6 + math.log(math.log(n)))


def window(n, g):
    """(t-, t+) around the reference time with slack g·n"""
    centre = reference_time(n)
    return centre - g * n, centre + g * n


def _record(t, counter, mu_mode, cap, verify_counts):
    counts = counter.counts
    graph = None
    if verify_counts or mu_mode == 'at-checkpoints':
        graph = Graph.from_adjacency_sets(counter.adjacency)
    if verify_counts and count_motifs(graph) != counts:
        raise ContractError(f"Incremental motif counts diverged from a full recount at t={t}")
    value = None
    if mu_mode == 'at-checkpoints':
        try:
            value = mu_prime(graph, cap=cap).mu_prime
        except CapacityError as e:
            logger.warning(f"mu' skipped at t={t}: {e}")
    return TraceRecord(
        t=t, n0=counts.n0, n1=counts.n1, stars3=counts.stars3, s3=counts.s3,
        mu_prime=value, lb=counts.lower_bound()
    )


def run_process(n, seed, checkpoints=(), mu_mode='at-checkpoints', spider_cap=DEFAULT_SPIDER_CAP,
                g=1.0, max_t=None, verify_counts=False, cap=DEFAULT_EXHAUSTIVE_CAP):
    if mu_mode not in MU_MODES:
        raise ParameterError(f"mu_mode must be one of {MU_MODES}, got {mu_mode!r}")
    stream = process_stream(n, seed)
    checkpoints = validate_checkpoints(list(checkpoints), stream.total)
    horizon = stream.total if max_t is None else min(int(max_t), stream.total)
    t_minus, t_plus = window(n, g)
    trace = ProcessTrace(n=n, seed=seed, t_minus=t_minus, t_plus=t_plus, g=g)

    counter = MotifCounter(n)
    pending_checks = [t for t in checkpoints if t <= horizon]
    last_check = pending_checks[-1] if pending_checks else 0
    check_index = 0
    if pending_checks and pending_checks[0] == 0:
        trace.append(_record(0, counter, mu_mode, cap, verify_counts))
        check_index = 1

    next_star = 1
    pending_spider = spider_cap
    spider_start = 10 * n + 1
    previous_s3 = 0
    t = 0
    for t, (u, v) in enumerate(stream, start=1):
        if t > horizon:
            t -= 1
            break
        counter.insert(u, v)
        stars3 = counter.stars3
        s3 = counter.s3

        while next_star <= spider_cap and stars3 >= next_star:
            trace.t_star[next_star] = t
            next_star += 1
        if t >= spider_start:
            while pending_spider > s3:
                trace.t_spider[pending_spider] = t
                pending_spider -= 1
        if trace.hitting_n1_le_2 is None and counter.histogram[0] == 0 and counter.histogram[1] <= 2:
            trace.hitting_n1_le_2 = t
        if t >= t_minus:
            trace.steps_after_t_minus += 1
            if s3 > previous_s3:
                trace.s3_increases_after_t_minus += 1
        previous_s3 = s3

        if check_index < len(pending_checks) and t == pending_checks[check_index]:
            trace.append(_record(t, counter, mu_mode, cap, verify_counts))
            check_index += 1

        if t >= last_check and pending_spider == 0 and trace.hitting_n1_le_2 is not None:
            break
    trace.final_t = t

    logger.info(f"Process n={n} seed={seed}: stopped at t={t}, "
                f"t1*={trace.t_star.get(1)} t1={trace.t_spider.get(1)}")
    return trace


def _lb_without_spiders(record):
    return record.n0 + (record.n1 + 1) // 2


def detect_equalities(trace, g=None):
    """
    Per-regime tallies of mu' == lb. Regimes: early (t <= n^{2/3}/g), star
    (up to g·n^{2/3}), middle (up to t-) and late.
    """
    g = trace.g if g is None else g
    n = trace.n
    early_end = n ** (2 / 3) / g
    star_end = g * n ** (2 / 3)
    regimes = {name: {'checkpoints': 0, 'equal': 0} for name in ('early', 'star', 'middle', 'late')}
    regimes['early']['equal_n1_form'] = 0
    regimes['star']['equal_star_form'] = 0
    gaps = []

    for record in trace.records:
        if record.mu_prime is None:
            continue
        if record.t <= early_end:
            name = 'early'
        elif record.t <= star_end:
            name = 'star'
        elif record.t < trace.t_minus:
            name = 'middle'
        else:
            name = 'late'
        tally = regimes[name]
        tally['checkpoints'] += 1
        tally['equal'] += int(record.mu_prime == record.lb)
        if name == 'early':
            tally['equal_n1_form'] += int(record.mu_prime == _lb_without_spiders(record))
        elif name == 'star':
            star_form = record.n0 + (record.n1 + record.stars3 + 1) // 2
            tally['equal_star_form'] += int(record.mu_prime == star_form)
        elif name == 'middle':
            gaps.append(record.mu_prime - _lb_without_spiders(record))

    steps = trace.steps_after_t_minus
    return {
        'n': n,
        'seed': trace.seed,
        'regimes': regimes,
        'middle_gaps': gaps,
        'middle_gap_growing': bool(gaps) and all(b >= a for a, b in zip(gaps, gaps[1:])) and gaps[-1] > 0,
        's3_increases_after_t_minus': trace.s3_increases_after_t_minus,
        's3_violation_rate': trace.s3_increases_after_t_minus / steps if steps else 0.0
    }
