import logging

from joblib import Parallel, delayed

from hamcomp.utils.rng import trial_seed

logger = logging.getLogger(__name__)


def run_trials(function, trials, seed, threads=1, **kwargs):
    """function(trial_index, trial_seed, **kwargs) for every trial, results in trial order"""
    logger.debug(f"Running {trials} trials on {threads} worker(s), base seed {seed}")
    return Parallel(n_jobs=threads)(
        delayed(function)(i, trial_seed(seed, i), **kwargs) for i in range(trials)
    )
