import numpy as np


def make_rng(seed):
    """The artifact's one generator: Philox, counter-based and splittable"""
    return np.random.Generator(np.random.Philox(int(seed)))


def trial_seed(seed, trial_index):
    return int(seed) ^ int(trial_index)
