import os

from hamcomp.utils.errors import ParameterError


def _env(name, default, cast):
    raw = os.environ.get(name, default)
    try:
        return cast(raw)
    except (TypeError, ValueError):
        raise ParameterError(f"Invalid value for {name}: {raw!r}")


class Config:
    """Settings read from the environment (after .env is loaded); flags override them"""

    def __init__(self):
        self.LOG_LEVEL = os.environ.get('HAMCOMP_LOG_LEVEL', 'INFO').upper()
        self.THREADS = _env('HAMCOMP_THREADS', 1, int)
        self.EXHAUSTIVE_CAP = _env('HAMCOMP_EXHAUSTIVE_CAP', 16, int)
        self.EXACT_ENGINE_CAP = _env('HAMCOMP_EXACT_ENGINE_CAP', 20, int)
        self.ENGINE_BUDGET = _env('HAMCOMP_ENGINE_BUDGET', 1_000_000, int)
        self.SPIDER_CAP = _env('HAMCOMP_SPIDER_CAP', 64, int)
        self.PROCESS_G = _env('HAMCOMP_PROCESS_G', 1.0, float)

    def to_dict(self):
        return {key.lower(): value for key, value in vars(self).items()}
