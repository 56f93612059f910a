import math
from dataclasses import asdict, dataclass, field

from hamcomp.utils.errors import ParameterError
from hamcomp.utils.validators import (
    validate_density,
    validate_density_flags,
    validate_edge_count,
    validate_probability,
    validate_vertex_count,
)


@dataclass
class ExperimentConfig:
    """Parameters of one CLI invocation, echoed into every emitted record"""

    subcommand: str
    n: int = None
    d: float = None
    p: float = None
    m: int = None
    trials: int = 1
    seed: int = 0
    k: int = 2
    checkpoints: str = None
    out: str = None
    fmt: str = 'csv'
    engine: str = 'heuristic'
    budget: int = None
    threads: int = 1
    extra: dict = field(default_factory=dict)

    def validate(self, need_density=True, minimum_n=1):
        validate_vertex_count(self.n, minimum=minimum_n)
        if not isinstance(self.trials, int) or self.trials < 1:
            raise ParameterError(f"Trial count must be at least 1, got {self.trials!r}")
        if self.threads < 1:
            raise ParameterError(f"Thread count must be at least 1, got {self.threads}")
        if need_density:
            which = validate_density_flags(self.d, self.p, self.m)
            if which == 'd':
                validate_density(self.d)
            elif which == 'p':
                validate_probability(self.p)
            else:
                validate_edge_count(self.n, self.m)
        return self

    @property
    def density(self):
        """The model density d = np used by the estimator threshold"""
        if self.d is not None:
            return float(self.d)
        if self.p is not None:
            return float(self.p) * self.n
        return 2.0 * self.m / self.n

    @property
    def probability(self):
        if self.p is not None:
            return float(self.p)
        return min(1.0, float(self.d) / self.n)

    def echo(self):
        data = asdict(self)
        data.pop('extra')
        data.pop('threads')
        data.pop('out')
        data.update(self.extra)
        return {key: value for key, value in data.items() if not (isinstance(value, float) and math.isnan(value))}
