import math
from dataclasses import dataclass, field
from enum import Enum


class CoverMethod(Enum):
    FORMULA = "formula"
    TREE_DP = "tree-dp"
    EXHAUSTIVE = "exhaustive"
    FEEDBACK = "feedback-branch"


def count_a_endpoints(paths, a_vertices):
    """A-endpoints of a cover; a singleton A-vertex counts twice"""
    total = 0
    for path in paths:
        total += (path[0] in a_vertices) + (path[-1] in a_vertices)
    return total


@dataclass(frozen=True)
class CoverResult:
    a_value: int
    witness: tuple = None
    method: CoverMethod = CoverMethod.TREE_DP
    component: object = field(default=None, compare=False, repr=False)

    def to_dict(self):
        return {
            'a_value': self.a_value,
            'method': self.method.value,
            'witness': [list(path) for path in self.witness] if self.witness is not None else None
        }


@dataclass(frozen=True)
class MuPrime:
    a_total: int
    per_component: tuple

    @property
    def mu_prime(self):
        return math.ceil(self.a_total / 2)

    def to_dict(self):
        return {
            'a_total': self.a_total,
            'mu_prime': self.mu_prime,
            'components': len(self.per_component),
            'methods': sorted({c.method.value for c in self.per_component})
        }

    def __repr__(self):
        return f'<MuPrime a={self.a_total} mu_prime={self.mu_prime}>'
