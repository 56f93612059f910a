from dataclasses import dataclass


@dataclass(frozen=True)
class LocalCore:
    """C(v,k), B(v,k), A(v,k) inside N^{<k}(v)"""

    v: int
    k: int
    C_vk: frozenset
    B_vk: frozenset
    A_vk: frozenset
    ball_size: int = 0

    def to_dict(self):
        return {
            'v': self.v,
            'k': self.k,
            'C': sorted(self.C_vk),
            'B': sorted(self.B_vk),
            'A': sorted(self.A_vk),
            'ball_size': self.ball_size
        }


@dataclass(frozen=True)
class EstimatorReport:
    k: int
    d: float
    mu_k: float
    truncated_count: int
    n: int = 0
    over_cap_count: int = 0

    def to_dict(self):
        return {
            'k': self.k,
            'd': self.d,
            'mu_k': self.mu_k,
            'truncated_count': self.truncated_count,
            'n': self.n,
            'over_cap_count': self.over_cap_count
        }
