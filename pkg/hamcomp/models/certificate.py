from dataclasses import dataclass, field
from enum import Enum


class CertificateStatus(Enum):
    SUCCESS = "success"
    ENGINE_FAILURE = "engine-failure"
    STRUCTURAL_FAILURE = "structural-failure"

    @property
    def exit_code(self):
        return {
            CertificateStatus.SUCCESS: 0,
            CertificateStatus.ENGINE_FAILURE: 4,
            CertificateStatus.STRUCTURAL_FAILURE: 5
        }[self]


@dataclass
class EngineResult:
    """Outcome of one Hamilton-cycle search with forced edges"""

    cycle: list = None
    exhausted: bool = False
    steps: int = 0
    mode: str = "exact"

    @property
    def found(self):
        return self.cycle is not None

    def to_dict(self):
        return {
            'found': self.found,
            'exhausted': self.exhausted,
            'steps': self.steps,
            'mode': self.mode
        }


def _edge_list(edges):
    return [list(e) for e in sorted(edges)]


def _cycle_map(cycles):
    return {str(length): list(cycle) for length, cycle in sorted(cycles.items())}


@dataclass
class CompletionCertificate:
    n: int
    mu_prime: int = 0
    F0: set = field(default_factory=set)
    F1: set = field(default_factory=set)
    F2: set = field(default_factory=set)
    M: set = field(default_factory=set)
    hamilton_witness: list = None
    long_cycle_witnesses: dict = field(default_factory=dict)
    short_cycle_witnesses: dict = field(default_factory=dict)
    native_short_cycles: dict = field(default_factory=dict)
    status: CertificateStatus = CertificateStatus.SUCCESS
    reason: str = None
    s: int = 0
    kmax: int = 3
    engine_stats: list = field(default_factory=list)

    @property
    def F(self):
        return self.F0 | self.F1 | self.F2

    @property
    def ok(self):
        return self.status is CertificateStatus.SUCCESS

    def fail(self, status, reason):
        self.status = status
        self.reason = reason
        return self

    def to_dict(self):
        return {
            'n': self.n,
            'status': self.status.value,
            'reason': self.reason,
            'mu_prime': self.mu_prime,
            'size_F': len(self.F),
            'F0': _edge_list(self.F0),
            'F1': _edge_list(self.F1),
            'F2': _edge_list(self.F2),
            'M': _edge_list(self.M),
            's': self.s,
            'kmax': self.kmax,
            'hamilton_witness': self.hamilton_witness,
            'long_cycle_witnesses': _cycle_map(self.long_cycle_witnesses),
            'short_cycle_witnesses': _cycle_map(self.short_cycle_witnesses),
            'native_short_cycles': _cycle_map(self.native_short_cycles),
            'engine': self.engine_stats
        }

    def __repr__(self):
        return f'<CompletionCertificate n={self.n} |F|={len(self.F)} status={self.status.value}>'
