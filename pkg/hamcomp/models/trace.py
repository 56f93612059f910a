from dataclasses import dataclass, field

TRACE_COLUMNS = ['t', 'n0', 'n1', 'stars3', 's3', 'mu_prime', 'lb', 'equal']


@dataclass(frozen=True)
class TraceRecord:
    t: int
    n0: int
    n1: int
    stars3: int
    s3: int
    mu_prime: int = None
    lb: int = 0

    @property
    def equal(self):
        return None if self.mu_prime is None else self.mu_prime == self.lb

    def to_dict(self):
        return {
            't': self.t,
            'n0': self.n0,
            'n1': self.n1,
            'stars3': self.stars3,
            's3': self.s3,
            'mu_prime': self.mu_prime,
            'lb': self.lb,
            'equal': self.equal
        }


@dataclass
class ProcessTrace:
    n: int
    seed: int
    records: list = field(default_factory=list)
    t_star: dict = field(default_factory=dict)
    t_spider: dict = field(default_factory=dict)
    hitting_n1_le_2: int = None
    t_minus: float = 0.0
    t_plus: float = 0.0
    g: float = 1.0
    s3_increases_after_t_minus: int = 0
    steps_after_t_minus: int = 0
    final_t: int = 0

    @property
    def equality_flags(self):
        return [record.equal for record in self.records]

    def append(self, record):
        if self.records and record.t <= self.records[-1].t:
            raise ValueError(f"Trace records must increase in t, got {record.t} after {self.records[-1].t}")
        self.records.append(record)

    def events_dict(self):
        return {
            'n': self.n,
            'seed': self.seed,
            't_star': {str(i): t for i, t in sorted(self.t_star.items())},
            't_spider': {str(i): t for i, t in sorted(self.t_spider.items())},
            'hitting_n1_le_2': self.hitting_n1_le_2,
            't_minus': self.t_minus,
            't_plus': self.t_plus,
            'g': self.g,
            's3_increases_after_t_minus': self.s3_increases_after_t_minus,
            'steps_after_t_minus': self.steps_after_t_minus,
            'final_t': self.final_t
        }

    def to_dict(self):
        data = self.events_dict()
        data['records'] = [record.to_dict() for record in self.records]
        return data
