from dataclasses import dataclass


@dataclass(frozen=True)
class MotifCounts:
    """Degree classes n_0..n_3, K_{1,3} copies, 3-prespiders and 3-spiders"""

    n0: int = 0
    n1: int = 0
    n2: int = 0
    n3: int = 0
    stars3: int = 0
    s3_pre: int = 0
    s3: int = 0

    @property
    def n_i(self):
        return (self.n0, self.n1, self.n2, self.n3)

    def lower_bound(self):
        """n_0 + ceil((n_1 + s_3) / 2)"""
        return self.n0 + (self.n1 + self.s3 + 1) // 2

    def expected_lb_sample(self):
        """2n_0 + n_1 + s_3', the quantity behind the closed-form expectation"""
        return 2 * self.n0 + self.n1 + self.s3_pre

    def to_dict(self):
        return {
            'n0': self.n0,
            'n1': self.n1,
            'n2': self.n2,
            'n3': self.n3,
            'stars3': self.stars3,
            's3_pre': self.s3_pre,
            's3': self.s3
        }
