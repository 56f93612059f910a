from dataclasses import dataclass


@dataclass(frozen=True)
class OracleReport:
    n: int
    mu: int
    hamiltonian: bool
    spectrum: frozenset = None
    mu_hat: int = None
    path_cover: int = None

    def to_dict(self):
        return {
            'n': self.n,
            'mu': self.mu,
            'hamiltonian': self.hamiltonian,
            'spectrum': sorted(self.spectrum) if self.spectrum is not None else None,
            'mu_hat': self.mu_hat,
            'path_cover': self.path_cover
        }
