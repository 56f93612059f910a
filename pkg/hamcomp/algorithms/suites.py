"""
Randomized cross-checks of the fast algorithms against the brute-force oracles.
Each suite returns a SuiteResult; a failure records the first offending instance.
"""
import logging
import math
from dataclasses import dataclass, field

from hamcomp.algorithms.local_estimator import eval_f_approx
from hamcomp.algorithms.motifs import expected_lb_closed_form
from hamcomp.algorithms.oracle import brute_hamiltonian, brute_mu, brute_mu_hat
from hamcomp.algorithms.path_cover import a_exhaustive, a_formula_small, a_tree_dp, mu_prime, verify_cover
from hamcomp.algorithms.random_graphs import gen_gnp
from hamcomp.models.graph import Graph
from hamcomp.models.partition import ABComponent
from hamcomp.utils.rng import make_rng

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: int = 0
    first_failure: str = None
    details: list = field(default_factory=list)

    @property
    def passed(self):
        return self.failures == 0

    def check(self, condition, description):
        self.checked += 1
        if not condition:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = description
            logger.warning(f"[{self.name}] {description}")

    def to_dict(self):
        return {
            'suite': self.name,
            'checked': self.checked,
            'failures': self.failures,
            'passed': self.passed,
            'first_failure': self.first_failure
        }


def random_tree(n, rng):
    return [(int(rng.integers(v)), v) for v in range(1, n)]


def random_component(n, rng, a_share=0.5):
    edges = random_tree(n, rng)
    a_vertices = [v for v in range(n) if rng.random() < a_share]
    return ABComponent.build(range(n), a_vertices, edges)


def spider_component():
    # centre 0 (B); legs 1-4, 2-5, 3-6 with 1, 2, 3 in A
    return ABComponent.build(range(7), [1, 2, 3], [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def formula_spot_cases():
    return [
        ('isolated A-vertex', ABComponent.build([0], [0], []), 2),
        ('A-B edge', ABComponent.build([0, 1], [0], [(0, 1)]), 1),
        ('S(G) star', ABComponent.build(range(4), [0], [(0, 1), (0, 2), (0, 3)]), 0),
        ('7-vertex spider', spider_component(), 1),
    ]


def suite_formula_spots(mutant=False):
    result = SuiteResult('formula-spot-values')
    for name, comp, expected in formula_spot_cases():
        formula = a_formula_small(comp, prespider=not mutant).a_value
        exhaustive = a_exhaustive(comp).a_value
        result.check(formula == expected == exhaustive,
                     f"{name}: formula={formula} exhaustive={exhaustive} expected={expected}")
    return result


def suite_path_cover(rng, trees, max_n=14, mutant=False):
    result = SuiteResult('path-cover-equivalence')
    for trial in range(trees):
        n = int(rng.integers(1, max_n + 1))
        comp = random_component(n, rng, a_share=float(rng.uniform(0.2, 0.9)))
        dp = a_tree_dp(comp)
        exhaustive = a_exhaustive(comp)
        result.check(dp.a_value == exhaustive.a_value and verify_cover(comp, dp),
                     f"tree {trial} ({comp.edges}, A={sorted(comp.a_vertices)}): "
                     f"dp={dp.a_value} exhaustive={exhaustive.a_value}")
        if len(comp.a_vertices) <= 3:
            formula = a_formula_small(comp, prespider=not mutant).a_value
            result.check(formula == dp.a_value, f"tree {trial}: formula={formula} dp={dp.a_value}")
    # the spider is the one shape where the prespider term matters
    spider = spider_component()
    formula = a_formula_small(spider, prespider=not mutant).a_value
    result.check(formula == a_tree_dp(spider).a_value, f"spider: formula={formula}")
    return result


def suite_observation(rng, graphs, max_n=10):
    result = SuiteResult('observation-mu-ge-mu-prime')
    done = attempts = 0
    while done < graphs and attempts < 20 * graphs:
        attempts += 1
        n = int(rng.integers(3, max_n + 1))
        p = float(rng.choice([0.2, 0.4, 0.6]))
        G = gen_gnp(n, p, int(rng.integers(2 ** 31)))
        if brute_hamiltonian(G):
            continue
        done += 1
        mu = brute_mu(G)
        value = mu_prime(G, verify=True).mu_prime
        histogram = G.degree_histogram(2)
        lower = histogram[0] + math.ceil(histogram[1] / 2)
        result.check(mu >= value and mu >= lower,
                     f"n={n} edges={list(G.edges())}: mu={mu} mu'={value} n0+ceil(n1/2)={lower}")
    return result


def suite_mu_hat(rng, graphs, max_n=7):
    result = SuiteResult('mu-hat-ge-mu')
    for _ in range(graphs):
        n = int(rng.integers(3, max_n + 1))
        G = gen_gnp(n, float(rng.uniform(0.3, 0.8)), int(rng.integers(2 ** 31)))
        mu, mu_hat = brute_mu(G), brute_mu_hat(G)
        result.check(mu_hat is not None and mu_hat >= mu, f"edges={list(G.edges())}: mu={mu} mu_hat={mu_hat}")
    return result


def suite_linear_forests(rng, graphs, max_n=12):
    result = SuiteResult('linear-forest-path-cover')
    for _ in range(graphs):
        n = int(rng.integers(3, max_n + 1))
        order = [int(v) for v in rng.permutation(n)]
        cuts = sorted({int(c) for c in rng.integers(1, n, size=int(rng.integers(0, n)))})
        pieces = [order[a:b] for a, b in zip([0] + cuts, cuts + [n])]
        edges = [(u, v) for piece in pieces for u, v in zip(piece, piece[1:])]
        G = Graph.from_edges(n, edges)
        result.check(brute_mu(G) == len(pieces), f"pieces={pieces}: mu={brute_mu(G)}")
    return result


def suite_closed_forms():
    result = SuiteResult('closed-form-identity')
    for d in range(1, 41):
        lhs = eval_f_approx(d)
        rhs = 0.5 * expected_lb_closed_form(d)
        result.check(abs(lhs - rhs) <= 1e-12 * abs(lhs), f"d={d}: {lhs} vs {rhs}")
    return result


def run_suites(seed, scale=1, max_n=10, mutant=False):
    rng = make_rng(seed)
    return [
        suite_formula_spots(mutant=mutant),
        suite_path_cover(rng, 1000 * scale, max_n=min(14, max(max_n, 1)), mutant=mutant),
        suite_observation(rng, 1000 * scale, max_n=max(3, max_n)),
        suite_mu_hat(rng, 50 * scale, max_n=min(7, max(3, max_n))),
        suite_linear_forests(rng, 200 * scale, max_n=max(3, max_n)),
        suite_closed_forms(),
    ]
