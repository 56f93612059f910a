from itertools import permutations

import pytest
from hypothesis import given

from hamcomp.algorithms.oracle import (
    brute_hamiltonian,
    brute_mu,
    brute_mu_hat,
    brute_path_cover,
    brute_spectrum,
    oracle_report,
)
from hamcomp.models.graph import Graph
from hamcomp.utils.errors import CapacityError
from tests.conftest import cycle_graph, graphs, path_graph, star_graph


def fewest_paths_by_permutation(G):
    if G.n == 0:
        return 0
    return min(
        1 + sum(1 for u, v in zip(order, order[1:]) if not G.has_edge(u, v))
        for order in permutations(range(G.n))
    )


def hamiltonian_by_permutation(G):
    if G.n < 3:
        return False
    return any(
        G.has_edge(order[-1], 0) and all(G.has_edge(u, v) for u, v in zip(order, order[1:]))
        for order in ((0,) + rest for rest in permutations(range(1, G.n)))
    )


class TestSpotValues:
    def test_cycle(self):
        G = cycle_graph(5)
        assert brute_hamiltonian(G) and brute_mu(G) == 0
        assert brute_spectrum(G) == {5}

    def test_claw(self):
        assert brute_mu(star_graph(3)) == 2

    def test_edgeless(self):
        assert brute_mu(Graph.empty(4)) == 4

    def test_spectra(self, k5, petersen):
        assert brute_spectrum(k5) == {3, 4, 5}
        assert brute_spectrum(cycle_graph(6)) == {6}
        assert brute_spectrum(petersen) == {5, 6, 8, 9}

    def test_petersen_is_not_hamiltonian(self, petersen):
        assert not brute_hamiltonian(petersen)
        assert brute_mu(petersen) == 1

    def test_too_small_for_cycles(self):
        assert brute_mu(Graph.complete(2)) is None
        assert brute_mu_hat(Graph.complete(2)) is None

    def test_linear_forests(self):
        assert brute_mu(path_graph(5)) == 1
        assert brute_mu(Graph.from_edges(6, [(0, 1), (1, 2), (3, 4)])) == 3


class TestMuHat:
    def test_pancyclic_graph(self, k5):
        assert brute_mu_hat(k5) == 0

    def test_cycle_needs_a_chord(self):
        assert brute_mu_hat(cycle_graph(5)) == 1

    def test_path_needs_two(self):
        assert brute_mu_hat(path_graph(4)) == 2

    @given(graphs(min_n=3, max_n=6))
    def test_at_least_mu(self, G):
        assert brute_mu_hat(G) >= brute_mu(G)


class TestCrossCheck:
    @given(graphs(max_n=7))
    def test_hamiltonian_matches_permutations(self, G):
        assert brute_hamiltonian(G) == hamiltonian_by_permutation(G)

    @given(graphs(max_n=7))
    def test_path_cover_matches_permutations(self, G):
        assert brute_path_cover(G) == fewest_paths_by_permutation(G)


class TestCaps:
    def test_hamiltonian_cap(self):
        with pytest.raises(CapacityError):
            brute_hamiltonian(Graph.empty(17))

    def test_mu_hat_cap(self):
        with pytest.raises(CapacityError):
            brute_mu_hat(Graph.complete(8))

    def test_report_skips_capped_parts(self):
        report = oracle_report(cycle_graph(15), spectrum=True, mu_hat=True)
        assert report.spectrum is None and report.mu_hat is None
        assert report.hamiltonian and report.mu == 0 and report.path_cover == 1

    def test_report_to_dict(self, k5):
        document = oracle_report(k5, mu_hat=True).to_dict()
        assert document == {
            'n': 5, 'mu': 0, 'hamiltonian': True, 'spectrum': [3, 4, 5], 'mu_hat': 0, 'path_cover': 1
        }
