import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamcomp.algorithms.local_estimator import (
    eval_f_approx,
    local_core,
    mu_k_estimate,
    phi_global,
    phi_k,
    phi_k_prime,
)
from hamcomp.algorithms.motifs import expected_lb_closed_form
from hamcomp.algorithms.neighborhoods import bfs_layers
from hamcomp.algorithms.random_graphs import gen_gnp
from hamcomp.models.graph import Graph
from hamcomp.utils.errors import ParameterError
from tests.conftest import cycle_graph, prism_graph, star_graph


class TestLocalCore:
    def test_clique_centre_stays_black(self, k5):
        core = local_core(k5, 0, 1)
        assert core.C_vk == {0}
        assert core.ball_size == 5
        assert phi_k_prime(k5, 0, 1) == 0.0

    def test_isolated_vertex(self):
        G = Graph.empty(3)
        core = local_core(G, 0, 2)
        assert core.A_vk == {0} and not core.B_vk and not core.C_vk
        assert phi_k(G, 0, 2, 1.0) == 2.0

    def test_precomputed_layers_give_the_same_core(self):
        G = gen_gnp(40, 4.0 / 40, 3)
        for v in range(G.n):
            assert local_core(G, v, 2, layers=bfs_layers(G, v, 2)) == local_core(G, v, 2)

    def test_radius_must_be_positive(self, k5):
        with pytest.raises(ParameterError):
            local_core(k5, 0, 0)

    def test_density_must_be_positive(self, k5):
        with pytest.raises(ParameterError):
            phi_k(k5, 0, 1, 0.0)


class TestStabilization:
    @given(st.integers(min_value=5, max_value=40), st.floats(min_value=1.0, max_value=6.0),
           st.integers(min_value=2, max_value=5), st.integers(0, 2 ** 31))
    def test_small_components_match_the_global_value(self, n, d, k, seed):
        G = gen_gnp(n, min(1.0, d / n), seed)
        phi, sizes = phi_global(G)
        for v in range(G.n):
            if sizes.get(v, 0) <= k - 1:
                assert phi_k_prime(G, v, k) == phi[v]

    @given(st.integers(min_value=2, max_value=30), st.floats(min_value=0.5, max_value=5.0), st.integers(0, 2 ** 31))
    def test_phi_is_bounded(self, n, d, seed):
        G = gen_gnp(n, min(1.0, d / n), seed)
        phi, _ = phi_global(G)
        assert all(0.0 <= value <= 2.0 for value in phi.values() if not math.isnan(value))
        assert all(0.0 <= phi_k_prime(G, v, 2) <= 2.0 for v in range(G.n))


class TestEstimator:
    def test_clique(self, k5):
        report = mu_k_estimate(k5, 1, 4.0)
        assert report.mu_k == 0.0 and report.truncated_count == 0

    def test_edgeless(self):
        report = mu_k_estimate(Graph.empty(6), 2, 1.0)
        assert report.mu_k == 6.0

    def test_planted_star_is_truncated(self):
        G = star_graph(50)
        report = mu_k_estimate(G, 1, 1.0)
        assert report.truncated_count == 1
        assert phi_k(G, 0, 1, 1.0) == 0.0

    def test_threads_agree(self):
        G = gen_gnp(60, 3.0 / 60, 7)
        assert mu_k_estimate(G, 2, 3.0, threads=2).mu_k == pytest.approx(mu_k_estimate(G, 2, 3.0).mu_k)

    def test_local_component_with_a_cycle_beyond_the_exhaustive_cap(self):
        G = cycle_graph(20)
        assert phi_k_prime(G, 0, 11) == pytest.approx(0.1)
        report = mu_k_estimate(G, 11, 1.0)
        assert report.mu_k == pytest.approx(1.0)
        assert report.truncated_count == report.over_cap_count == 0

    def test_components_beyond_both_caps_count_as_zero(self):
        G = prism_graph(20)
        report = mu_k_estimate(G, 12, 3.0)
        assert report.mu_k == 0.0
        assert report.over_cap_count == G.n and report.truncated_count == 0
        phi, sizes = phi_global(G)
        assert all(math.isnan(value) for value in phi.values())
        assert set(sizes.values()) == {40}


class TestClosedForm:
    def test_spot_values(self):
        assert eval_f_approx(6) == pytest.approx(0.0100090, rel=1e-5)
        assert eval_f_approx(20) == pytest.approx(2.2673e-8, rel=1e-4)

    @pytest.mark.parametrize('d', [1, 2, 5, 10, 40])
    def test_half_of_the_expected_bound(self, d):
        assert eval_f_approx(d) == pytest.approx(0.5 * expected_lb_closed_form(d), rel=1e-12)
