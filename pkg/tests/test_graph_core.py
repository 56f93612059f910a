import math

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamcomp.algorithms.neighborhoods import ball_size, bfs_layers
from hamcomp.algorithms.random_graphs import gen_gnm, gen_gnp, process_stream
from hamcomp.models.graph import Graph
from hamcomp.utils.errors import ContractError, ParameterError
from hamcomp.utils.pairs import pair_count, pair_from_index, pair_index, pairs_from_indices
from tests.conftest import graphs, path_graph


def assert_well_formed(G):
    for v, row in enumerate(G.adjacency):
        assert v not in row
        assert list(row) == sorted(set(row))
        for w in row:
            assert v in G.adjacency[w]
    assert G.m == sum(len(row) for row in G.adjacency) // 2


class TestGenerators:
    def test_gnp_p_zero_is_edgeless(self):
        G = gen_gnp(5, 0.0, 1)
        assert G.m == 0 and G.n == 5

    def test_gnp_p_one_is_complete(self):
        assert gen_gnp(5, 1.0, 7) == Graph.complete(5)
        assert gen_gnp(5, 1.0, 7).m == 10

    def test_gnp_edge_count_matches_binomial(self):
        n, p = 10 ** 4, 6 / 10 ** 4
        G = gen_gnp(n, p, 42)
        mean = math.comb(n, 2) * p
        assert abs(G.m - mean) <= 5 * math.sqrt(mean * (1 - p))

    def test_gnp_is_deterministic(self):
        assert gen_gnp(300, 0.02, 11) == gen_gnp(300, 0.02, 11)
        assert gen_gnp(300, 0.02, 11) != gen_gnp(300, 0.02, 12)

    @pytest.mark.parametrize('p', [-0.1, 1.5, float('nan'), 'abc'])
    def test_gnp_rejects_bad_probability(self, p):
        with pytest.raises(ParameterError):
            gen_gnp(5, p, 0)

    def test_gnm_extremes(self):
        assert gen_gnm(4, 6, 3) == Graph.complete(4)
        assert gen_gnm(4, 0, 3).m == 0

    def test_gnm_exact_count(self):
        G = gen_gnm(100, 50, 9)
        assert G.m == 50
        assert_well_formed(G)

    @pytest.mark.parametrize('m', [-1, 7])
    def test_gnm_rejects_out_of_range(self, m):
        with pytest.raises(ParameterError):
            gen_gnm(4, m, 0)

    @given(st.integers(min_value=1, max_value=60), st.sampled_from([0.0, 0.01, 0.1, 0.5, 0.9, 1.0]),
           st.integers(0, 2 ** 31))
    def test_gnp_output_is_a_simple_graph(self, n, p, seed):
        assert_well_formed(gen_gnp(n, p, seed))


class TestEdgeStream:
    def test_prefix_extremes(self):
        stream = process_stream(8, 5)
        assert stream.prefix_graph(0).m == 0
        assert stream.prefix_graph(28) == Graph.complete(8)

    def test_same_seed_same_stream(self):
        assert list(process_stream(30, 4)) == list(process_stream(30, 4))

    def test_order_is_a_permutation_of_all_pairs(self):
        n = 100  # more pairs than one materialization block
        pairs = list(process_stream(n, 2))
        assert len(pairs) == math.comb(n, 2)
        assert len(set(pairs)) == len(pairs)
        assert all(0 <= u < v < n for u, v in pairs)

    def test_read_pattern_does_not_change_order(self):
        a, b = process_stream(120, 8), process_stream(120, 8)
        late = b.pair_at(5000)
        assert a.edges(0, 5000)[-1] == late
        assert a.pair_at(17) == b.edges(16, 17)[0]

    def test_prefix_matches_gnm(self):
        assert process_stream(40, 13).prefix_graph(100) == gen_gnm(40, 100, 13)

    def test_requires_two_vertices(self):
        with pytest.raises(ParameterError):
            process_stream(1, 0)


class TestGraph:
    def test_from_edges_rejects_bad_input(self):
        with pytest.raises(ParameterError):
            Graph.from_edges(3, [(0, 0)])
        with pytest.raises(ParameterError):
            Graph.from_edges(3, [(0, 1), (1, 0)])
        with pytest.raises(ParameterError):
            Graph.from_edges(3, [(0, 3)])

    def test_with_edges_rejects_existing_edge(self):
        G = path_graph(3)
        assert G.with_edges([(0, 2)]).m == 3
        with pytest.raises(ContractError):
            G.with_edges([(0, 1)])

    def test_induced_relabels(self):
        G = path_graph(5)
        H, mapping = G.induced([1, 2, 4])
        assert mapping == (1, 2, 4)
        assert list(H.edges()) == [(0, 1)]

    @given(graphs(max_n=12))
    def test_degree_histogram_counts_low_degrees(self, G):
        histogram = G.degree_histogram(4)
        for i in range(4):
            assert histogram[i] == sum(1 for v in range(G.n) if G.degree(v) == i)


class TestNeighborhoods:
    def test_isolated_vertex(self):
        assert bfs_layers(Graph.empty(3), 1, 3) == [{1}, set(), set(), set()]

    def test_complete_graph(self):
        assert bfs_layers(Graph.complete(5), 0, 2) == [{0}, {1, 2, 3, 4}, set()]

    def test_path(self):
        assert bfs_layers(path_graph(3), 0, 2) == [{0}, {1}, {2}]

    @given(graphs(max_n=12), st.integers(min_value=0, max_value=4), st.data())
    def test_layers_match_networkx_distances(self, G, k, data):
        v = data.draw(st.integers(min_value=0, max_value=G.n - 1))
        nxg = nx.Graph()
        nxg.add_nodes_from(range(G.n))
        nxg.add_edges_from(G.edges())
        distances = nx.single_source_shortest_path_length(nxg, v, cutoff=k)
        layers = bfs_layers(G, v, k)
        for j, layer in enumerate(layers):
            assert layer == {u for u, dist in distances.items() if dist == j}
        assert ball_size(G, v, k) == len(distances)

    def test_rejects_bad_vertex(self):
        with pytest.raises(ParameterError):
            bfs_layers(Graph.empty(3), 3, 1)


@pytest.mark.slow
def test_low_degree_share_matches_binomial():
    n, p, trials = 1000, 5 / 1000, 200
    shares = [gen_gnp(n, p, seed).degree_histogram(2)[1] / n for seed in range(trials)]
    expected = (n - 1) * p * (1 - p) ** (n - 2)
    mean = sum(shares) / trials
    sd = math.sqrt(sum((s - mean) ** 2 for s in shares) / (trials - 1))
    assert abs(mean - expected) <= 5 * sd / math.sqrt(trials)


class TestPairs:
    @given(st.integers(min_value=2, max_value=300), st.data())
    def test_index_inverse(self, n, data):
        u = data.draw(st.integers(min_value=0, max_value=n - 2))
        v = data.draw(st.integers(min_value=u + 1, max_value=n - 1))
        k = pair_index(u, v, n)
        assert 0 <= k < pair_count(n)
        assert pair_from_index(k, n) == (u, v)
        us, vs = pairs_from_indices([k], n)
        assert (int(us[0]), int(vs[0])) == (u, v)

    def test_lexicographic_order(self):
        n = 5
        assert [pair_from_index(k, n) for k in range(pair_count(n))] == [
            (u, v) for u in range(n) for v in range(u + 1, n)
        ]
