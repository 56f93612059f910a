import logging
import math

import numpy as np

from hamcomp.models.graph import EdgeStream, Graph
from hamcomp.utils.pairs import pair_count, pairs_from_indices
from hamcomp.utils.rng import make_rng
from hamcomp.utils.validators import (
    validate_edge_count,
    validate_probability,
    validate_vertex_count,
)

logger = logging.getLogger(__name__)


def gen_gnp(n, p, seed):
    """
    Sample G(n,p) by geometric skipping over the lexicographic pair sequence,
    so the expected cost is linear in the number of edges.
    """
    validate_vertex_count(n)
    p = validate_probability(p)
    total = pair_count(n)
    if p == 0.0 or total == 0:
        return Graph.empty(n)
    if p == 1.0:
        return Graph.complete(n)

    rng = make_rng(seed)
    expected = total * p
    block = max(1024, int(expected + 5 * math.sqrt(expected)) + 1)
    chunks = []
    position = -1
    while True:
        indices = position + np.cumsum(rng.geometric(p, size=block))
        kept = indices[indices < total]
        chunks.append(kept)
        if kept.size < block:
            break
        position = int(indices[-1])

    indices = np.concatenate(chunks)
    us, vs = pairs_from_indices(indices, n)
    graph = Graph.from_edge_arrays(n, us, vs)
    logger.debug(f"G(n={n}, p={p}) seed={seed}: m={graph.m}")
    return graph


def process_stream(n, seed):
    """The random graph process on n vertices as a lazily drawn edge order"""
    validate_vertex_count(n, minimum=2)
    return EdgeStream(n, seed)


def gen_gnm(n, m, seed):
    """
    Uniform m-edge graph, taken as the m-th graph of the random graph process
    with the same seed (a uniform permutation's prefix is a uniform subset).
    """
    validate_vertex_count(n)
    validate_edge_count(n, m)
    if m == 0:
        return Graph.empty(n)
    return process_stream(n, seed).prefix_graph(m)
