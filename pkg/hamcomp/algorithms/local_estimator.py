"""
Radius-k local versions of the core partition and of phi, and the estimator
mu_k(G) = 1/2 * sum_v phi_k(v).
"""
import logging
import math
from collections import deque

from joblib import Parallel, delayed

from hamcomp.algorithms.neighborhoods import bfs_layers
from hamcomp.algorithms.path_cover import DEFAULT_EXHAUSTIVE_CAP, component_cover
from hamcomp.algorithms.strong_core import ab_components, colour_vertices, strong_core
from hamcomp.models.estimator import EstimatorReport, LocalCore
from hamcomp.models.partition import ABComponent, Colour
from hamcomp.utils.errors import CapacityError, ParameterError
from hamcomp.utils.validators import validate_radius

logger = logging.getLogger(__name__)


def local_core(G, v, k, layers=None):
    """Colouring restricted to N^{<k}(v) with the layer N^k(v) permanently black"""
    validate_radius(k, minimum=1)
    layers = layers if layers is not None else bfs_layers(G, v, k)
    inner = set().union(*layers[:k])
    colour = colour_vertices(G.adjacency, inner, frozen=layers[k])
    C = frozenset(u for u in inner if colour[u] is Colour.BLACK)
    B = frozenset(u for u in inner if u not in C and any(w in C for w in G.adjacency[u]))
    A = frozenset(inner - C - B)
    return LocalCore(v, k, C, B, A, ball_size=len(inner) + len(layers[k]))


def _component_of(G, v, allowed, a_vertices):
    """The component of v in G[allowed] as an ABComponent"""
    seen = {v}
    queue = deque([v])
    edges = []
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if w not in allowed:
                continue
            if u < w:
                edges.append((u, w))
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return ABComponent.build(seen, (u for u in seen if u in a_vertices), edges)


def phi_k_prime(G, v, k, cap=DEFAULT_EXHAUSTIVE_CAP, layers=None):
    """phi(T^AB(v,k)) / |T^AB(v,k)|, or 0 when v lies in C(v,k)"""
    core = local_core(G, v, k, layers=layers)
    if v in core.C_vk:
        return 0.0
    comp = _component_of(G, v, core.A_vk | core.B_vk, core.A_vk)
    return component_cover(comp, cap=cap).a_value / len(comp)


def _within_threshold(ball, d, k):
    # |N^{<=k}(v)| <= 2 d^k e^{kd}, compared in logs
    return math.log(ball) <= math.log(2) + k * math.log(d) + k * d


def phi_k(G, v, k, d, cap=DEFAULT_EXHAUSTIVE_CAP):
    if d <= 0:
        raise ParameterError(f"Density must be positive for the local threshold, got {d}")
    layers = bfs_layers(G, v, k)
    if not _within_threshold(sum(len(layer) for layer in layers), d, k):
        return 0.0
    return phi_k_prime(G, v, k, cap=cap, layers=layers)


def phi_global(G, cap=DEFAULT_EXHAUSTIVE_CAP):
    """
    phi(v) = a(T)/|T| for the component T of G^AB holding v, 0 on the core.

    Components beyond both cover caps get NaN.
    """
    part = strong_core(G)
    phi = {v: 0.0 for v in part.C}
    sizes = {}
    for comp in ab_components(G, part):
        try:
            value = component_cover(comp, cap=cap).a_value / len(comp)
        except CapacityError as e:
            logger.warning(f"phi undefined on a component of {len(comp)} vertices: {e}")
            value = math.nan
        for v in comp.vertices:
            phi[v] = value
            sizes[v] = len(comp)
    return phi, sizes


def _chunk_sum(G, vertices, k, d, cap):
    total = 0.0
    truncated = over_cap = 0
    for v in vertices:
        layers = bfs_layers(G, v, k)
        if not _within_threshold(sum(len(layer) for layer in layers), d, k):
            truncated += 1
            continue
        try:
            total += phi_k_prime(G, v, k, cap=cap, layers=layers)
        except CapacityError as e:
            logger.warning(f"phi_{k}({v}) counted as 0: {e}")
            over_cap += 1
    return total, truncated, over_cap


def mu_k_estimate(G, k, d, threads=1, cap=DEFAULT_EXHAUSTIVE_CAP):
    validate_radius(k, minimum=1)
    if d <= 0:
        raise ParameterError(f"Density must be positive for the local threshold, got {d}")
    if threads > 1 and G.n > threads:
        size = math.ceil(G.n / threads)
        chunks = [range(i, min(G.n, i + size)) for i in range(0, G.n, size)]
        parts = Parallel(n_jobs=threads)(delayed(_chunk_sum)(G, chunk, k, d, cap) for chunk in chunks)
    else:
        parts = [_chunk_sum(G, range(G.n), k, d, cap)]
    total = sum(p[0] for p in parts)
    truncated = sum(p[1] for p in parts)
    over_cap = sum(p[2] for p in parts)
    if truncated:
        logger.info(f"mu_k: {truncated} vertices above the neighbourhood threshold (k={k}, d={d})")
    return EstimatorReport(k=k, d=d, mu_k=total / 2, truncated_count=truncated, n=G.n, over_cap_count=over_cap)


def eval_f_approx(d):
    """The three explicit terms of the expansion of f(d)"""
    d = float(d)
    tail = d ** 6 / 12 + d ** 5 / 4 + d ** 4 / 4 + d ** 3 / 12
    return 0.5 * d * math.exp(-d) + math.exp(-d) + tail * math.exp(-3 * d)
