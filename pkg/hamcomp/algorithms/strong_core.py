"""
Strong k-core tripartition (A, B, C) by the red/blue/black colouring
procedure, the components of G^AB, and the structural events E_1 / E_k.
"""
import logging
import math
from collections import defaultdict

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from hamcomp.models.partition import ABComponent, Colour, CorePartition
from hamcomp.utils.rng import make_rng

logger = logging.getLogger(__name__)


def colour_vertices(adjacency, active, k=4, frozen=(), order_seed=None):
    """
    Colouring procedure on the `active` vertices. Every vertex starts black;
    while a black or blue vertex has fewer than k black neighbours it turns
    red and its black neighbours turn blue. Vertices outside `active` that
    appear in `frozen` stay black for good and are never processed.

    Black-neighbour counts are maintained incrementally, so the work is
    linear in the number of edges touched.
    """
    colour = {v: Colour.BLACK for v in active}
    black = {v: len(adjacency[v]) for v in active}
    frozen = frozenset(frozen)
    for v in active:
        # neighbours that are neither active nor frozen do not exist for the procedure
        missing = sum(1 for w in adjacency[v] if w not in colour and w not in frozen)
        black[v] -= missing

    queue = [v for v in sorted(active) if black[v] < k]
    queued = set(queue)
    rng = make_rng(order_seed) if order_seed is not None else None

    def push(x):
        if x not in queued and black[x] < k:
            queued.add(x)
            queue.append(x)

    def lose_black(x):
        for y in adjacency[x]:
            if y in black:
                black[y] -= 1
                if colour[y] is not Colour.RED:
                    push(y)

    while queue:
        if rng is not None:
            i = int(rng.integers(len(queue)))
            queue[i], queue[-1] = queue[-1], queue[i]
        v = queue.pop()
        if colour[v] is Colour.RED:
            continue
        was_black = colour[v] is Colour.BLACK
        colour[v] = Colour.RED
        if was_black:
            lose_black(v)
        for x in adjacency[v]:
            if x in colour and colour[x] is Colour.BLACK:
                colour[x] = Colour.BLUE
                lose_black(x)
                push(x)
    return colour


def strong_core(G, k=4, order_seed=None):
    """(A, B, C) = (red, blue, black) at the fixed point of the colouring"""
    colour = colour_vertices(G.adjacency, range(G.n), k=k, order_seed=order_seed)
    sides = defaultdict(set)
    for v, c in colour.items():
        sides[c].add(v)
    return CorePartition(
        A=frozenset(sides[Colour.RED]),
        B=frozenset(sides[Colour.BLUE]),
        C=frozenset(sides[Colour.BLACK]),
        k=k
    )


def ab_components(G, part):
    """Connected components of G[A ∪ B], ordered by lowest vertex"""
    ab = sorted(part.A | part.B)
    if not ab:
        return []
    index = {v: i for i, v in enumerate(ab)}
    rows, cols = [], []
    for v in ab:
        for w in G.adjacency[v]:
            if w in index:
                rows.append(index[v])
                cols.append(index[w])
    matrix = csr_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)),
        shape=(len(ab), len(ab))
    )
    _, labels = connected_components(matrix, directed=False)

    members = defaultdict(list)
    for v, label in zip(ab, labels.tolist()):
        members[label].append(v)
    edges = defaultdict(list)
    for r, c in zip(rows, cols):
        if r < c:
            edges[labels[r]].append((ab[r], ab[c]))

    components = [
        ABComponent.build(vs, (v for v in vs if v in part.A), edges[label])
        for label, vs in members.items()
    ]
    components.sort(key=lambda comp: comp.vertices[0])
    return components


def classify_S(comp):
    """Membership in S(G): one A-vertex and three B-vertices"""
    return len(comp.a_vertices) == 1 and len(comp.b_vertices) == 3


def s_components(comps):
    return [comp for comp in comps if classify_S(comp)]


def detect_E1(G, part, comps):
    two_vertex = sum(
        1 for comp in comps
        if len(comp) == 2 and len(comp.a_vertices) == 1 and len(comp.b_vertices) == 1
    )
    if two_vertex >= 2:
        return True
    no_multi_a = all(len(comp.a_vertices) < 2 for comp in comps)
    no_isolated = all(len(comp) > 1 for comp in comps)
    return no_multi_a and no_isolated


def kmax_for(n):
    """max(3, floor(log log n)) in natural logarithms"""
    if n <= math.e:
        return 3
    return max(3, int(math.floor(math.log(math.log(n)))))


def two_core(G):
    degree = G.degrees()
    removed = [False] * G.n
    stack = [v for v in range(G.n) if degree[v] <= 1]
    for v in stack:
        removed[v] = True
    while stack:
        v = stack.pop()
        for w in G.adjacency[v]:
            if not removed[w]:
                degree[w] -= 1
                if degree[w] <= 1:
                    removed[w] = True
                    stack.append(w)
    return [v for v in range(G.n) if not removed[v]]


def short_cycles(G, kmax):
    """
    One witness cycle for every length in [3, kmax] that G contains.
    Each cycle is found from its lowest vertex, inside the 2-core.
    """
    wanted = set(range(3, kmax + 1))
    found = {}
    if not wanted:
        return found
    core = two_core(G)
    in_core = set(core)

    for s in core:
        path = [s]
        on_path = {s}

        def extend(v):
            for w in G.adjacency[v]:
                if w == s and len(path) >= 3 and len(path) not in found:
                    found[len(path)] = list(path)
                elif w > s and w in in_core and w not in on_path and len(path) < kmax:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    on_path.discard(w)
                    path.pop()
                if len(found) == len(wanted):
                    return

        extend(s)
        if len(found) == len(wanted):
            break
    return found


def caterpillar_shape(comp, kmax):
    """
    (b, [a_1, ..., a_k]) when comp is a tree on one B-vertex b and k A-vertices
    with b adjacent to a_1, a_2, a_3 and a_3 a_4 ... a_k a path; else None.
    """
    k = len(comp.a_vertices)
    if not comp.is_tree or len(comp.b_vertices) != 1 or not 3 <= k <= kmax:
        return None
    (b,) = comp.b_vertices
    adjacency = comp.adjacency()
    if len(adjacency[b]) != 3:
        return None

    rest = {v: [w for w in row if w != b] for v, row in adjacency.items() if v != b}
    if any(len(row) > 2 for row in rest.values()):
        return None
    singles = sorted(v for v in adjacency[b] if not rest[v])
    tails = sorted(v for v in adjacency[b] if rest[v])
    if len(tails) > 1:
        return None
    if not tails:
        a1, a2, a3 = singles
    else:
        if len(singles) != 2 or len(rest[tails[0]]) != 1:
            return None
        a1, a2 = singles
        a3 = tails[0]

    order = [a3]
    previous, current = None, a3
    while True:
        step = [w for w in rest[current] if w != previous]
        if not step:
            break
        previous, current = current, step[0]
        order.append(current)
    if len(order) != k - 2:
        return None
    return b, [a1, a2] + order


def caterpillars(part, comps, kmax):
    """Lowest-index caterpillar component for every k in [3, kmax]"""
    found = {}
    for comp in comps:
        shape = caterpillar_shape(comp, kmax)
        if shape is not None:
            k = len(shape[1])
            found.setdefault(k, (comp, shape))
    return found


def detect_Ek(G, part, comps, kmax):
    """The set of k in [2, kmax] for which the event E_k holds"""
    satisfied = set(short_cycles(G, kmax))
    satisfied.update(caterpillars(part, comps, kmax))
    return {k for k in satisfied if 2 <= k <= kmax}


def event_E(Ek, n):
    """E(G): every k in [3, floor(log log n)] is satisfied"""
    upper = int(math.floor(math.log(math.log(n)))) if n > math.e else 0
    return all(k in Ek for k in range(3, upper + 1))


def core_summary(G, part=None, comps=None, d=None):
    """Per-graph statistics behind the core-stats subcommand"""
    part = part if part is not None else strong_core(G)
    comps = comps if comps is not None else ab_components(G, part)
    kmax = kmax_for(G.n)
    Ek = detect_Ek(G, part, comps, kmax)
    s = len(s_components(comps))
    summary = {
        'n': G.n,
        'm': G.m,
        'size_A': len(part.A),
        'size_B': len(part.B),
        'size_C': len(part.C),
        's': s,
        's_over_n': s / G.n if G.n else 0.0,
        'components': len(comps),
        'largest_component': max((len(c) for c in comps), default=0),
        'tree_components': sum(1 for c in comps if c.is_tree),
        'E1': detect_E1(G, part, comps),
        'Ek': ','.join(str(k) for k in sorted(Ek)),
        'E': event_E(Ek, G.n),
        'kmax': kmax
    }
    if d is not None:
        bound = 0.1 * d ** 3 * math.exp(-d)
        summary['s_lower_bound'] = bound
        if summary['s_over_n'] < bound:
            logger.warning(f"|S(G)|/n = {summary['s_over_n']:.6f} is below 0.1*d^3*e^-d = {bound:.6f} (d={d})")
    return summary
