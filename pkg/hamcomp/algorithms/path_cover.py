"""
Minimum A-endpoint path covers of G^AB components.

A cover Q costs a(Q) = sum over v in A of (2 - deg_Q(v)): path ends in A count
once, singleton A-vertices twice. Trees go through a linear DP, tiny trees
through the closed formula 2n_0 + n_1 + s_3', small cyclic components through
branch and bound, and larger ones with few independent cycles by branching
over feedback edges.
"""
import logging
import math
from collections import Counter
from itertools import combinations

from hamcomp.algorithms.strong_core import ab_components, strong_core
from hamcomp.models.cover import CoverMethod, CoverResult, MuPrime, count_a_endpoints
from hamcomp.utils.errors import CapacityError, ContractError

logger = logging.getLogger(__name__)

INF = math.inf
DEFAULT_EXHAUSTIVE_CAP = 16
DEFAULT_CYCLE_CAP = 12


def _weight(comp):
    return {v: (1 if v in comp.a_vertices else 0) for v in comp.vertices}


def _is_forest(vertices, edges):
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def paths_from_edges(vertices, edges):
    """Split a max-degree-2 acyclic edge set into paths, each read from its lower end"""
    rows = {v: [] for v in vertices}
    for u, v in edges:
        rows[u].append(v)
        rows[v].append(u)
    seen = set()
    paths = []
    for v in sorted(vertices):
        if v in seen or len(rows[v]) > 1:
            continue
        path = [v]
        seen.add(v)
        previous, current = None, v
        while True:
            step = [w for w in rows[current] if w != previous]
            if not step:
                break
            previous, current = current, step[0]
            path.append(current)
            seen.add(current)
        paths.append(tuple(path))
    if len(seen) != len(rows):
        raise ContractError("Edge set contains a cycle, not a path cover")
    paths.sort()
    return tuple(paths)


def _forest_dp(comp, edges, spent=None):
    """
    Exact minimum on a forest; returns (a_value, chosen edges).

    spent[v] counts cover edges at v committed outside the forest, leaving
    room 2 - spent[v] for forest edges.
    """
    weight = _weight(comp)
    spent = spent or {}
    room = {v: 2 - spent.get(v, 0) for v in comp.vertices}
    rows = comp.adjacency(edges)
    visited = set()
    total = 0
    chosen = []

    for root in comp.vertices:
        if root in visited:
            continue
        # iterative DFS order, parents before children
        order, parent = [], {root: None}
        stack = [root]
        visited.add(root)
        while stack:
            v = stack.pop()
            order.append(v)
            for w in rows[v]:
                if w not in visited:
                    visited.add(w)
                    parent[w] = v
                    stack.append(w)

        table = {}
        history = {}
        for v in reversed(order):
            children = [w for w in rows[v] if parent.get(w) == v and w != parent[v]]
            current = [0, INF, INF]
            steps = []
            for c in children:
                child = table[c]
                wc = weight[c]
                rc = room[c]
                skip_cost, skip_j = min((child[j] + wc * (rc - j), j) for j in range(rc + 1))
                take_cost, take_j = min(((child[j] + wc * (rc - 1 - j), j) for j in range(rc)), default=(INF, None))
                merged = [INF, INF, INF]
                back = [None, None, None]
                for j in range(3):
                    if current[j] == INF:
                        continue
                    cost = current[j] + skip_cost
                    if cost < merged[j]:
                        merged[j] = cost
                        back[j] = (j, False, skip_j)
                    if j < room[v] and take_cost < INF:
                        cost = current[j] + take_cost
                        if cost < merged[j + 1]:
                            merged[j + 1] = cost
                            back[j + 1] = (j, True, take_j)
                steps.append((c, back))
                current = merged
            table[v] = current
            history[v] = steps

        rr = room[root]
        best, best_j = min((table[root][j] + weight[root] * (rr - j), j) for j in range(rr + 1))
        total += best

        pending = [(root, best_j)]
        while pending:
            v, j = pending.pop()
            for c, back in reversed(history[v]):
                j, taken, j_c = back[j]
                if taken:
                    chosen.append((v, c) if v < c else (c, v))
                pending.append((c, j_c))
    return int(total), chosen


def _spanning_split(vertices, edges):
    """Edges of a spanning forest and the feedback edges left over"""
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    forest, feedback = [], []
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            feedback.append((u, v))
        else:
            parent[ru] = rv
            forest.append((u, v))
    return forest, feedback


def _closed_cycle(edges):
    """The edges of one cycle in a max-degree-2 edge set, or None"""
    rows = {}
    for u, v in edges:
        rows.setdefault(u, []).append(v)
        rows.setdefault(v, []).append(u)
    seen = set()
    for start in rows:
        if start in seen:
            continue
        members, stack = {start}, [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            for w in rows[u]:
                if w not in seen:
                    seen.add(w)
                    members.add(w)
                    stack.append(w)
        if all(len(rows[u]) == 2 for u in members):
            return [(u, v) for u, v in edges if u in members]
    return None


def cyclomatic_number(comp, edges=None):
    edges = list(comp.cover_edges() if edges is None else edges)
    return len(_spanning_split(comp.vertices, edges)[1])


def a_feedback_branch(comp, cycle_cap=DEFAULT_CYCLE_CAP, edges=None):
    """
    Exact minimum for components with few independent cycles.

    Every subset of the feedback edges of a spanning forest is committed in
    turn and the forest DP covers the rest within the degree room left over. A
    DP optimum that closes a cycle is split on the forest edges of that cycle,
    since any valid cover drops one of them.
    """
    edges = list(comp.cover_edges() if edges is None else edges)
    forest, feedback = _spanning_split(comp.vertices, edges)
    if len(feedback) > cycle_cap:
        raise CapacityError(
            f"Component with {len(feedback)} independent cycles exceeds the cycle cap {cycle_cap}",
            size=len(feedback), cap=cycle_cap
        )

    best_value, best_edges = INF, None
    for size in range(len(feedback) + 1):
        for committed in combinations(feedback, size):
            spent = Counter(v for edge in committed for v in edge)
            if any(count > 2 for count in spent.values()) or _closed_cycle(committed):
                continue
            pending, tried = [frozenset()], set()
            while pending:
                dropped = pending.pop()
                if dropped in tried:
                    continue
                tried.add(dropped)
                value, chosen = _forest_dp(comp, [e for e in forest if e not in dropped], spent)
                if value >= best_value:
                    continue
                cover = chosen + list(committed)
                cycle = _closed_cycle(cover)
                if cycle is None:
                    best_value, best_edges = value, cover
                    continue
                pending.extend(dropped | {e} for e in cycle if e not in committed)
            if best_value == 0:
                break
        if best_value == 0:
            break

    logger.debug(f"feedback branch: {len(comp)} vertices, {len(feedback)} cycles, a={best_value}")
    witness = paths_from_edges(comp.vertices, best_edges)
    return CoverResult(int(best_value), witness, CoverMethod.FEEDBACK, comp)


def a_tree_dp(comp):
    """Minimum A-endpoint cover of a tree component, with witness"""
    if not comp.is_tree:
        raise ContractError(f"Tree DP needs a tree component, got {comp!r}")
    value, chosen = _forest_dp(comp, comp.cover_edges())
    witness = paths_from_edges(comp.vertices, chosen)
    return CoverResult(value, witness, CoverMethod.TREE_DP, comp)


def prespider_count(comp, degree=None):
    """(center, triple) pairs: three A-vertices of degree <= 2 sharing a neighbour"""
    rows = comp.adjacency()
    degree = degree or {v: len(row) for v, row in rows.items()}
    count = 0
    for w, row in rows.items():
        low = sum(1 for u in row if u in comp.a_vertices and degree[u] <= 2)
        count += math.comb(low, 3)
    return count


def a_formula_small(comp, prespider=True):
    """a(T) = 2n_0(T) + n_1(T) + s_3'(T) for trees with at most three A-vertices"""
    if not comp.is_tree or len(comp.a_vertices) > 3:
        raise ContractError(f"Closed formula needs a tree with |A| <= 3, got {comp!r}")
    rows = comp.adjacency()
    degree = {v: len(row) for v, row in rows.items()}
    n0 = sum(1 for v in comp.a_vertices if degree[v] == 0)
    n1 = sum(1 for v in comp.a_vertices if degree[v] == 1)
    s3 = prespider_count(comp, degree) if prespider else 0
    return CoverResult(2 * n0 + n1 + s3, None, CoverMethod.FORMULA, comp)


def _branch_and_bound(comp, edges):
    weight = _weight(comp)
    a_vertices = comp.a_vertices
    degree = {v: 0 for v in comp.vertices}
    remaining = {v: 0 for v in comp.vertices}
    for u, v in edges:
        remaining[u] += 1
        remaining[v] += 1

    floor = sum(2 - min(2, remaining[v]) for v in a_vertices)
    if a_vertices and not comp.b_vertices:
        floor = max(floor, 2)

    parent = {v: v for v in comp.vertices}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    best = [2 * len(a_vertices), []]
    taken = []

    def bound():
        return sum(max(0, 2 - degree[v] - remaining[v]) for v in a_vertices)

    def search(i):
        if best[0] == floor:
            return
        if bound() >= best[0]:
            return
        if i == len(edges):
            cost = sum(weight[v] * (2 - degree[v]) for v in a_vertices)
            if cost < best[0]:
                best[0] = cost
                best[1] = list(taken)
            return
        u, v = edges[i]
        remaining[u] -= 1
        remaining[v] -= 1
        if degree[u] < 2 and degree[v] < 2:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                degree[u] += 1
                degree[v] += 1
                taken.append((u, v))
                search(i + 1)
                taken.pop()
                degree[u] -= 1
                degree[v] -= 1
                parent[ru] = ru
        search(i + 1)
        remaining[u] += 1
        remaining[v] += 1

    search(0)
    return best[0], best[1]


def a_exhaustive(comp, cap=DEFAULT_EXHAUSTIVE_CAP, edges=None):
    """Exact minimum over all path covers by branch and bound, any component shape"""
    if len(comp) > cap:
        raise CapacityError(
            f"Component with {len(comp)} vertices exceeds the exhaustive cap {cap}",
            size=len(comp), cap=cap
        )
    edges = list(comp.edges if edges is None else edges)
    value, chosen = _branch_and_bound(comp, edges)
    witness = paths_from_edges(comp.vertices, chosen)
    return CoverResult(value, witness, CoverMethod.EXHAUSTIVE, comp)


def cover_component(comp, cap=DEFAULT_EXHAUSTIVE_CAP, cycle_cap=DEFAULT_CYCLE_CAP):
    """Optimal witness cover that never uses an edge joining two B-vertices"""
    edges = comp.cover_edges()
    if _is_forest(comp.vertices, edges):
        value, chosen = _forest_dp(comp, edges)
        return CoverResult(value, paths_from_edges(comp.vertices, chosen), CoverMethod.TREE_DP, comp)
    if len(comp) <= cap:
        return a_exhaustive(comp, cap=cap, edges=edges)
    cycles = cyclomatic_number(comp, edges)
    if cycles > cycle_cap:
        raise CapacityError(
            f"Component with {len(comp)} vertices and {cycles} independent cycles exceeds "
            f"the exhaustive cap {cap} and the cycle cap {cycle_cap}",
            size=len(comp), cap=cap
        )
    return a_feedback_branch(comp, cycle_cap=cycle_cap, edges=edges)


def component_cover(comp, cap=DEFAULT_EXHAUSTIVE_CAP, verify=False, cycle_cap=DEFAULT_CYCLE_CAP):
    if comp.is_tree and len(comp.a_vertices) <= 3 and not verify:
        return a_formula_small(comp)
    if not comp.a_vertices:
        return CoverResult(0, tuple((v,) for v in comp.vertices), CoverMethod.FORMULA, comp)
    return cover_component(comp, cap=cap, cycle_cap=cycle_cap)


def mu_prime(G, part=None, comps=None, cap=DEFAULT_EXHAUSTIVE_CAP, verify=False):
    """
    a(G) summed over the components of G^AB and mu'(G) = ceil(a(G)/2).

    With verify set, the closed formula is bypassed and every component gets a
    witness cover.
    """
    part = part if part is not None else strong_core(G)
    comps = comps if comps is not None else ab_components(G, part)
    results = tuple(component_cover(comp, cap=cap, verify=verify) for comp in comps)
    total = sum(result.a_value for result in results)
    logger.debug(f"mu_prime: {len(comps)} components, a(G)={total}")
    return MuPrime(total, results)


def verify_cover(comp, result):
    """Disjoint, covering, uses component edges, and its A-endpoint count matches"""
    if result.witness is None:
        return True
    seen = [v for path in result.witness for v in path]
    if sorted(seen) != list(comp.vertices):
        return False
    edges = set(comp.edges)
    for path in result.witness:
        for u, v in zip(path, path[1:]):
            if ((u, v) if u < v else (v, u)) not in edges:
                return False
    return count_a_endpoints(result.witness, comp.a_vertices) == result.a_value


def brute_cover_value(comp):
    """Plain enumeration of edge subsets; only for the tiniest components"""
    best = None
    edges = list(comp.edges)
    for size in range(len(edges) + 1):
        for subset in combinations(edges, size):
            degree = {v: 0 for v in comp.vertices}
            for u, v in subset:
                degree[u] += 1
                degree[v] += 1
            if any(x > 2 for x in degree.values()) or not _is_forest(comp.vertices, subset):
                continue
            cost = sum(2 - degree[v] for v in comp.a_vertices)
            best = cost if best is None else min(best, cost)
    return best
