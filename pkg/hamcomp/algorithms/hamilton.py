"""
Hamilton cycles through a prescribed matching of forced edges.

exact:      bitset reachability DP over (visited set, end vertex), for small H.
heuristic:  rotation-extension on a vertex sequence in which every forced
            pair stays adjacent; seeded, bounded by a step budget.
"""
import logging

from hamcomp.models.certificate import EngineResult
from hamcomp.utils.errors import CapacityError, ContractError, ParameterError
from hamcomp.utils.rng import make_rng

logger = logging.getLogger(__name__)

DEFAULT_EXACT_CAP = 20
DEFAULT_BUDGET = 1_000_000


def _partners(H, forced):
    partner = [-1] * H.n
    for u, v in forced:
        if partner[u] != -1 or partner[v] != -1 or u == v:
            raise ContractError(f"Forced edges must form a matching, vertex clash at ({u}, {v})")
        partner[u] = v
        partner[v] = u
    return partner


def _infeasible(H, forced):
    if H.n < 3:
        return True
    if any(not H.has_edge(u, v) for u, v in forced):
        return True
    return any(H.degree(v) < 2 for v in range(H.n))


def _exact(H, partner, budget):
    n = H.n
    adjacency_bits = [sum(1 << w for w in row) for row in H.adjacency]
    full = (1 << n) - 1
    reach = [0] * (1 << n)
    reach[1] = 1
    steps = 0

    def moves(e, mask):
        p = partner[e]
        if p != -1 and not (mask >> p) & 1:
            return (1 << p) & adjacency_bits[e]
        return adjacency_bits[e] & ~mask

    for mask in range(1, full + 1, 2):
        ends = reach[mask]
        while ends:
            low = ends & -ends
            e = low.bit_length() - 1
            ends ^= low
            step = moves(e, mask)
            while step:
                bit = step & -step
                step ^= bit
                reach[mask | bit] |= bit
                steps += 1
            if steps > budget:
                return EngineResult(None, exhausted=False, steps=steps, mode='exact')

    closing = reach[full] & adjacency_bits[0] & ~1
    if not closing:
        return EngineResult(None, exhausted=True, steps=steps, mode='exact')

    end = (closing & -closing).bit_length() - 1
    cycle = [end]
    mask = full
    while end != 0:
        previous_mask = mask ^ (1 << end)
        candidates = reach[previous_mask] & adjacency_bits[end]
        chosen = None
        while candidates:
            bit = candidates & -candidates
            candidates ^= bit
            p = bit.bit_length() - 1
            if moves(p, previous_mask) >> end & 1:
                chosen = p
                break
        mask, end = previous_mask, chosen
        cycle.append(end)
    cycle.reverse()
    return EngineResult(cycle, exhausted=False, steps=steps, mode='exact')


def _heuristic(H, partner, budget, seed):
    rng = make_rng(seed)
    n = H.n
    adjacency = H.adjacency

    def is_forced(a, b):
        return partner[a] == b

    path = [0]
    if partner[0] != -1:
        path.append(partner[0])
    position = {v: i for i, v in enumerate(path)}
    steps = 0

    def rebuild(start):
        for i in range(start, len(path)):
            position[path[i]] = i

    while steps < budget:
        steps += 1
        end = path[-1]
        if len(path) == n:
            head = path[0]
            if H.has_edge(head, end):
                return EngineResult(path, steps=steps, mode='heuristic')
            # crossover: end ~ v_i and head ~ v_{i+1}
            for w in adjacency[head]:
                i = position[w] - 1
                if i >= 1 and H.has_edge(end, path[i]) and not is_forced(path[i], w):
                    cycle = path[:i + 1] + path[:i:-1]
                    return EngineResult(cycle, steps=steps, mode='heuristic')

        fresh = [w for w in adjacency[end] if w not in position]
        if fresh:
            y = fresh[int(rng.integers(len(fresh)))]
            path.append(y)
            position[y] = len(path) - 1
            if partner[y] != -1 and partner[y] not in position:
                path.append(partner[y])
                position[partner[y]] = len(path) - 1
            continue

        pivots = [
            w for w in adjacency[end]
            if position[w] < len(path) - 2 and not is_forced(w, path[position[w] + 1])
        ]
        if not pivots or rng.random() < 0.05:
            path.reverse()
            rebuild(0)
            continue
        w = pivots[int(rng.integers(len(pivots)))]
        i = position[w]
        path[i + 1:] = path[:i:-1]
        rebuild(i + 1)

    return EngineResult(None, exhausted=False, steps=steps, mode='heuristic')


def hamilton_with_forced(H, forced, mode='exact', budget=DEFAULT_BUDGET, seed=0, exact_cap=DEFAULT_EXACT_CAP):
    """
    A Hamilton cycle of H using every edge of the matching `forced`, as an
    EngineResult. Failure is a value; exhausted=True means no such cycle exists.
    """
    forced = [tuple(e) for e in forced]
    if _infeasible(H, forced):
        return EngineResult(None, exhausted=True, steps=0, mode=mode)
    partner = _partners(H, forced)

    if mode == 'exact':
        if H.n > exact_cap:
            raise CapacityError(
                f"Exact Hamilton engine is capped at {exact_cap} vertices, got {H.n}",
                size=H.n, cap=exact_cap
            )
        result = _exact(H, partner, budget)
    elif mode == 'heuristic':
        result = _heuristic(H, partner, budget, seed)
    else:
        raise ParameterError(f"Unknown engine mode: {mode}")

    logger.debug(f"Hamilton engine ({mode}) on n={H.n}, |forced|={len(forced)}: "
                 f"found={result.found} steps={result.steps}")
    return result
