"""
Brute-force ground truth for small graphs: Hamiltonicity, cycle spectrum,
minimum path cover, mu(G) and mu-hat(G), all by subset dynamic programming.
"""
from itertools import combinations

from hamcomp.models.oracle import OracleReport
from hamcomp.utils.errors import CapacityError

HAMILTONIAN_CAP = 16
SPECTRUM_CAP = 14
MU_HAT_CAP = 7


def _check_cap(G, cap, what):
    if G.n > cap:
        raise CapacityError(f"{what} is capped at n={cap}, got n={G.n}", size=G.n, cap=cap)


def _bits(G):
    return [sum(1 << w for w in row) for row in G.adjacency]


def brute_hamiltonian(G):
    _check_cap(G, HAMILTONIAN_CAP, "Hamiltonicity oracle")
    n = G.n
    if n < 3:
        return False
    adjacency = _bits(G)
    full = (1 << n) - 1
    reach = [0] * (1 << n)
    reach[1] = 1
    for mask in range(1, full, 2):
        ends = reach[mask]
        while ends:
            low = ends & -ends
            ends ^= low
            step = adjacency[low.bit_length() - 1] & ~mask
            while step:
                bit = step & -step
                step ^= bit
                reach[mask | bit] |= bit
    return bool(reach[full] & adjacency[0])


def brute_spectrum(G):
    """Every cycle length present in G"""
    _check_cap(G, SPECTRUM_CAP, "Cycle spectrum oracle")
    n = G.n
    adjacency = _bits(G)
    reach = [0] * (1 << n)
    lengths = set()
    for s in range(n):
        reach[1 << s] = 1 << s
    for mask in range(1, 1 << n):
        ends = reach[mask]
        if not ends:
            continue
        low_bit = mask & -mask
        s = low_bit.bit_length() - 1
        size = bin(mask).count('1')
        if size >= 3 and ends & adjacency[s]:
            lengths.add(size)
        higher = ~((low_bit << 1) - 1)
        while ends:
            low = ends & -ends
            ends ^= low
            step = adjacency[low.bit_length() - 1] & ~mask & higher
            while step:
                bit = step & -step
                step ^= bit
                reach[mask | bit] |= bit
    return lengths


def brute_path_cover(G):
    """Minimum number of vertex-disjoint paths covering V(G)"""
    _check_cap(G, HAMILTONIAN_CAP, "Path cover oracle")
    n = G.n
    if n == 0:
        return 0
    adjacency = _bits(G)
    full = (1 << n) - 1
    paths = [n + 1] * (1 << n)
    ends = [0] * (1 << n)
    paths[0] = 0
    # keeping only the ends reachable with the minimum count is exact
    for mask in range(full):
        k, E = paths[mask], ends[mask]
        free = full & ~mask
        while free:
            bit = free & -free
            free ^= bit
            w = bit.bit_length() - 1
            candidate = k if adjacency[w] & E else k + 1
            target = mask | bit
            if candidate < paths[target]:
                paths[target] = candidate
                ends[target] = bit
            elif candidate == paths[target]:
                ends[target] |= bit
    return paths[full]


def brute_mu(G):
    """0 for Hamiltonian G, else the minimum path cover; None below three vertices"""
    _check_cap(G, HAMILTONIAN_CAP, "Completion number oracle")
    if G.n < 3:
        return None
    if brute_hamiltonian(G):
        return 0
    return brute_path_cover(G)


def brute_mu_hat(G):
    """Fewest added edges making G pancyclic, searched by increasing size"""
    _check_cap(G, MU_HAT_CAP, "Pancyclic completion oracle")
    n = G.n
    if n < 3:
        return None
    target = set(range(3, n + 1))
    missing = [(u, v) for u, v in combinations(range(n), 2) if not G.has_edge(u, v)]
    degree = G.degrees()
    for size in range(brute_mu(G), len(missing) + 1):
        for extra in combinations(missing, size):
            raised = list(degree)
            for u, v in extra:
                raised[u] += 1
                raised[v] += 1
            if min(raised) < 2:
                continue
            if brute_spectrum(G.with_edges(extra)) == target:
                return size
    return None


def oracle_report(G, spectrum=True, mu_hat=False):
    hamiltonian = brute_hamiltonian(G)
    return OracleReport(
        n=G.n,
        mu=brute_mu(G),
        hamiltonian=hamiltonian,
        spectrum=frozenset(brute_spectrum(G)) if spectrum and G.n <= SPECTRUM_CAP else None,
        mu_hat=brute_mu_hat(G) if mu_hat and G.n <= MU_HAT_CAP else None,
        path_cover=brute_path_cover(G)
    )
