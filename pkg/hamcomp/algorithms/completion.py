"""
Completion set F = F0 ∪ F1 ∪ F2 with witness cycles.

The optimal cover Q of G^AB is turned into Q* by splicing caterpillar
components (F0). Paths with one end in A are paired through their A-ends (F1),
paths with both ends in A are threaded into the first pair (F2), and every
resulting path is replaced by a forced edge between its B-ends. A Hamilton
cycle of G[C ∪ B'] through the forced edges then expands into a Hamilton
cycle of G ∪ F; bypassing star components of S(G) gives the cycles of
length n - ℓ.
"""
import logging

from hamcomp.algorithms.hamilton import DEFAULT_BUDGET, DEFAULT_EXACT_CAP, hamilton_with_forced
from hamcomp.algorithms.path_cover import DEFAULT_EXHAUSTIVE_CAP, cover_component, mu_prime
from hamcomp.algorithms.strong_core import (
    ab_components,
    caterpillars,
    classify_S,
    kmax_for,
    short_cycles,
    strong_core,
)
from hamcomp.models.certificate import CertificateStatus, CompletionCertificate
from hamcomp.utils.rng import trial_seed

logger = logging.getLogger(__name__)

STRUCTURAL = CertificateStatus.STRUCTURAL_FAILURE


def _edge(u, v):
    return (u, v) if u < v else (v, u)


def verify_cycle(G, F, cycle, expected_len):
    """A simple cycle of the stated length on edges of G or F"""
    if cycle is None or len(cycle) != expected_len or expected_len < 3:
        return False
    if len(set(cycle)) != len(cycle):
        return False
    extra = {_edge(u, v) for u, v in F}
    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
        if not (0 <= u < G.n and 0 <= v < G.n):
            return False
        if not G.has_edge(u, v) and _edge(u, v) not in extra:
            return False
    return True


def _star_path(comp):
    """(w1, u, w2) and w3 for a star of S(G), or None when u has < 2 B-neighbours"""
    (u,) = comp.a_vertices
    leaves = sorted(w for w in comp.adjacency()[u] if w in comp.b_vertices)
    if len(leaves) < 2:
        return None
    w1, w2 = leaves[:2]
    (w3,) = comp.b_vertices - {w1, w2}
    return (w1, u, w2), w3


def _assemble_cover(G, part, comps, kmax, cert, cap):
    """Q* as a list of paths plus the star paths; None after a structural failure"""
    native = short_cycles(G, kmax)
    cert.native_short_cycles = native
    shapes = caterpillars(part, comps, kmax)
    missing = [k for k in range(3, kmax + 1) if k not in native and k not in shapes]
    if missing:
        cert.fail(STRUCTURAL, f"no cycle or caterpillar component for lengths {missing}")
        return None
    spliced = {
        shapes[k][0].vertices[0]: (k, shapes[k][1])
        for k in range(3, kmax + 1) if k not in native
    }

    paths, stars = [], []
    for comp in comps:
        key = comp.vertices[0]
        if key in spliced:
            k, (b, a) = spliced[key]
            paths.append((a[1], b) + tuple(a[2:]) + (a[0],))
            cert.F0.add(_edge(a[-1], a[0]))
            cert.short_cycle_witnesses[k] = [a[0], b] + list(a[2:])
        elif classify_S(comp):
            star = _star_path(comp)
            if star is None:
                cert.fail(STRUCTURAL, f"S-component at {key} has no star centre")
                return None
            stars.append(star[0])
            paths.append((star[1],))
        else:
            paths.extend(cover_component(comp, cap=cap).witness)
    return paths, stars


def _classify(paths, A):
    aa, ab, bb, singles = [], [], [], []
    for path in paths:
        head, tail = path[0] in A, path[-1] in A
        if len(path) == 1:
            (aa if head else singles).append(path)
        elif head and tail:
            aa.append(path)
        elif head or tail:
            ab.append(path if head else path[::-1])
        else:
            bb.append(path)
    for group in (aa, ab, bb):
        group.sort(key=min)
    singles.sort()
    return aa, ab, bb, [v for (v,) in singles]


def _pair_paths(aa, ab, cert):
    """Pairs ab-paths into forced edges between their B-ends; returns {(y, y'): expansion}"""
    forced = {}
    for i in range(0, len(ab), 2):
        first, second = ab[i], ab[i + 1]
        x1, x2 = first[0], second[0]
        route = list(first[::-1])
        if i == 0 and aa:
            cert.F2.add(_edge(x1, aa[0][0]))
            for left, right in zip(aa, aa[1:]):
                cert.F2.add(_edge(left[-1], right[0]))
            cert.F2.add(_edge(aa[-1][-1], x2))
            for path in aa:
                route.extend(path)
        else:
            cert.F1.add(_edge(x1, x2))
        route.extend(second)
        y1, y2 = first[-1], second[-1]
        cert.M.add(_edge(y1, y2))
        forced[(y1, y2)] = route
    return forced


def _expand(cycle, expansions):
    out = []
    for p, q in zip(cycle, cycle[1:] + cycle[:1]):
        route = expansions.get((p, q))
        if route is None:
            reverse = expansions.get((q, p))
            route = reverse[::-1] if reverse is not None else None
        out.append(p)
        if route is not None:
            out.extend(route[1:-1])
    return out


def build_completion(G, part=None, comps=None, engine_mode='heuristic', budget=DEFAULT_BUDGET,
                     seed=0, cap=DEFAULT_EXHAUSTIVE_CAP, exact_cap=DEFAULT_EXACT_CAP):
    """
    Certificate for G; construction steps that cannot be carried out end in a
    structural failure. A component of G^AB beyond the cover caps raises
    CapacityError.
    """
    part = part if part is not None else strong_core(G)
    comps = comps if comps is not None else ab_components(G, part)
    kmax = kmax_for(G.n)
    cert = CompletionCertificate(n=G.n, kmax=kmax)

    if G.n < 3:
        return cert.fail(STRUCTURAL, "graphs on fewer than three vertices have no cycles")
    cert.mu_prime = mu_prime(G, part, comps, cap=cap).mu_prime
    cert.s = sum(1 for comp in comps if classify_S(comp))

    assembled = _assemble_cover(G, part, comps, kmax, cert, cap)
    if assembled is None:
        return cert
    paths, stars = assembled

    aa, ab, bb, singles = _classify(paths, part.A)
    if len(ab) % 2 == 1:
        if not singles:
            return cert.fail(STRUCTURAL, "odd number of A-B paths and no B-singleton to pad with")
        pad = singles.pop(0)
        ab.append((pad,))
    if aa and len(ab) < 2:
        return cert.fail(STRUCTURAL, "A-A paths present but fewer than two A-B paths")

    expansions = _pair_paths(aa, ab, cert)
    for path in bb:
        expansions[(path[0], path[-1])] = list(path)

    F = cert.F
    if any(G.has_edge(u, v) for u, v in F):
        return cert.fail(STRUCTURAL, "a completion edge is already an edge of G")
    if len(F) != cert.mu_prime:
        logger.error(f"|F|={len(F)} differs from mu'={cert.mu_prime}")
        return cert.fail(STRUCTURAL, f"|F|={len(F)} differs from mu'={cert.mu_prime}")

    ends = {v for pair in expansions for v in pair} | {v for star in stars for v in (star[0], star[-1])}
    H_vertices = set(part.C) | ends | set(singles)
    if len(H_vertices) < 3:
        return cert.fail(STRUCTURAL, "the core side of the construction has fewer than three vertices")
    H_base, mapping = G.induced(H_vertices)
    local = {v: i for i, v in enumerate(mapping)}

    s = len(stars)
    for ell in [s] + list(range(s)):
        active = dict(expansions)
        for star in stars[:ell]:
            active[(star[0], star[-1])] = list(star)
        forced = [(local[p], local[q]) for p, q in active]
        missing = [e for e in forced if not H_base.has_edge(*e)]
        H = H_base.with_edges(missing)

        result = hamilton_with_forced(
            H, forced, mode=engine_mode, budget=budget,
            seed=trial_seed(seed, ell), exact_cap=exact_cap
        )
        stats = result.to_dict()
        stats['ell'] = ell
        cert.engine_stats.append(stats)
        if not result.found:
            detail = " (no such cycle exists)" if result.exhausted else ""
            logger.warning(f"Hamilton engine failed for ell={ell} after {result.steps} steps{detail}")
            return cert.fail(CertificateStatus.ENGINE_FAILURE,
                             f"no Hamilton cycle through the forced edges for ell={ell}{detail}")

        cycle = _expand([mapping[v] for v in result.cycle], active)
        length = G.n - (s - ell)
        if not verify_cycle(G, F, cycle, length):
            logger.error(f"Expanded cycle for ell={ell} failed verification")
            return cert.fail(STRUCTURAL, f"expanded cycle for ell={ell} failed verification")
        cert.long_cycle_witnesses[length] = cycle
        if ell == s:
            cert.hamilton_witness = cycle

    logger.info(f"Completion certificate: n={G.n} |F|={len(F)} s={s} lengths {G.n - s}..{G.n}")
    return cert


def verify_certificate(G, cert):
    """Problems found when re-checking a successful certificate; empty when sound"""
    problems = []
    F = cert.F
    if len(cert.F0) + len(cert.F1) + len(cert.F2) != len(F):
        problems.append("F0, F1, F2 overlap")
    if any(G.has_edge(u, v) for u, v in F):
        problems.append("F meets E(G)")
    expected = mu_prime(G).mu_prime
    if len(F) != expected:
        problems.append(f"|F|={len(F)} but mu'={expected}")
    if not verify_cycle(G, F, cert.hamilton_witness, G.n):
        problems.append("Hamilton witness does not verify")
    for length in range(G.n - cert.s, G.n + 1):
        if not verify_cycle(G, F, cert.long_cycle_witnesses.get(length), length):
            problems.append(f"long cycle of length {length} does not verify")
    for length, cycle in cert.short_cycle_witnesses.items():
        if not verify_cycle(G, F, cycle, length):
            problems.append(f"short cycle of length {length} does not verify")
    for length, cycle in cert.native_short_cycles.items():
        if not verify_cycle(G, (), cycle, length):
            problems.append(f"native cycle of length {length} does not verify")
    covered = set(cert.short_cycle_witnesses) | set(cert.native_short_cycles)
    if not set(range(3, cert.kmax + 1)) <= covered:
        problems.append("short cycle lengths are incomplete")
    return problems
