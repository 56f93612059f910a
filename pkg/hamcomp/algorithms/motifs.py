"""
Degree classes, 3-stars, 3-prespiders and 3-spiders, counted from scratch or
maintained under edge insertion.

Per centre w, with L the degree-2 neighbours of w and b(a) the other neighbour
of a in L, the 3-spiders centred at w are the triples of L whose b-values are
pairwise distinct and avoid the triple. Grouping L by b(a) gives e_3 of the
group sizes; a triple is then spoiled only by a pair a, a' with b(a) = a',
which forces b(a') = a, and each such pair spoils |L| - 2 triples.
"""
import math

from hamcomp.models.motifs import MotifCounts
from hamcomp.utils.errors import ContractError


def _e3(sizes):
    e1 = e2 = e3 = 0
    for x in sizes:
        e3 += e2 * x
        e2 += e1 * x
        e1 += x
    return e3


def center_counts(adjacency, w):
    """(3-prespiders, 3-spiders) centred at w"""
    row = adjacency[w]
    low = 0
    groups = {}
    size_L = 0
    linked = 0
    for a in row:
        da = len(adjacency[a])
        if da <= 2:
            low += 1
        if da == 2:
            size_L += 1
            b = next(x for x in adjacency[a] if x != w)
            groups[b] = groups.get(b, 0) + 1
            if b in row and len(adjacency[b]) == 2:
                linked += 1
    if size_L < 3:
        return math.comb(low, 3), 0
    spiders = _e3(groups.values()) - (linked // 2) * (size_L - 2)
    return math.comb(low, 3), spiders


def count_motifs(G):
    histogram = G.degree_histogram(4)
    stars3 = sum(math.comb(len(row), 3) for row in G.adjacency)
    s3_pre = s3 = 0
    for w in range(G.n):
        pre, spiders = center_counts(G.adjacency, w)
        s3_pre += pre
        s3 += spiders
    return MotifCounts(*histogram, stars3=stars3, s3_pre=s3_pre, s3=s3)


def _affected(adjacency, u, v):
    return {u, v} | set(adjacency[u]) | set(adjacency[v])


def _local_sums(adjacency, centres):
    pre = spiders = 0
    for w in centres:
        p, s = center_counts(adjacency, w)
        pre += p
        spiders += s
    return pre, spiders


def _shift_histogram(histogram, old_degree):
    if old_degree < 4:
        histogram[old_degree] -= 1
    if old_degree + 1 < 4:
        histogram[old_degree + 1] += 1


def insert_edge_update(counts, G, e):
    """Counts of G + e from the counts of G, touching only the 2-neighbourhood of e"""
    u, v = e
    if u == v or G.has_edge(u, v):
        raise ContractError(f"Edge ({u}, {v}) is already present or a loop")
    H = G.with_edges([(u, v)])
    centres = _affected(G.adjacency, u, v) | _affected(H.adjacency, u, v)
    old_pre, old_spiders = _local_sums(G.adjacency, centres)
    new_pre, new_spiders = _local_sums(H.adjacency, centres)

    histogram = list(counts.n_i)
    _shift_histogram(histogram, G.degree(u))
    _shift_histogram(histogram, G.degree(v))
    stars3 = counts.stars3 + math.comb(G.degree(u), 2) + math.comb(G.degree(v), 2)
    return MotifCounts(
        *histogram,
        stars3=stars3,
        s3_pre=counts.s3_pre + new_pre - old_pre,
        s3=counts.s3 + new_spiders - old_spiders
    )


class MotifCounter:
    """Mutable motif counts for one growing graph, owned by one process run"""

    def __init__(self, n):
        self.n = n
        self.adjacency = [set() for _ in range(n)]
        self.histogram = [n, 0, 0, 0]
        self.stars3 = 0
        self.s3_pre = 0
        self.s3 = 0
        self.m = 0

    @classmethod
    def from_graph(cls, G):
        counter = cls(G.n)
        counter.adjacency = [set(row) for row in G.adjacency]
        counts = count_motifs(G)
        counter.histogram = list(counts.n_i)
        counter.stars3 = counts.stars3
        counter.s3_pre = counts.s3_pre
        counter.s3 = counts.s3
        counter.m = G.m
        return counter

    def has_edge(self, u, v):
        return v in self.adjacency[u]

    def insert(self, u, v):
        adjacency = self.adjacency
        if u == v or v in adjacency[u]:
            raise ContractError(f"Edge ({u}, {v}) is already present or a loop")
        centres = _affected(adjacency, u, v)
        old_pre, old_spiders = _local_sums(adjacency, centres)
        du, dv = len(adjacency[u]), len(adjacency[v])

        adjacency[u].add(v)
        adjacency[v].add(u)
        self.m += 1
        new_pre, new_spiders = _local_sums(adjacency, centres)

        _shift_histogram(self.histogram, du)
        _shift_histogram(self.histogram, dv)
        self.stars3 += math.comb(du, 2) + math.comb(dv, 2)
        self.s3_pre += new_pre - old_pre
        self.s3 += new_spiders - old_spiders

    @property
    def counts(self):
        return MotifCounts(*self.histogram, stars3=self.stars3, s3_pre=self.s3_pre, s3=self.s3)


def expected_lb_closed_form(d):
    """Per-vertex expectation of 2n_0 + n_1 + s_3' in G(n, d/n)"""
    d = float(d)
    prespiders = (d ** 3 + 3 * d ** 4 + 3 * d ** 5 + d ** 6) / 6
    return 2 * math.exp(-d) + d * math.exp(-d) + prespiders * math.exp(-3 * d)
