from bisect import bisect_left

import numpy as np

from hamcomp.utils.errors import ContractError, ParameterError
from hamcomp.utils.pairs import pair_count, pair_from_index
from hamcomp.utils.rng import make_rng


class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1.

    adjacency[v] is the sorted tuple of neighbours of v; m is the edge count.
    """

    __slots__ = ('n', 'adjacency', 'm')

    def __init__(self, n, adjacency):
        self.n = n
        self.adjacency = adjacency
        self.m = sum(len(row) for row in adjacency) // 2

    @classmethod
    def from_edges(cls, n, edges):
        """Build a graph, rejecting loops, duplicates and out-of-range pairs"""
        if n < 0:
            raise ParameterError(f"Vertex count must be non-negative, got {n}")
        rows = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ParameterError(f"Self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"Edge ({u}, {v}) is out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ParameterError(f"Duplicate edge {key}")
            seen.add(key)
            rows[u].append(v)
            rows[v].append(u)
        return cls(n, tuple(tuple(sorted(row)) for row in rows))

    @classmethod
    def from_edge_arrays(cls, n, us, vs):
        """Fast path for generator output: distinct pairs with u != v, unchecked"""
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        src = np.concatenate([us, vs])
        dst = np.concatenate([vs, us])
        order = np.lexsort((dst, src))
        dst = dst[order].tolist()
        offsets = np.concatenate([[0], np.cumsum(np.bincount(src, minlength=n))]).tolist()
        return cls(n, tuple(tuple(dst[offsets[v]:offsets[v + 1]]) for v in range(n)))

    @classmethod
    def from_adjacency_sets(cls, adjacency_sets):
        return cls(len(adjacency_sets), tuple(tuple(sorted(row)) for row in adjacency_sets))

    @classmethod
    def empty(cls, n):
        return cls(n, tuple(() for _ in range(n)))

    @classmethod
    def complete(cls, n):
        return cls(n, tuple(tuple(u for u in range(n) if u != v) for v in range(n)))

    def degree(self, v):
        return len(self.adjacency[v])

    def degrees(self):
        return [len(row) for row in self.adjacency]

    def has_edge(self, u, v):
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self):
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield (u, v)

    def degree_histogram(self, size=4):
        histogram = [0] * size
        for row in self.adjacency:
            if len(row) < size:
                histogram[len(row)] += 1
        return histogram

    def neighborhood(self, vertices):
        """N_G(U): vertices outside U adjacent to U"""
        vertices = set(vertices)
        return {w for v in vertices for w in self.adjacency[v] if w not in vertices}

    def induced(self, vertices):
        """Induced subgraph relabelled to 0..|U|-1, plus the local->global map"""
        mapping = tuple(sorted(vertices))
        local = {v: i for i, v in enumerate(mapping)}
        rows = tuple(
            tuple(sorted(local[w] for w in self.adjacency[v] if w in local))
            for v in mapping
        )
        return Graph(len(mapping), rows), mapping

    def with_edges(self, extra):
        """G ∪ F for an edge set F disjoint from E(G)"""
        rows = [list(row) for row in self.adjacency]
        for u, v in extra:
            if u == v or self.has_edge(u, v) or v in rows[u]:
                raise ContractError(f"Edge ({u}, {v}) cannot be added to the graph")
            rows[u].append(v)
            rows[v].append(u)
        return Graph(self.n, tuple(tuple(sorted(row)) for row in rows))

    def to_dict(self):
        return {
            'n': self.n,
            'm': self.m,
            'edges': [list(e) for e in self.edges()]
        }

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f'<Graph n={self.n} m={self.m}>'


class EdgeStream:
    """
    The random graph process on n vertices: a uniformly random order of all
    C(n,2) pairs, drawn lazily by a sparse Fisher-Yates shuffle.

    Positions are materialized in whole blocks, so the order depends only on
    (n, seed) and not on how the stream is read.
    """

    BLOCK = 4096

    def __init__(self, n, seed):
        self.n = n
        self.seed = seed
        self.total = pair_count(n)
        self._rng = make_rng(seed)
        self._swaps = {}
        self._order = []

    def _materialize(self, t):
        while len(self._order) < t:
            start = len(self._order)
            size = min(self.BLOCK, self.total - start)
            lows = np.arange(start, start + size, dtype=np.int64)
            draws = self._rng.integers(lows, self.total).tolist()
            swaps = self._swaps
            order = self._order
            for i, j in zip(range(start, start + size), draws):
                value_i = swaps.pop(i, i)
                if j == i:
                    order.append(value_i)
                else:
                    order.append(swaps.get(j, j))
                    swaps[j] = value_i

    def pair_at(self, t):
        """The edge added at process time t (1-indexed)"""
        if not 1 <= t <= self.total:
            raise ParameterError(f"Process time {t} is outside [1, {self.total}]")
        self._materialize(t)
        return pair_from_index(self._order[t - 1], self.n)

    def edges(self, t0, t1):
        """Edges added at times t0+1 .. t1"""
        if not 0 <= t0 <= t1 <= self.total:
            raise ParameterError(f"Invalid process window ({t0}, {t1}] for total {self.total}")
        self._materialize(t1)
        n = self.n
        return [pair_from_index(k, n) for k in self._order[t0:t1]]

    def __iter__(self):
        t = 0
        while t < self.total:
            t_next = min(self.total, t + self.BLOCK)
            yield from self.edges(t, t_next)
            t = t_next

    def prefix_graph(self, t):
        """G_t: the graph formed by the first t edges"""
        return Graph.from_edges(self.n, self.edges(0, t))

    def __repr__(self):
        return f'<EdgeStream n={self.n} seed={self.seed} materialized={len(self._order)}>'
