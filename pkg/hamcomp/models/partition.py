from dataclasses import dataclass, field
from enum import Enum


class Colour(Enum):
    BLACK = "BLACK"
    BLUE = "BLUE"
    RED = "RED"


@dataclass(frozen=True)
class CorePartition:
    A: frozenset
    B: frozenset
    C: frozenset
    k: int = 4

    def to_dict(self):
        return {
            'k': self.k,
            'A': sorted(self.A),
            'B': sorted(self.B),
            'C': sorted(self.C)
        }

    def __repr__(self):
        return f'<CorePartition |A|={len(self.A)} |B|={len(self.B)} |C|={len(self.C)}>'


@dataclass(frozen=True)
class ABComponent:
    """A connected component of G^AB with its A/B split"""

    vertices: tuple
    a_vertices: frozenset
    b_vertices: frozenset
    edges: tuple
    is_tree: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'is_tree', len(self.edges) == len(self.vertices) - 1)

    @classmethod
    def build(cls, vertices, a_vertices, edges):
        vertices = tuple(sorted(vertices))
        a_vertices = frozenset(a_vertices)
        b_vertices = frozenset(v for v in vertices if v not in a_vertices)
        edges = tuple(sorted((u, v) if u < v else (v, u) for u, v in edges))
        return cls(vertices, a_vertices, b_vertices, edges)

    def __len__(self):
        return len(self.vertices)

    def cover_edges(self):
        """Edges usable by a cover: those joining two B-vertices are dropped"""
        b = self.b_vertices
        return tuple(e for e in self.edges if not (e[0] in b and e[1] in b))

    def adjacency(self, edges=None):
        rows = {v: [] for v in self.vertices}
        for u, v in (self.edges if edges is None else edges):
            rows[u].append(v)
            rows[v].append(u)
        return {v: sorted(row) for v, row in rows.items()}

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def to_dict(self):
        return {
            'vertices': list(self.vertices),
            'a_vertices': sorted(self.a_vertices),
            'b_vertices': sorted(self.b_vertices),
            'edges': [list(e) for e in self.edges],
            'is_tree': self.is_tree
        }

    def __repr__(self):
        return f'<ABComponent |A|={len(self.a_vertices)} |B|={len(self.b_vertices)} tree={self.is_tree}>'
