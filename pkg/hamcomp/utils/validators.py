import math

from hamcomp.utils.errors import ParameterError


def validate_vertex_count(n, minimum=1):
    """Validate a vertex count"""
    if not isinstance(n, (int,)) or isinstance(n, bool):
        raise ParameterError(f"Vertex count must be an integer, got {n!r}")
    if n < minimum:
        raise ParameterError(f"Vertex count must be at least {minimum}, got {n}")
    return n


def validate_probability(p):
    """Validate an edge probability"""
    try:
        p = float(p)
    except (TypeError, ValueError):
        raise ParameterError(f"Invalid probability: {p!r}")
    if math.isnan(p) or p < 0.0 or p > 1.0:
        raise ParameterError(f"Probability must lie in [0, 1], got {p}")
    return p


def validate_edge_count(n, m):
    """Validate an edge count against C(n,2)"""
    total = n * (n - 1) // 2
    if not isinstance(m, int) or isinstance(m, bool) or m < 0 or m > total:
        raise ParameterError(f"Edge count must lie in [0, {total}] for n={n}, got {m!r}")
    return m


def validate_vertex(n, v):
    if not isinstance(v, (int,)) or v < 0 or v >= n:
        raise ParameterError(f"Vertex {v!r} is out of range for n={n}")
    return v


def validate_radius(k, minimum=0):
    if not isinstance(k, int) or k < minimum:
        raise ParameterError(f"Radius must be an integer >= {minimum}, got {k!r}")
    return k


def validate_density(d):
    try:
        d = float(d)
    except (TypeError, ValueError):
        raise ParameterError(f"Invalid density: {d!r}")
    if math.isnan(d) or d < 0:
        raise ParameterError(f"Density must be non-negative, got {d}")
    return d


def validate_density_flags(d=None, p=None, m=None):
    """Exactly one of d / p / m must be supplied"""
    given = [name for name, value in (('d', d), ('p', p), ('m', m)) if value is not None]
    if len(given) != 1:
        raise ParameterError(f"Exactly one of --d, --p, --m is required, got: {', '.join(given) or 'none'}")
    return given[0]


def validate_checkpoints(checkpoints, total):
    """Checkpoints must be sorted, distinct and inside [0, C(n,2)]"""
    previous = -1
    for t in checkpoints:
        if not isinstance(t, int) or t < 0 or t > total:
            raise ParameterError(f"Checkpoint {t!r} is outside [0, {total}]")
        if t <= previous:
            raise ParameterError("Checkpoints must be strictly increasing")
        previous = t
    return list(checkpoints)
