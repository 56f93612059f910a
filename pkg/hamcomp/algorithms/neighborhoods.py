from hamcomp.utils.validators import validate_radius, validate_vertex


def bfs_layers(G, v, k):
    """Layers N^0(v) .. N^k(v) of the breadth-first search from v"""
    validate_vertex(G.n, v)
    validate_radius(k)
    layers = [{v}]
    seen = {v}
    frontier = [v]
    for _ in range(k):
        layer = set()
        for u in frontier:
            for w in G.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    layer.add(w)
        layers.append(layer)
        frontier = sorted(layer)
    return layers


def ball_size(G, v, k):
    return sum(len(layer) for layer in bfs_layers(G, v, k))
