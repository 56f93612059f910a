"""Plain-text graph format: a header `n m`, then one `u v` line per edge with u < v."""
from hamcomp.models.graph import Graph
from hamcomp.utils.errors import GraphParseError


def _integers(line, line_number, count):
    parts = line.split()
    if len(parts) != count:
        raise GraphParseError(f"expected {count} integers, got {len(parts)}", line_number)
    try:
        return [int(part) for part in parts]
    except ValueError:
        raise GraphParseError(f"non-integer token in {line.strip()!r}", line_number)


def parse_graph(text):
    lines = text.splitlines()
    numbered = [(i + 1, line) for i, line in enumerate(lines) if line.strip()]
    if not numbered:
        raise GraphParseError("empty input, expected a header `n m`", 1)

    header_line, header = numbered[0]
    n, m = _integers(header, header_line, 2)
    if n < 0 or m < 0:
        raise GraphParseError(f"negative header values n={n} m={m}", header_line)

    edges = []
    seen = set()
    for line_number, line in numbered[1:]:
        u, v = _integers(line, line_number, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge ({u}, {v}) is out of range for n={n}", line_number)
        if u >= v:
            raise GraphParseError(f"edge ({u}, {v}) must be written with u < v", line_number)
        if (u, v) in seen:
            raise GraphParseError(f"duplicate edge ({u}, {v})", line_number)
        seen.add((u, v))
        edges.append((u, v))

    if len(edges) != m:
        last = numbered[-1][0]
        raise GraphParseError(f"header announces {m} edges, found {len(edges)}", last)
    return Graph.from_edges(n, edges)


def read_graph(path):
    with open(path, encoding='ascii') as handle:
        return parse_graph(handle.read())


def format_graph(G):
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def write_graph(G, path):
    with open(path, 'w', encoding='ascii', newline='\n') as handle:
        handle.write(format_graph(G))
