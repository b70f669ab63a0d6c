"""Graph serialization: graph6 and a plain edge-list text format.

graph6 follows the standard 6-bit printable encoding (upper triangle in
column-major order, characters offset by 63, strict zero padding); the
optional ">>graph6<<" header is accepted on input and never emitted.  The
edge-list format is an "n m" header line followed by one "u v" line per
edge; emission is canonical (sorted, u < v).
"""

from dataclasses import dataclass

from .graph import Graph

FORMATS = ("graph6", "edge-list")

_G6_HEADER = ">>graph6<<"
_G6_MAX_N = 258047


@dataclass(frozen=True)
class GraphDocument:
    format: str
    payload: str


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > _G6_MAX_N:
        raise ValueError(f"graph6 encoding supports at most {_G6_MAX_N} vertices")
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    chunks = []
    acc = 0
    filled = 0
    for v in range(1, n):
        col = g.neighbor_mask(v)
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            filled += 1
            if filled == 6:
                chunks.append(acc + 63)
                acc = 0
                filled = 0
    if filled:
        chunks.append((acc << (6 - filled)) + 63)
    return "".join(map(chr, head + chunks))


def decode_graph6(text: str) -> Graph:
    t = text.strip()
    if t.startswith(_G6_HEADER):
        t = t[len(_G6_HEADER):].lstrip()
    if not t:
        raise ValueError("empty graph6 payload")
    if any(ch in "\r\n" for ch in t):
        raise ValueError("graph6 payload must be a single line")
    vals = [ord(ch) - 63 for ch in t]
    if any(v < 0 or v > 63 for v in vals):
        raise ValueError("invalid graph6 character")
    if vals[0] == 63:
        if len(vals) < 4:
            raise ValueError("truncated graph6 size field")
        if vals[1] == 63:
            raise ValueError(f"graph6 sizes beyond {_G6_MAX_N} are not supported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ValueError("graph6 body length does not match the vertex count")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if (body[idx // 6] >> (5 - idx % 6)) & 1:
                edges.append((u, v))
            idx += 1
    for extra in range(nbits, 6 * len(body)):
        if (body[extra // 6] >> (5 - extra % 6)) & 1:
            raise ValueError("nonzero padding bits in graph6 payload")
    return Graph(n, edges)


def encode_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def decode_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("edge-list header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ValueError("edge-list header must contain integers") from exc
    if n < 0 or m < 0:
        raise ValueError("edge-list header values must be nonnegative")
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"malformed edge line {ln!r}") from exc
        edges.append((u, v))
    return Graph(n, edges)  # range/self-loop violations surface here


def emit_graph(g: Graph, fmt: str) -> GraphDocument:
    if fmt == "graph6":
        return GraphDocument(fmt, encode_graph6(g))
    if fmt == "edge-list":
        return GraphDocument(fmt, encode_edge_list(g))
    raise ValueError(f"unknown format {fmt!r} (known: {', '.join(FORMATS)})")


def parse_document(doc: GraphDocument) -> Graph:
    if doc.format == "graph6":
        return decode_graph6(doc.payload)
    if doc.format == "edge-list":
        return decode_edge_list(doc.payload)
    raise ValueError(f"unknown format {doc.format!r} (known: {', '.join(FORMATS)})")


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse either format; sniff when fmt is None.

    Sniffing is unambiguous: a graph6 line starts at character '?' (63)
    or above (or the explicit header), while edge-list headers start with
    a digit or sign, all below 63.
    """
    if fmt is not None:
        return parse_document(GraphDocument(fmt, text))
    t = text.strip()
    if not t:
        raise ValueError("empty graph input")
    if t.startswith(_G6_HEADER) or ord(t[0]) >= 63:
        return decode_graph6(t)
    return decode_edge_list(t)
