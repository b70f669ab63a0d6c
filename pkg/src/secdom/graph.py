"""Immutable simple graphs on dense integer vertices, stored as bitmasks.

One adjacency mask per vertex keeps pair queries and whole-neighborhood
operations at O(1) machine words each, which is what the exhaustive search
kernels want.  Vertices are always 0..n-1; there is no labeling layer.
"""

from collections.abc import Iterable, Iterator, Sequence


class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (adj[u] >> v) & 1:
                # duplicate edges are dropped silently
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                m += 1
        self.n = n
        self._adj = tuple(adj)
        self._m = m

    @property
    def edge_count(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self._adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def neighbor_mask(self, v: int, closed: bool = False) -> int:
        self._check_vertex(v)
        m = self._adj[v]
        return m | (1 << v) if closed else m

    def neighbors(self, v: int, closed: bool = False) -> frozenset[int]:
        return mask_vertices(self.neighbor_mask(v, closed))

    def adjacency_masks(self) -> tuple[int, ...]:
        """Raw per-vertex adjacency masks (what the kernels consume)."""
        return self._adj

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_vertices(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def vertex_mask(g: Graph, vertices: Iterable[int]) -> int:
    """Pack a vertex collection into a bitmask, validating membership in g."""
    m = 0
    for v in vertices:
        g._check_vertex(v)
        m |= 1 << v
    return m


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on the given vertices.

    Returns (h, vmap) where h is on 0..k-1 and vmap[i] is the vertex of g
    that i came from.  vmap is ascending, so the relabeling is order
    preserving.
    """
    vmask = vertex_mask(g, vertices)
    vmap = tuple(iter_bits(vmask))
    k = len(vmap)
    edges = []
    for i in range(k):
        ai = g._adj[vmap[i]]
        for j in range(i + 1, k):
            if (ai >> vmap[j]) & 1:
                edges.append((i, j))
    return Graph(k, edges), vmap


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union, relabeling each graph's vertices by a running offset."""
    n = 0
    edges = []
    for g in graphs:
        edges.extend((u + n, v + n) for (u, v) in g.edges())
        n += g.n
    return Graph(n, edges)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest contained vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g._adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(mask_vertices(comp))
    return out


def is_connected(g: Graph) -> bool:
    """True when g has at most one component (vacuously true for n = 0)."""
    return len(components(g)) <= 1


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vmask = vertex_mask(g, vertices)
    for v in iter_bits(vmask):
        if g._adj[v] & vmask:
            return False
    return True


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vmask = vertex_mask(g, vertices)
    for v in iter_bits(vmask):
        if g._adj[v] & vmask != vmask & ~(1 << v):
            return False
    return True
