"""Induced-subgraph patterns, class recognizers, and structural decompositions.

Pattern containment is decided by exhaustive embedding search (the kernels
return the first embedding under a fixed order, so results double as
certificates).  On top of that sit the class predicates used by the
constructions, a complete-multipartite recognizer, and the C5-blowup
("buoy") machinery for (P5,C4)-free graphs.
"""

from dataclasses import dataclass
from typing import Iterable, Union

from . import backend
from .errors import ClassValidationError, ConsistencyError
from .graph import (
    Graph,
    components,
    induced_subgraph,
    is_clique,
    is_connected,
    is_independent,
    iter_bits,
    mask_vertices,
)

# name -> (vertex count, edges); the only shapes the algorithms ever exclude
_PATTERN_TABLE: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "K2": (2, ((0, 1),)),
    "P3": (3, ((0, 1), (1, 2))),
    "C3": (3, ((0, 1), (1, 2), (0, 2))),
    "3K1": (3, ()),
    "P4": (4, ((0, 1), (1, 2), (2, 3))),
    "C4": (4, ((0, 1), (1, 2), (2, 3), (0, 3))),
    "claw": (4, ((0, 1), (0, 2), (0, 3))),
    "paw": (4, ((0, 1), (0, 2), (1, 2), (2, 3))),
    "2K2": (4, ((0, 1), (2, 3))),
    "P3uP1": (4, ((0, 1), (1, 2))),
    "K2u2K1": (4, ((0, 1),)),
    "P5": (5, ((0, 1), (1, 2), (2, 3), (3, 4))),
    "C5": (5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))),
    "P3uP2": (5, ((0, 1), (1, 2), (3, 4))),
}

PATTERN_NAMES = tuple(_PATTERN_TABLE)


@dataclass(frozen=True)
class Pattern:
    """A named forbidden shape; `graph` is isomorphic to the table entry."""

    name: str
    graph: Graph


def pattern(name: str, graph: Graph | None = None) -> Pattern:
    """Look up a pattern by name, optionally substituting an isomorphic copy.

    A substituted graph is checked against the built-in table; a mismatch
    raises ValueError.
    """
    if name not in _PATTERN_TABLE:
        raise ValueError(f"unknown pattern {name!r} (known: {', '.join(PATTERN_NAMES)})")
    k, edges = _PATTERN_TABLE[name]
    table_graph = Graph(k, edges)
    if graph is None:
        return Pattern(name, table_graph)
    if graph.n != k or graph.edge_count != table_graph.edge_count:
        raise ValueError(f"graph is not isomorphic to {name}")
    # an induced embedding using all vertices is an isomorphism
    emb = backend.find_induced(graph.adjacency_masks(), graph.n, table_graph.adjacency_masks(), k)
    if emb is None:
        raise ValueError(f"graph is not isomorphic to {name}")
    return Pattern(name, graph)


PatternLike = Union[Pattern, str]


def _as_pattern(p: PatternLike) -> Pattern:
    return p if isinstance(p, Pattern) else pattern(p)


def contains_induced(g: Graph, p: PatternLike) -> tuple[int, ...] | None:
    """First induced embedding of p in g, or None.

    The tuple maps pattern vertex i to graph vertex tuple[i], so it is a
    checkable certificate.
    """
    pat = _as_pattern(p)
    return backend.find_induced(g.adjacency_masks(), g.n, pat.graph.adjacency_masks(), pat.graph.n)


def free_of(g: Graph, patterns: Iterable[PatternLike]) -> bool:
    return all(contains_induced(g, p) is None for p in patterns)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in iter_bits(g.neighbor_mask(u)):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def is_complete_multipartite(g: Graph) -> list[frozenset[int]] | None:
    """Parts ordered by smallest vertex, or None.

    A graph is complete multipartite iff the components of its complement
    are independent sets of the graph itself; nonadjacency across distinct
    complement components is impossible by construction, so that is the
    whole test.  Edge cases: an edgeless graph is one part per vertex only
    when n == 1; we follow the usual convention that any union of
    independent parts qualifies, so edgeless graphs of any size count
    (a single part).
    """
    comp_edges = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.adjacent(u, v):
                comp_edges.append((u, v))
    complement = Graph(g.n, comp_edges)
    parts = components(complement)
    for part in parts:
        if not is_independent(g, part):
            return None
    return parts


# class name -> (forbidden patterns, connected input required)
CLASS_RULES: dict[str, tuple[tuple[str, ...], bool]] = {
    "p5-free": (("P5",), False),
    "p3up2-free": (("P3uP2",), False),
    "p3up1-free": (("P3uP1",), False),
    "k2u2k1-free": (("K2u2K1",), False),
    "p5c3-free": (("P5", "C3"), True),
    "p5paw-free": (("P5", "paw"), True),
    "p5c4-free": (("P5", "C4"), True),
}

CLASS_NAMES = tuple(CLASS_RULES)


def classify(g: Graph) -> dict[str, bool]:
    """Membership flags for the graph classes the package knows about.

    Keys are stable and ordered; composite classes are conjunctions of
    their single-pattern flags.
    """
    p5 = free_of(g, ["P5"])
    c3 = free_of(g, ["C3"])
    c4 = free_of(g, ["C4"])
    paw = free_of(g, ["paw"])
    return {
        "claw-free": free_of(g, ["claw"]),
        "c3-free": c3,
        "paw-free": paw,
        "bipartite": is_bipartite(g),
        "c5-free": free_of(g, ["C5"]),
        "p5-free": p5,
        "p3up2-free": free_of(g, ["P3uP2"]),
        "p3up1-free": free_of(g, ["P3uP1"]),
        "k2u2k1-free": free_of(g, ["K2u2K1"]),
        "p5c3-free": p5 and c3,
        "p5paw-free": p5 and paw,
        "p5c4-free": p5 and c4,
        "split": free_of(g, ["2K2", "C4", "C5"]),
        "complete-multipartite": is_complete_multipartite(g) is not None,
        "connected": is_connected(g),
    }


@dataclass(frozen=True)
class BuoyDecomposition:
    """A blown-up C5: five parts, cyclically indexed.

    Each part is a clique, consecutive parts are completely joined,
    nonconsecutive parts see no edges.  parts[i] plays role i of the cycle.
    """

    parts: tuple[frozenset[int], ...]

    def vertex_set(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for p in self.parts:
            out |= p
        return out


@dataclass(frozen=True)
class FouquetDecomposition:
    """Partition of a connected (P5,C4)-free graph: buoys plus the rest.

    Every vertex outside the buoys lands in `rest`; each buoy is maximal,
    its outside neighborhood is a clique inside `rest`, and outside
    vertices see all of a buoy or none of it.
    """

    rest: frozenset[int]
    buoys: tuple[BuoyDecomposition, ...]


def _buoy_parts_ok(g: Graph, parts: list[set[int]]) -> bool:
    for i in range(5):
        if not parts[i]:
            return False
        if not is_clique(g, parts[i]):
            return False
    for i in range(5):
        j = (i + 1) % 5
        for u in parts[i]:
            for v in parts[j]:
                if not g.adjacent(u, v):
                    return False
        j = (i + 2) % 5
        for u in parts[i]:
            for v in parts[j]:
                if g.adjacent(u, v):
                    return False
    return True


def _assign_slots(g: Graph, seeds: tuple[int, ...], candidates: Iterable[int]) -> tuple[list[set[int]], set[int]]:
    """Grow buoy parts from a seed C5.

    A candidate joins part i when its adjacency to the five seeds is
    exactly {i-1, i, i+1} (cyclically).  Returns (parts, leftovers).
    """
    slots = [frozenset(((i - 1) % 5, i, (i + 1) % 5)) for i in range(5)]
    parts: list[set[int]] = [{seeds[i]} for i in range(5)]
    left: set[int] = set()
    seed_set = set(seeds)
    for v in candidates:
        if v in seed_set:
            continue
        sig = frozenset(i for i in range(5) if g.adjacent(v, seeds[i]))
        for i in range(5):
            if sig == slots[i]:
                parts[i].add(v)
                break
        else:
            left.add(v)
    return parts, left


def find_buoy(g: Graph) -> BuoyDecomposition | None:
    """Recognize g itself as a blown-up C5; None when it is not one."""
    emb = contains_induced(g, "C5")
    if emb is None:
        return None
    parts, left = _assign_slots(g, emb, range(g.n))
    if left or not _buoy_parts_ok(g, parts):
        return None
    return BuoyDecomposition(tuple(frozenset(p) for p in parts))


def fouquet_decompose(g: Graph, validate: bool = True) -> FouquetDecomposition:
    """Split a connected (P5,C4)-free graph into maximal buoys plus the rest.

    Repeatedly seeds a C5 among the unassigned vertices and grows it into
    a buoy.  Structure theory says the result satisfies the invariants in
    FouquetDecomposition; any failure raises ConsistencyError (with
    validate=False that can also mean the input was out of class).
    """
    if validate:
        if not is_connected(g):
            raise ClassValidationError("input must be connected")
        if not free_of(g, ["P5", "C4"]):
            raise ClassValidationError("input is not (P5,C4)-free")
    remaining = set(range(g.n))
    buoys: list[BuoyDecomposition] = []
    buoy_masks: list[int] = []
    while True:
        sub, vmap = induced_subgraph(g, remaining)
        emb = contains_induced(sub, "C5")
        if emb is None:
            break
        seeds = tuple(vmap[i] for i in emb)
        parts, _ = _assign_slots(g, seeds, sorted(remaining))
        if not _buoy_parts_ok(g, parts):
            raise ConsistencyError("grown C5 blowup violates buoy structure")
        bmask = 0
        for p in parts:
            for v in p:
                bmask |= 1 << v
        # outside vertices must see all of the buoy or none of it,
        # and the full-neighbors must form a clique
        nb_mask = 0
        for v in range(g.n):
            if (bmask >> v) & 1:
                continue
            a = g.neighbor_mask(v) & bmask
            if a == bmask:
                nb_mask |= 1 << v
            elif a != 0:
                raise ConsistencyError("buoy is not a homogeneous set")
        if not is_clique(g, mask_vertices(nb_mask)):
            raise ConsistencyError("buoy neighborhood is not a clique")
        buoys.append(BuoyDecomposition(tuple(frozenset(p) for p in parts)))
        buoy_masks.append(bmask)
        remaining -= mask_vertices(bmask)
    rest = frozenset(remaining)
    rest_mask = 0
    for v in rest:
        rest_mask |= 1 << v
    for dec, bmask in zip(buoys, buoy_masks):
        nb = 0
        for v in iter_bits(bmask):
            nb |= g.neighbor_mask(v)
        nb &= ~bmask
        if nb & ~rest_mask:
            raise ConsistencyError("buoy neighborhood leaks into another buoy")
    return FouquetDecomposition(rest, tuple(buoys))
