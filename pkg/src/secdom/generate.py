"""Graph builders: named families, labeled enumeration, rejection sampling."""

import os
import random
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graph import Graph, is_connected
from .patterns import PatternLike, free_of

DEFAULT_ATTEMPT_BUDGET = 10000


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices total; vertex 0 is the center."""
    if n < 1:
        raise ValueError("stars need at least 1 vertex")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def disjoint_c5(k: int) -> Graph:
    """k vertex-disjoint five-cycles, blocks of consecutive labels."""
    edges = []
    for b in range(k):
        base = 5 * b
        edges.extend((base + i, base + (i + 1) % 5) for i in range(5))
    return Graph(5 * k, edges)


def _blocks(sizes: Sequence[int]) -> list[range]:
    out = []
    start = 0
    for s in sizes:
        out.append(range(start, start + s))
        start += s
    return out


def complete_multipartite_graph(sizes: Sequence[int]) -> Graph:
    """Parts are consecutive label blocks; all cross pairs adjacent."""
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    blocks = _blocks(sizes)
    edges = []
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            edges.extend((u, v) for u in blocks[i] for v in blocks[j])
    return Graph(sum(sizes), edges)


def buoy_graph(sizes: Sequence[int]) -> Graph:
    """Blown-up five-cycle: five clique blocks, consecutive blocks joined."""
    if len(sizes) != 5 or any(s < 1 for s in sizes):
        raise ValueError("a buoy needs five positive part sizes")
    blocks = _blocks(sizes)
    edges = []
    for i in range(5):
        edges.extend(combinations(blocks[i], 2))
        for u in blocks[i]:
            for v in blocks[(i + 1) % 5]:
                if u < v:
                    edges.append((u, v))
                else:
                    edges.append((v, u))
    return Graph(sum(sizes), edges)


def cycle_expansion_graph(sizes: Sequence[int]) -> Graph:
    """Blown-up five-cycle with independent blocks (triangle-free flavor)."""
    if len(sizes) != 5 or any(s < 1 for s in sizes):
        raise ValueError("a cycle expansion needs five positive part sizes")
    blocks = _blocks(sizes)
    edges = []
    for i in range(5):
        for u in blocks[i]:
            for v in blocks[(i + 1) % 5]:
                edges.append((u, v) if u < v else (v, u))
    return Graph(sum(sizes), edges)


FAMILIES = {
    "path": path_graph,
    "cycle": cycle_graph,
    "star": star_graph,
    "complete": complete_graph,
    "disjoint-c5": disjoint_c5,
}


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def attempt_budget() -> int:
    raw = os.environ.get("SECDOM_ATTEMPT_BUDGET", "").strip()
    if not raw:
        return DEFAULT_ATTEMPT_BUDGET
    try:
        budget = int(raw)
    except ValueError as exc:
        raise RuntimeError("SECDOM_ATTEMPT_BUDGET must be an integer") from exc
    if budget < 1:
        raise RuntimeError("SECDOM_ATTEMPT_BUDGET must be positive")
    return budget


def random_in_class(
    n: int,
    p: float,
    patterns: Iterable[PatternLike],
    seed: int,
    require_connected: bool = False,
    budget: int | None = None,
) -> Graph | None:
    """Rejection-sample one G(n,p) avoiding the given patterns.

    Returns None when the attempt budget (SECDOM_ATTEMPT_BUDGET or 10000)
    runs out; same seed, same answer.
    """
    rng = random.Random(seed)
    pats = list(patterns)
    tries = attempt_budget() if budget is None else budget
    for _ in range(tries):
        g = random_graph(rng, n, p)
        if require_connected and not is_connected(g):
            continue
        if free_of(g, pats):
            return g
    return None


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs on n vertices, by edge-set rank.

    Pair bits follow lexicographic (u,v) order, u < v; this is the
    enumeration order tests rely on.  Guarded at n <= 7.
    """
    if n > 7:
        raise ValueError("labeled enumeration is capped at 7 vertices")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        yield Graph(n, edges)
