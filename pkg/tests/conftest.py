"""Shared test helpers.

The brute_* functions are deliberately naive reimplementations over plain
Python sets.  They share no code with the library internals, so agreement
between the two is meaningful evidence, not a tautology.
"""

from itertools import combinations, permutations

import pytest

from secdom import Graph


def nbrs(g: Graph, v: int) -> set[int]:
    return set(g.neighbors(v))


def brute_is_dominating(g: Graph, members) -> bool:
    s = set(members)
    return all(v in s or nbrs(g, v) & s for v in range(g.n))


def brute_defenders(g: Graph, members, v: int) -> set[int]:
    """All u in N(v) & S whose swap with v leaves a dominating set."""
    s = set(members)
    out = set()
    for u in nbrs(g, v) & s:
        if brute_is_dominating(g, (s - {u}) | {v}):
            out.add(u)
    return out


def brute_is_secure(g: Graph, members) -> bool:
    s = set(members)
    if not brute_is_dominating(g, s):
        return False
    return all(v in s or brute_defenders(g, s, v) for v in range(g.n))


def brute_undefended(g: Graph, members) -> set[int]:
    s = set(members)
    return {v for v in range(g.n) if v not in s and not brute_defenders(g, s, v)}


def brute_exposed(g: Graph, members) -> set[int]:
    """Members with at least one undefended outside neighbor."""
    s = set(members)
    bad = brute_undefended(g, s)
    return {u for u in s if nbrs(g, u) & bad}


def brute_epn(g: Graph, members, u: int) -> set[int]:
    s = set(members)
    return {w for w in range(g.n) if w not in s and nbrs(g, w) & s == {u}}


def brute_alpha(g: Graph) -> int:
    best = 0
    for k in range(g.n, 0, -1):
        for sub in combinations(range(g.n), k):
            if all(not g.adjacent(a, b) for a, b in combinations(sub, 2)):
                return k
    return best


def brute_gamma_s(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for sub in combinations(range(g.n), k):
            if brute_is_secure(g, sub):
                return k
    raise AssertionError("V(G) itself is always secure dominating")


def brute_contains_induced(g: Graph, h: Graph) -> bool:
    """Subset-and-permutation search for an induced copy of h in g."""
    hpairs = list(combinations(range(h.n), 2))
    for sub in combinations(range(g.n), h.n):
        for perm in permutations(sub):
            if all(g.adjacent(perm[a], perm[b]) == h.adjacent(a, b) for a, b in hpairs):
                return True
    return False


def edge_set(g: Graph) -> set[tuple[int, int]]:
    return set(g.edges())


@pytest.fixture
def c5():
    return Graph(5, [(i, (i + 1) % 5) for i in range(5)])
