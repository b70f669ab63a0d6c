"""Seeded instance samplers for each supported class.

Recipes mostly build in-class graphs directly (closure properties keep the
rejection rate low), and every draw is verified against the class patterns
before it is returned, so the corpus is trustworthy by construction.  Same
seed, same corpus.
"""

import random
from typing import Callable

from .graph import Graph, disjoint_union, is_connected
from .oracle import max_independent_set, secure_certificate
from .patterns import CLASS_RULES, free_of
from .generate import (
    buoy_graph,
    complete_graph,
    complete_multipartite_graph,
    cycle_expansion_graph,
    disjoint_c5,
    path_graph,
    random_graph,
    star_graph,
)


def join_graphs(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus all edges across."""
    edges = list(a.edges())
    edges.extend((u + a.n, v + a.n) for u, v in b.edges())
    edges.extend((u, a.n + v) for u in range(a.n) for v in range(b.n))
    return Graph(a.n + b.n, edges)


def double_star(p: int, q: int) -> Graph:
    """Two adjacent centers (0 and 1) with p and q leaves."""
    edges = [(0, 1)]
    edges.extend((0, 2 + i) for i in range(p))
    edges.extend((1, 2 + p + i) for i in range(q))
    return Graph(2 + p + q, edges)


def _sizes(rng: random.Random, total_max: int, parts: int = 5) -> list[int]:
    budget = total_max - parts
    sizes = [1] * parts
    for _ in range(rng.randint(0, max(0, budget))):
        sizes[rng.randrange(parts)] += 1
    return sizes


def _parts(rng: random.Random, total_max: int) -> list[int]:
    k = rng.randint(1, 4)
    return _sizes(rng, min(total_max, k + rng.randint(0, total_max - k)), k)


def _with_isolated(rng: random.Random, g: Graph, max_n: int) -> Graph:
    extra = rng.randint(0, max(0, max_n - g.n))
    return Graph(g.n + extra, g.edges())


def _recipes_p5free(rng: random.Random, max_n: int) -> Graph:
    roll = rng.randrange(7)
    if roll == 0:
        return random_graph(rng, rng.randint(1, min(7, max_n)), rng.random())
    if roll == 1:
        k = rng.randint(1, max_n // 5) if max_n >= 5 else 1
        return _with_isolated(rng, disjoint_c5(k), max_n)
    if roll == 2 and max_n >= 5:
        return buoy_graph(_sizes(rng, max_n))
    if roll == 3 and max_n >= 5:
        return cycle_expansion_graph(_sizes(rng, max_n))
    if roll == 4:
        return complete_multipartite_graph(_parts(rng, max_n))
    if roll == 5 and max_n >= 7:
        side = complete_multipartite_graph(_parts(rng, max_n - 5))
        return join_graphs(disjoint_c5(1), side)
    return star_graph(rng.randint(1, max_n))


def _recipes_dense(rng: random.Random, max_n: int) -> Graph:
    """Shared pool for the three 'small independence' classes."""
    roll = rng.randrange(5)
    if roll == 0:
        return random_graph(rng, rng.randint(1, min(6, max_n)), 0.5 + rng.random() / 2)
    if roll == 1:
        return complete_multipartite_graph(_parts(rng, max_n))
    if roll == 2 and max_n >= 5:
        return disjoint_c5(1)
    if roll == 3 and max_n >= 7:
        return join_graphs(disjoint_c5(1), complete_graph(rng.randint(1, max_n - 5)))
    return complete_graph(rng.randint(1, max_n))


def _recipes_p3up2(rng: random.Random, max_n: int) -> Graph:
    if rng.randrange(4) == 0:
        # disjoint cliques have no induced P3 at all
        blocks = [complete_graph(rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
        return disjoint_union(blocks)
    return _recipes_dense(rng, max_n)


def _recipes_p5c3(rng: random.Random, max_n: int) -> Graph:
    roll = rng.randrange(6)
    if roll == 0 and max_n >= 5:
        return cycle_expansion_graph(_sizes(rng, max_n))
    if roll == 1 and max_n >= 7:
        # a size-3 slot drives the alpha = 4 relabeling branch
        sizes = [1, 1, 1, 1, 1]
        sizes[rng.randrange(5)] = 3
        return cycle_expansion_graph(sizes)
    if roll == 2:
        a = rng.randint(1, max(1, max_n // 2))
        b = rng.randint(1, max(1, max_n - a))
        return complete_multipartite_graph([a, b])
    if roll == 3:
        return star_graph(rng.randint(1, max_n))
    if roll == 4 and max_n >= 4:
        return double_star(rng.randint(1, (max_n - 2) // 2), rng.randint(1, (max_n - 2) // 2))
    if max_n >= 4:
        return path_graph(rng.randint(1, 4))
    return path_graph(rng.randint(1, max_n))


def _recipes_p5paw(rng: random.Random, max_n: int) -> Graph:
    if rng.randrange(3) == 0:
        parts = _parts(rng, max_n)
        if len(parts) == 1:
            parts = [1]  # keep it connected
        return complete_multipartite_graph(parts)
    return _recipes_p5c3(rng, max_n)


def _recipes_p5c4(rng: random.Random, max_n: int) -> Graph:
    roll = rng.randrange(7)
    if roll == 0 and max_n >= 5:
        return buoy_graph(_sizes(rng, max_n))
    if roll == 1 and max_n >= 6:
        b = buoy_graph(_sizes(rng, max_n - 1))
        return join_graphs(b, complete_graph(rng.randint(1, max_n - b.n)))
    if roll == 2:
        return complete_graph(rng.randint(1, max_n))
    if roll == 3:
        return star_graph(rng.randint(1, max_n))
    if roll == 4 and max_n >= 4:
        return double_star(rng.randint(1, (max_n - 2) // 2), rng.randint(1, (max_n - 2) // 2))
    if roll == 5:
        # clique completely joined to an independent set
        k = rng.randint(1, max(1, max_n - 1))
        i = rng.randint(1, max(1, max_n - k))
        return join_graphs(complete_graph(k), Graph(i))
    return random_graph(rng, rng.randint(1, min(7, max_n)), rng.random())


_RECIPES: dict[str, Callable[[random.Random, int], Graph]] = {
    "p5-free": _recipes_p5free,
    "p3up2-free": _recipes_p3up2,
    "p3up1-free": _recipes_dense,
    "k2u2k1-free": _recipes_dense,
    "p5c3-free": _recipes_p5c3,
    "p5paw-free": _recipes_p5paw,
    "p5c4-free": _recipes_p5c4,
}


def sample_class_instance(class_name: str, rng: random.Random, max_n: int = 12) -> Graph:
    """One verified in-class instance (connected when the class needs it)."""
    if class_name not in _RECIPES:
        raise ValueError(f"unknown class {class_name!r}")
    patterns, need_connected = CLASS_RULES[class_name]
    recipe = _RECIPES[class_name]
    for _ in range(1000):
        g = recipe(rng, max_n)
        if g.n > max_n or g.n == 0:
            continue
        if need_connected and not is_connected(g):
            continue
        if free_of(g, patterns):
            return g
    raise RuntimeError(f"failed to sample a {class_name} instance")


def class_corpus(class_name: str, count: int, seed: int, max_n: int = 12) -> list[Graph]:
    rng = random.Random(seed)
    return [sample_class_instance(class_name, rng, max_n) for _ in range(count)]


def p5free_trace_corpus(count: int, seed: int, max_n: int = 12) -> list[Graph]:
    """P5-free instances whose maximum independent set is not yet secure.

    These are the instances that force the insertion loop to do work, so
    traces are nonempty.
    """
    rng = random.Random(seed)
    out: list[Graph] = []
    guard = 0
    while len(out) < count:
        guard += 1
        if guard > 200 * count:
            raise RuntimeError("failed to sample enough trace-relevant instances")
        roll = rng.randrange(4)
        if roll == 0:
            g = _with_isolated(rng, disjoint_c5(rng.randint(1, max(1, max_n // 5))), max_n)
        elif roll == 1 and max_n >= 5:
            g = buoy_graph(_sizes(rng, max_n))
        elif roll == 2 and max_n >= 5:
            g = cycle_expansion_graph(_sizes(rng, max_n))
        else:
            g = random_graph(rng, rng.randint(4, min(8, max_n)), rng.random())
        if g.n > max_n or not free_of(g, ["P5"]):
            continue
        if secure_certificate(g, max_independent_set(g)) is None:
            out.append(g)
    return out
