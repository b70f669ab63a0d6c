"""Named families, labeled enumeration, and rejection sampling."""

import random

import pytest

from secdom import Graph
from secdom.generate import (
    attempt_budget,
    buoy_graph,
    complete_graph,
    complete_multipartite_graph,
    cycle_expansion_graph,
    cycle_graph,
    disjoint_c5,
    labeled_graphs,
    path_graph,
    random_graph,
    random_in_class,
    star_graph,
)
from secdom.graph import components, is_connected
from secdom.patterns import contains_induced, find_buoy, free_of, is_complete_multipartite

from conftest import edge_set


def test_paths_and_cycles():
    assert edge_set(path_graph(4)) == {(0, 1), (1, 2), (2, 3)}
    assert path_graph(1).n == 1 and path_graph(0).n == 0
    assert edge_set(cycle_graph(4)) == {(0, 1), (1, 2), (2, 3), (0, 3)}
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_stars_and_completes():
    s = star_graph(5)
    assert s.degree(0) == 4
    assert all(s.degree(v) == 1 for v in range(1, 5))
    with pytest.raises(ValueError):
        star_graph(0)
    k = complete_graph(4)
    assert k.edge_count == 6


def test_disjoint_c5():
    g = disjoint_c5(3)
    assert g.n == 15
    comps = components(g)
    assert len(comps) == 3
    assert all(len(c) == 5 for c in comps)
    assert free_of(g, ["P5"])


def test_multipartite():
    g = complete_multipartite_graph([2, 3])
    assert g.n == 5
    assert is_complete_multipartite(g) == [frozenset({0, 1}), frozenset({2, 3, 4})]
    with pytest.raises(ValueError):
        complete_multipartite_graph([2, 0])


def test_buoy_is_recognized_back():
    g = buoy_graph([2, 1, 2, 1, 1])
    dec = find_buoy(g)
    assert dec is not None and dec.vertex_set() == frozenset(range(7))
    assert free_of(g, ["P5", "C4"])
    with pytest.raises(ValueError):
        buoy_graph([1, 1, 1, 1])
    with pytest.raises(ValueError):
        buoy_graph([1, 1, 0, 1, 1])


def test_cycle_expansion_is_in_class():
    g = cycle_expansion_graph([2, 3, 1, 1, 2])
    assert g.n == 9
    assert is_connected(g)
    assert free_of(g, ["P5", "C3"])
    assert contains_induced(g, "C5") is not None
    with pytest.raises(ValueError):
        cycle_expansion_graph([1, 2, 3])


def test_labeled_graphs_enumeration():
    assert [g.n for g in labeled_graphs(0)] == [0]
    assert len(list(labeled_graphs(3))) == 8
    graphs4 = list(labeled_graphs(4))
    assert len(graphs4) == 64
    assert graphs4[0].edge_count == 0
    assert graphs4[-1].edge_count == 6
    # bit i of the rank toggles the i-th (u, v) pair in lexicographic order
    assert graphs4[1].edges() == [(0, 1)]
    assert graphs4[2].edges() == [(0, 2)]
    with pytest.raises(ValueError):
        next(labeled_graphs(8))


def test_random_graph_is_seeded():
    a = random_graph(random.Random(7), 10, 0.4)
    b = random_graph(random.Random(7), 10, 0.4)
    assert a == b


def test_random_in_class_respects_patterns():
    g = random_in_class(8, 0.5, ["P5"], seed=3)
    assert g is not None and free_of(g, ["P5"])
    h = random_in_class(8, 0.5, ["P5"], seed=3)
    assert g == h
    c = random_in_class(8, 0.4, ["P5", "C3"], seed=1, require_connected=True)
    assert c is not None and is_connected(c) and free_of(c, ["P5", "C3"])


def test_random_in_class_budget_exhaustion():
    # K3 always appears at p=1.0, so excluding C3 can never succeed
    assert random_in_class(3, 1.0, ["C3"], seed=0, budget=25) is None


def test_attempt_budget_env(monkeypatch):
    monkeypatch.delenv("SECDOM_ATTEMPT_BUDGET", raising=False)
    assert attempt_budget() == 10000
    monkeypatch.setenv("SECDOM_ATTEMPT_BUDGET", "77")
    assert attempt_budget() == 77
    monkeypatch.setenv("SECDOM_ATTEMPT_BUDGET", "zero")
    with pytest.raises(RuntimeError):
        attempt_budget()
    monkeypatch.setenv("SECDOM_ATTEMPT_BUDGET", "0")
    with pytest.raises(RuntimeError):
        attempt_budget()


def test_graph_type():
    assert isinstance(random_graph(random.Random(0), 5, 0.5), Graph)
