"""Exact solvers and defense certificates against naive reimplementations."""

import random
from itertools import combinations

import pytest

from secdom import (
    Graph,
    domination_number,
    independence_number,
    max_independent_set,
    min_dominating_set,
    min_secure_dominating_set,
    secure_domination_number,
)
from secdom.generate import (
    complete_graph,
    labeled_graphs,
    path_graph,
    random_graph,
    star_graph,
)
from secdom.graph import is_independent
from secdom.oracle import (
    defended_by,
    epn,
    is_dominating,
    secure_certificate,
    secure_failure,
    set_partition,
    undefended_set,
)

from conftest import (
    brute_alpha,
    brute_defenders,
    brute_gamma_s,
    brute_is_dominating,
    brute_is_secure,
    brute_undefended,
    brute_epn,
    brute_exposed,
)


def test_c5_known_values(c5):
    assert independence_number(c5) == 2
    assert max_independent_set(c5) == frozenset({0, 2})
    assert domination_number(c5) == 2
    assert min_dominating_set(c5) == frozenset({0, 2})
    assert secure_domination_number(c5) == 3
    members, cert = min_secure_dominating_set(c5)
    assert members == frozenset({0, 1, 2})
    assert cert.members == members
    assert cert.defenders == {3: 2, 4: 0}


def test_c5_partition(c5):
    ideal = max_independent_set(c5)
    assert undefended_set(c5, ideal) == frozenset({1})
    part = set_partition(c5, ideal)
    assert part.exposed == frozenset({0, 2})
    assert part.settled == frozenset()


def test_c5_epn(c5):
    ideal = frozenset({0, 2})
    assert epn(c5, ideal, 0) == frozenset({4})
    assert epn(c5, ideal, 2) == frozenset({3})
    with pytest.raises(ValueError):
        epn(c5, ideal, 1)


def test_defended_by(c5):
    s = {0, 1, 2}
    assert defended_by(c5, s, 3) == 2
    assert defended_by(c5, s, 4) == 0
    assert defended_by(c5, {0, 2}, 1) is None
    with pytest.raises(ValueError):
        defended_by(c5, s, 1)
    with pytest.raises(ValueError):
        defended_by(c5, {0}, 2)


def test_small_named_graphs():
    assert secure_domination_number(path_graph(4)) == 2
    assert min_secure_dominating_set(path_graph(4))[0] == frozenset({0, 2})
    assert secure_domination_number(complete_graph(6)) == 1
    assert secure_domination_number(complete_graph(1)) == 1
    # K_{1,3}: both leaves-and-center patterns fail at 2 guards
    star = star_graph(4)
    members, cert = min_secure_dominating_set(star)
    assert members == frozenset({0, 1, 2})
    assert cert.defenders == {3: 0}


def test_empty_graph():
    g = Graph(0)
    assert independence_number(g) == 0
    assert domination_number(g) == 0
    assert secure_domination_number(g) == 0
    members, cert = min_secure_dominating_set(g)
    assert members == frozenset() and cert.defenders == {}


def test_certificate_roundtrip(c5):
    assert secure_certificate(c5, {0, 1, 2}) is not None
    assert secure_certificate(c5, {0, 2}) is None
    assert secure_failure(c5, {0, 2}) == 1
    assert secure_failure(c5, {0, 1, 2}) is None
    # not even dominating: the first uncovered vertex is reported
    assert secure_failure(Graph(3), {0}) == 1


def test_whole_vertex_set_is_secure():
    for n in range(5):
        for g in labeled_graphs(n):
            assert secure_certificate(g, range(n)) is not None


def test_exhaustive_against_brute_force():
    for n in range(5):
        for g in labeled_graphs(n):
            assert independence_number(g) == brute_alpha(g)
            assert secure_domination_number(g) == brute_gamma_s(g)
            s = min_dominating_set(g)
            assert brute_is_dominating(g, s)
            members, cert = min_secure_dominating_set(g)
            assert brute_is_secure(g, members)
            for v, u in cert.defenders.items():
                assert u in brute_defenders(g, members, v)


@pytest.mark.parametrize("seed", range(12))
def test_random_against_brute_force(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(5, 7), rng.uniform(0.15, 0.85))
    assert independence_number(g) == brute_alpha(g)
    assert secure_domination_number(g) == brute_gamma_s(g)
    ideal = max_independent_set(g)
    for u in ideal:
        assert epn(g, ideal, u) == frozenset(brute_epn(g, ideal, u))
    assert undefended_set(g, ideal) == frozenset(brute_undefended(g, ideal))
    part = set_partition(g, ideal)
    assert part.exposed == frozenset(brute_exposed(g, ideal))
    assert part.settled == ideal - part.exposed


def test_witnesses_are_lexicographically_least():
    """First-in-combination-order answers: the determinism contract."""
    for n in range(1, 5):
        for g in labeled_graphs(n):
            alpha = independence_number(g)
            expect = next(
                frozenset(sub)
                for sub in combinations(range(n), alpha)
                if is_independent(g, sub)
            )
            assert max_independent_set(g) == expect

            gamma = domination_number(g)
            expect = next(
                frozenset(sub)
                for sub in combinations(range(n), gamma)
                if brute_is_dominating(g, sub)
            )
            assert min_dominating_set(g) == expect

            gs = secure_domination_number(g)
            expect = next(
                frozenset(sub)
                for sub in combinations(range(n), gs)
                if brute_is_secure(g, sub)
            )
            assert min_secure_dominating_set(g)[0] == expect


@pytest.mark.parametrize("seed", range(8))
def test_secure_sets_are_superhereditary(seed):
    rng = random.Random(seed)
    g = random_graph(rng, 8, rng.uniform(0.2, 0.7))
    members, _ = min_secure_dominating_set(g)
    for w in range(g.n):
        if w not in members:
            assert secure_certificate(g, members | {w}) is not None


def test_is_dominating_matches_brute():
    rng = random.Random(99)
    for _ in range(100):
        g = random_graph(rng, 6, rng.random())
        sub = {v for v in range(6) if rng.random() < 0.5}
        assert is_dominating(g, sub) == brute_is_dominating(g, sub)
