#!/usr/bin/env python3

import random
from itertools import combinations, permutations

import pytest

from Turan_Count.coloring import require_critical
from Turan_Count.counting import (
    arc_orbits,
    automorphism_count,
    copies_through_edge,
    copies_through_edge_by_deletion,
    copies_through_vertex,
    count_anchored_injections,
    count_copies,
    count_injections,
    edge_copy_profile,
    iter_injections,
)
from Turan_Count.exceptions import InvalidEdgeError, PatternTooLargeError
from Turan_Count.graph_core import (
    Graph,
    complete,
    cycle,
    from_edge_list,
    k4_minus_edge,
    path,
    petersen,
    turan_graph,
)

PATTERNS = [cycle(3), cycle(5), complete(4), k4_minus_edge()]


def random_graph(n: int, rng: random.Random) -> Graph:
    p = rng.uniform(0.3, 0.9)
    return from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def naive_injections(pattern: Graph, host: Graph) -> int:
    edges = pattern.edges()
    return sum(
        1
        for images in permutations(range(host.n), pattern.n)
        if all(host.has_edge(images[u], images[v]) for u, v in edges)
    )


###--- injections and copies ---###


@pytest.mark.parametrize(
    "pattern, host, expected",
    [(cycle(3), complete(4), 24), (cycle(5), petersen(), 120), (complete(2), petersen(), 30)],
)
def test_count_injections(pattern, host, expected):
    assert count_injections(pattern, host) == expected


def test_single_edge_counts_twice_the_edges():
    host = turan_graph(7, 3)
    assert count_injections(path(2), host) == 2 * host.m


def test_pattern_larger_than_host():
    assert count_injections(cycle(5), complete(4)) == 0
    assert count_copies(cycle(5), complete(4)).copies == 0


def test_pattern_too_large():
    with pytest.raises(PatternTooLargeError):
        count_injections(cycle(11), complete(12))


@pytest.mark.parametrize(
    "pattern, aut", [(cycle(5), 10), (complete(4), 24), (k4_minus_edge(), 4), (petersen(), 120)]
)
def test_automorphism_count(pattern, aut):
    assert automorphism_count(pattern) == aut


def test_iterated_injections_match_count():
    rng = random.Random(7)
    for pattern in PATTERNS:
        host = random_graph(7, rng)
        images = list(iter_injections(pattern, host))
        assert len(images) == len(set(images)) == count_injections(pattern, host)
        for image in images:
            assert all(host.has_edge(image[u], image[v]) for u, v in pattern.edges())


def test_arc_orbits_of_c5():
    assert arc_orbits(cycle(5)) == (((0, 1), 10),)


@pytest.mark.parametrize(
    "pattern, sizes", [(k4_minus_edge(), [2, 4, 4]), (complete(4), [12]), (path(3), [2, 2])]
)
def test_arc_orbit_sizes_cover_every_arc(pattern, sizes):
    orbits = arc_orbits(pattern)
    assert sorted(size for _, size in orbits) == sizes
    assert sum(sizes) == 2 * pattern.m


def test_triangles_in_k6():
    result = count_copies(cycle(3), complete(6))
    assert result.copies == 20
    assert result.injections == 20 * 6


def test_matches_naive_oracle():
    rng = random.Random(2024)
    for _ in range(100):
        pattern = PATTERNS[rng.randrange(len(PATTERNS))]
        host = random_graph(rng.randrange(4, 9), rng)
        assert count_injections(pattern, host) == naive_injections(pattern, host)


def test_worker_count_does_not_change_total():
    host = turan_graph(10, 2).add_edge(0, 1)
    assert count_injections(cycle(5), host, workers=2) == count_injections(cycle(5), host)


def test_adding_edges_never_decreases_copies():
    rng = random.Random(9)
    g = Graph.empty(8)
    previous = 0
    for u, v in rng.sample(list(combinations(range(8), 2)), 28):
        g = g.add_edge(u, v)
        copies = count_copies(k4_minus_edge(), g).copies
        assert copies >= previous
        previous = copies


###--- anchored counts ---###


def test_conflicting_anchors_give_zero():
    assert count_anchored_injections(cycle(3), complete(4), {0: 1, 1: 1}) == 0


def test_anchor_on_non_edge_gives_zero():
    host = cycle(6)
    assert count_anchored_injections(path(2), host, {0: 0, 1: 3}) == 0


def test_copies_through_non_edge_raises():
    with pytest.raises(InvalidEdgeError):
        copies_through_edge(cycle(3), cycle(5), (0, 2))


def test_edge_counts_match_deletion_counts():
    rng = random.Random(31)
    for _ in range(15):
        host = random_graph(rng.randrange(5, 9), rng)
        for pattern in (cycle(3), k4_minus_edge()):
            for e in host.edges():
                assert copies_through_edge(pattern, host, e, verify=True) == (
                    copies_through_edge_by_deletion(pattern, host, e)
                )


def test_deletion_identity_on_random_hosts():
    rng = random.Random(77)
    for _ in range(50):
        host = random_graph(rng.randrange(4, 9), rng)
        pattern = PATTERNS[rng.randrange(len(PATTERNS))]
        profile = edge_copy_profile(pattern, host)
        assert sum(profile.values()) == pattern.m * count_copies(pattern, host).copies


def test_vertex_identity():
    host = turan_graph(9, 2).add_edge(0, 1).add_edge(5, 6)
    pattern = require_critical(cycle(5))
    total = count_copies(pattern.graph, host).copies
    per_vertex = [copies_through_vertex(pattern, host, v, verify=True) for v in range(host.n)]
    assert sum(per_vertex) == pattern.f * total


def test_critical_pattern_and_graph_agree():
    host = turan_graph(8, 2).add_edge(0, 1)
    pattern = require_critical(cycle(3))
    assert copies_through_edge(pattern, host, (0, 1)) == copies_through_edge(cycle(3), host, (0, 1)) == 4
