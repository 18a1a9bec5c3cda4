#!/usr/bin/env python3

import logging
import random
from fractions import Fraction
from itertools import combinations

import pytest

from Turan_Count.analyzer import (
    Partition,
    audit_theorem,
    best_partition,
    classify_bad_edges,
    cross_edge_count,
    decompose,
    exhaustive_max_cut,
    heavy_missing_vertices,
    in_lemma4_window,
    is_local_optimum,
    max_r_partition,
)
from Turan_Count.coloring import require_critical
from Turan_Count.extremal import sharpness_construction
from Turan_Count.graph_core import (
    Graph,
    PartSizes,
    complete,
    cross_pair_count,
    cycle,
    from_edge_list,
    turan_graph,
    turan_number,
)

logger = logging.getLogger(__name__)


def natural_partition(n: int) -> Partition:
    half = -(-n // 2)
    return Partition(tuple([0] * half + [1] * (n - half)), 2)


def random_graph(n: int, rng: random.Random) -> Graph:
    p = rng.uniform(0.2, 0.9)
    return from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@pytest.fixture(scope="module")
def c5():
    return require_critical(cycle(5))


###--- partitions ---###


def test_partition_sizes_and_masks():
    partition = Partition((0, 1, 1, 2), 3)
    assert partition.sizes.sizes == (1, 2, 1)
    assert partition.class_masks() == [0b0001, 0b0110, 0b1000]


def test_partition_rejects_bad_classes():
    with pytest.raises(ValueError):
        Partition((0, 2), 2)
    with pytest.raises(ValueError):
        Partition((0, 0), 1)


def test_max_cut_of_c5():
    partition = max_r_partition(cycle(5), 2, seed=4)
    assert cross_edge_count(cycle(5), partition.assignment) == 4
    assert partition.source == "local-search"


def test_max_cut_of_k4():
    partition = max_r_partition(complete(4), 2)
    assert cross_edge_count(complete(4), partition.assignment) == 4
    assert len(decompose(complete(4), partition).bad) == 2


def test_turan_plus_edge_exhaustive():
    host = turan_graph(8, 2).add_edge(0, 1)
    partition = exhaustive_max_cut(host)
    assert partition.source == "exhaustive"
    assert cross_edge_count(host, partition.assignment) == 16
    assert len(decompose(host, partition).bad) == 1


def test_best_partition_regimes():
    assert best_partition(cycle(5), 2).source == "exhaustive"
    assert best_partition(turan_graph(9, 3), 3).source == "local-search"


def test_max_r_partition_is_deterministic():
    host = turan_graph(12, 3).add_edge(0, 1)
    assert max_r_partition(host, 3, seed=7) == max_r_partition(host, 3, seed=7)


def test_max_r_partition_needs_two_classes():
    with pytest.raises(ValueError):
        max_r_partition(cycle(5), 1)


def test_local_search_against_exhaustive_cut():
    rng = random.Random(8)
    misses = 0
    for _ in range(50):
        host = random_graph(rng.randrange(2, 13), rng)
        local = max_r_partition(host, 2, seed=rng.randrange(100), restarts=8)
        exact = exhaustive_max_cut(host)
        assert is_local_optimum(host, local)
        local_cross = cross_edge_count(host, local.assignment)
        exact_cross = cross_edge_count(host, exact.assignment)
        assert local_cross <= exact_cross
        if local_cross < exact_cross:
            misses += 1
    if misses:
        logger.warning(f"Local search missed the maximum cut on {misses} of 50 graphs")


###--- decomposition ---###


def test_decompose_turan_plus_edge():
    host = turan_graph(6, 2).add_edge(0, 1)
    d = decompose(host, natural_partition(6))
    assert (len(d.good), len(d.bad), len(d.missing), d.q, d.s) == (9, 1, 0, 1, 0)


def test_decompose_with_missing_pair():
    host = turan_graph(6, 2).remove_edge(0, 3).add_edge(0, 1).add_edge(3, 4)
    d = decompose(host, natural_partition(6))
    assert (len(d.good), len(d.bad), len(d.missing), d.q, d.s) == (8, 2, 1, 1, 1)
    assert d.missing == ((0, 3),)
    assert heavy_missing_vertices(d, 6, Fraction(0)) == [0, 3]


def test_decompose_c5():
    d = decompose(cycle(5), exhaustive_max_cut(cycle(5)))
    assert (len(d.bad), len(d.good), len(d.missing)) == (1, 4, 2)
    assert len(d.bad) == d.q + d.s


def test_decompose_wrong_size():
    with pytest.raises(ValueError):
        decompose(cycle(5), natural_partition(4))


def test_decomposition_identities():
    rng = random.Random(200)
    for _ in range(200):
        n = rng.randrange(2, 13)
        r = rng.choice((2, 3))
        host = random_graph(n, rng)
        partition = Partition(tuple(rng.randrange(r) for _ in range(n)), r)
        d = decompose(host, partition)
        cross = cross_pair_count(partition.sizes)
        assert len(d.good) + len(d.bad) == host.m
        assert len(d.good) + len(d.missing) == cross
        assert len(d.bad) == d.q + d.s
        assert len(d.good) <= cross <= turan_number(n, r)
        assert d.q + len(d.missing) <= len(d.bad)


@pytest.mark.parametrize("sizes, s, expected", [((4, 6), 1, True), ((3, 7), 1, False), ((5, 5), 0, True)])
def test_in_lemma4_window(sizes, s, expected):
    assert in_lemma4_window(PartSizes(sizes), s) is expected


###--- bad edge split ---###


def test_single_extra_edge_is_heavy(c5):
    host = turan_graph(10, 2).add_edge(0, 1)
    b1, b2 = classify_bad_edges(host, natural_partition(10), c5, Fraction(1, 10))
    assert b1 == ((0, 1),)
    assert b2 == ()


def test_extra_edge_turns_light_after_deletions(c5):
    host = turan_graph(10, 2).add_edge(0, 1).remove_edges([(0, 5), (0, 6), (0, 7)])
    b1, b2 = classify_bad_edges(host, natural_partition(10), c5, Fraction(1, 10))
    assert b1 == ()
    assert b2 == ((0, 1),)


def test_no_bad_edges(c5):
    assert classify_bad_edges(turan_graph(10, 2), natural_partition(10), c5) == ((), ())


def test_classify_rejects_epsilon(c5):
    with pytest.raises(ValueError):
        classify_bad_edges(turan_graph(10, 2), natural_partition(10), c5, Fraction(1))


###--- audit ---###


def test_audit_sharpness_construction(c5):
    host, _ = sharpness_construction(12, c5, 3)
    report = audit_theorem(host, c5)
    assert report.passed
    assert (report.q, report.copies, report.bound) == (3, 360, 360)
    assert report.partition_source == "exhaustive"
    assert report.rich_edges == 3
    assert report.heavy_bad_edges == 3
    assert report.turan_on_partition is True
    assert report.heavy_missing_vertices == []
    assert report.distribution_holds


def test_audit_turan_graph_is_trivial(c5):
    report = audit_theorem(turan_graph(10, 2), c5)
    assert report.passed
    assert (report.q, report.copies, report.bound) == (0, 0, 0)
    assert report.below_turan_threshold
    assert report.notes == ["below Turán threshold"]


def test_audit_triangles_in_k6():
    report = audit_theorem(complete(6), require_critical(cycle(3)))
    assert (report.q, report.copies, report.bound) == (6, 20, 18)
    assert report.passed
    assert report.max_vertex_copies == 10
    assert report.distribution_holds


def test_audit_host_smaller_than_pattern(c5):
    report = audit_theorem(complete(4), c5)
    assert report.c_n == 0
    assert report.copies == 0
    assert report.passed


def test_audit_json_key_order(c5):
    data = audit_theorem(turan_graph(10, 2).add_edge(0, 1), c5).to_json_dict()
    assert list(data)[:10] == [
        "n", "r", "q", "s", "copies", "bound", "pass", "max_vertex_copies", "rich_edges",
        "partition_source",
    ]
    assert data["pass"] is True
    assert data["epsilon"] == "1/10"


def test_audit_lists_heavy_missing_vertices(c5):
    host = turan_graph(10, 2).remove_edges([(0, 5), (0, 6), (0, 7)]).add_edges([(1, 2), (3, 4), (5, 6), (7, 8)])
    report = audit_theorem(host, c5)
    partition = best_partition(host, 2)
    expected = heavy_missing_vertices(decompose(host, partition), 10, Fraction(1, 10) * 10)
    assert report.heavy_missing_vertices == expected == [0]
