#!/usr/bin/env python3

import logging
import math
import os
import time

import pytest

from Turan_Count.coloring import require_critical
from Turan_Count.counting import count_copies
from Turan_Count.exceptions import SearchSpaceTooLargeError
from Turan_Count.graph_core import cycle, turan_graph, turan_number
from Turan_Count.search import counterexample_search, exhaustive_search, run_search_chains


@pytest.fixture(scope="module")
def c3():
    return require_critical(cycle(3))


@pytest.fixture(scope="module")
def c5():
    return require_critical(cycle(5))


###--- exhaustive ---###


def test_exhaustive_triangle_minimum(c3):
    state = exhaustive_search(6, c3, 1)
    assert state.best_copies == 3
    assert state.bound == 3
    assert state.steps == math.comb(15, 10)
    assert state.mode == "exhaustive"
    assert not state.finding
    assert count_copies(c3.graph, state.best_graph).copies == 3


def test_exhaustive_cap(c5):
    with pytest.raises(SearchSpaceTooLargeError):
        exhaustive_search(10, c5, 1)


def test_exhaustive_impossible_edge_count(c3):
    with pytest.raises(ValueError):
        exhaustive_search(4, c3, 3)


###--- annealing ---###


def test_q_zero_returns_turan_graph(c5):
    state = counterexample_search(10, c5, 0, 100)
    assert state.best_graph == turan_graph(10, 2)
    assert state.best_copies == 0
    assert state.steps == 0


def test_annealing_keeps_edge_count_and_bound(c3):
    state = counterexample_search(8, c3, 1, 300, seed=1)
    assert state.graph.m == state.target_edges == turan_number(8, 2) + 1
    assert state.best_graph.m == state.target_edges
    assert state.best_copies >= 4
    assert state.copies == count_copies(c3.graph, state.graph).copies
    assert state.history == sorted(state.history, reverse=True)
    assert not state.finding


def test_annealing_c5_finds_nothing_below_bound(c5):
    state = counterexample_search(10, c5, 1, 400, seed=0)
    assert state.bound == 60
    assert state.best_copies >= 60
    assert not state.below_bound_seen


def test_annealing_is_reproducible(c3):
    first = counterexample_search(8, c3, 2, 200, seed=5)
    second = counterexample_search(8, c3, 2, 200, seed=5)
    assert first.best_graph == second.best_graph
    assert first.history == second.history
    assert first.accepted == second.accepted


def test_annealer_agrees_with_exhaustive(c3):
    assert counterexample_search(6, c3, 1, 200).best_copies == exhaustive_search(6, c3, 1).best_copies


def test_chains_pick_fewest_copies(c3):
    best = run_search_chains(8, c3, 2, 150, seed=3, chains=2)
    singles = [counterexample_search(8, c3, 2, 150, seed=s) for s in (3, 4)]
    assert best.best_copies == min(state.best_copies for state in singles)
    lowest = next(state for state in singles if state.best_copies == best.best_copies)
    assert best.seed == lowest.seed


###--- acceptance run ---###


@pytest.mark.slow
@pytest.mark.parametrize("q", [1, 2])
def test_eight_c5_chains_stay_above_bound(c5, q):
    start = time.perf_counter()
    best = run_search_chains(10, c5, q, 100_000, seed=0, chains=8, workers=os.cpu_count() or 1)
    logging.getLogger(__name__).info(f"q={q}: 8 chains in {time.perf_counter() - start:.1f}s")
    assert best.bound == q * 60
    assert best.best_copies >= q * 60
    assert not best.finding
