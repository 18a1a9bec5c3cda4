#! /usr/bin/env python3
"""
Module for probing the Turán copy bound on small hosts.

- counterexample_search: simulated annealing over edge swaps (drop one edge,
  add one non-edge) at a fixed edge count t_r(n) + q, minimising #F.
- exhaustive_search: the minimum of #F over every graph with t_r(n) + q edges,
  for spaces below a hard cap.

A search never proves anything is absent; a best count below q c(n, F) is
reported as a finding, since n may lie below the theorem's threshold.
"""

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .coloring import CriticalPattern
from .counting import copies_through_edge, count_copies
from .exceptions import HostTooSmallError, InvariantBreachError, SearchSpaceTooLargeError
from .extremal import c_exact
from .graph_core import Graph, from_edge_list, turan_graph, turan_number
from .parallel import run_tasks

logger = logging.getLogger(__name__)

EXHAUSTIVE_CAP: int = 10**7
DEFAULT_TEMPERATURE: Fraction = Fraction(10)
DEFAULT_COOLING: Fraction = Fraction(9995, 10000)
TEMPERATURE_FLOOR: Fraction = Fraction(1, 1000)
_DENOMINATOR_LIMIT: int = 10**9


@dataclass(slots=True)
class SearchState:
    graph: Graph
    n: int
    q: int
    target_edges: int
    copies: int
    best_graph: Graph
    best_copies: int
    bound: int
    seed: int
    temperature: Fraction = DEFAULT_TEMPERATURE
    cooling: Fraction = DEFAULT_COOLING
    steps: int = 0
    accepted: int = 0
    below_bound_seen: bool = False
    mode: str = "anneal"
    history: list[int] = field(default_factory=list)

    @property
    def finding(self) -> bool:
        return self.below_bound_seen


def _bound(n: int, pattern: CriticalPattern, q: int) -> int:
    try:
        return max(q, 0) * c_exact(n, pattern)
    except HostTooSmallError:
        return 0


def _initial_graph(n: int, r: int, q: int, rng: random.Random) -> Graph:
    """T_r(n) with q random non-edges added, or q random edges removed when q < 0."""
    base = turan_graph(n, r)
    if q >= 0:
        return base.add_edges(rng.sample(base.non_edges(), q))
    return base.remove_edges(rng.sample(base.edges(), -q))


def _accept(delta: int, temperature: Fraction, rng: random.Random) -> bool:
    """
    Metropolis rule. delta and the temperature are exact; exp(-delta / T) is the
    one float in the search and is compared with rng.random(), so a fixed seed
    still replays the same chain.
    """
    if delta <= 0:
        return True
    return rng.random() < math.exp(-delta / temperature)


def counterexample_search(
    n: int,
    pattern: CriticalPattern,
    q: int,
    iters: int,
    seed: int = 0,
    temperature: Fraction = DEFAULT_TEMPERATURE,
    cooling: Fraction = DEFAULT_COOLING,
) -> SearchState:
    """
    Anneals from T_r(n) plus q random edges towards few copies of F.

    The change of #F for a swap is computed exactly from per-edge counts:
    #F(H - a + b) = #F(H) - F_H(a) + F_{H - a + b}(b).
    """
    rng = random.Random(seed)
    r = pattern.r
    target = turan_number(n, r) + q
    graph = _initial_graph(n, r, q, rng)
    copies = count_copies(pattern.graph, graph).copies
    bound = _bound(n, pattern, q)
    state = SearchState(
        graph, n, q, target, copies, graph, copies, bound, seed, temperature, cooling
    )
    if q <= 0 or graph.m == 0 or not graph.non_edges():
        state.below_bound_seen = copies < bound
        return state
    edges = state.graph.edges()
    gaps = state.graph.non_edges()
    for _ in range(iters):
        state.steps += 1
        i = rng.randrange(len(edges))
        j = rng.randrange(len(gaps))
        drop, add = edges[i], gaps[j]
        lost = copies_through_edge(pattern, state.graph, drop)
        candidate = state.graph.swap_edge(drop, add)
        gained = copies_through_edge(pattern, candidate, add)
        delta = gained - lost
        if _accept(delta, state.temperature, rng):
            state.graph = candidate
            state.copies += delta
            state.accepted += 1
            edges[i], gaps[j] = add, drop
            if state.graph.m != target:
                raise InvariantBreachError(
                    f"Accepted state has {state.graph.m} edges, expected {target}."
                )
            if state.copies < state.best_copies:
                state.best_copies = state.copies
                state.best_graph = state.graph
                state.history.append(state.copies)
            if state.copies < bound:
                state.below_bound_seen = True
        if state.temperature > TEMPERATURE_FLOOR:
            state.temperature = max(
                TEMPERATURE_FLOOR,
                (state.temperature * cooling).limit_denominator(_DENOMINATOR_LIMIT),
            )
    if state.below_bound_seen:
        logger.warning(
            f"Search found {state.best_copies} copies below q*c(n,F)={bound} at n={n}, q={q}"
        )
    return state


def _chain_task(task: tuple[int, CriticalPattern, int, int, int, Fraction, Fraction]) -> SearchState:
    return counterexample_search(*task)


def run_search_chains(
    n: int,
    pattern: CriticalPattern,
    q: int,
    iters: int,
    seed: int = 0,
    chains: int = 1,
    workers: int = 1,
    temperature: Fraction = DEFAULT_TEMPERATURE,
    cooling: Fraction = DEFAULT_COOLING,
) -> SearchState:
    """Independent chains with seeds seed, seed + 1, ...; fewest copies wins, lowest seed on ties."""
    tasks = [(n, pattern, q, iters, seed + i, temperature, cooling) for i in range(chains)]
    states = run_tasks(_chain_task, tasks, workers)
    best = states[0]
    for state in states[1:]:
        if state.best_copies < best.best_copies:
            best = state
    best.below_bound_seen = any(state.below_bound_seen for state in states)
    return best


def exhaustive_search(
    n: int, pattern: CriticalPattern, q: int, cap: int = EXHAUSTIVE_CAP
) -> SearchState:
    """Minimum #F over all graphs on n vertices with t_r(n) + q edges."""
    target = turan_number(n, pattern.r) + q
    pairs = list(combinations(range(n), 2))
    if not 0 <= target <= len(pairs):
        raise ValueError(f"No graph on {n} vertices has {target} edges.")
    space = math.comb(len(pairs), target)
    if space > cap:
        raise SearchSpaceTooLargeError(
            f"{space} edge sets exceed the exhaustive cap of {cap}."
        )
    logger.info(f"Scanning {space} graphs with {target} edges")
    best_graph: Graph | None = None
    best_copies = -1
    for chosen in combinations(pairs, target):
        graph = from_edge_list(n, chosen)
        copies = count_copies(pattern.graph, graph).copies
        if best_graph is None or copies < best_copies:
            best_graph, best_copies = graph, copies
    assert best_graph is not None
    bound = _bound(n, pattern, q)
    return SearchState(
        best_graph,
        n,
        q,
        target,
        best_copies,
        best_graph,
        best_copies,
        bound,
        seed=0,
        steps=space,
        below_bound_seen=best_copies < bound,
        mode="exhaustive",
    )
