#! /usr/bin/env python3
"""
Module for proper colourings and criticality analysis of pattern graphs.

Colour classes are kept as vertex bitmasks: vertex v may take colour c when
the class mask of c misses the neighbourhood of v.
"""

import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from typing import NamedTuple

from .counting import MAX_PATTERN_VERTICES, automorphism_count
from .exceptions import (
    InconsistentColoringError,
    InvalidEdgeError,
    NotCriticalError,
    PatternTooLargeError,
)
from .graph_core import Edge, Graph

logger = logging.getLogger(__name__)


class ColoringClassProfile(NamedTuple):
    """Vertices per colour 1..k, excluding the endpoints of the removed edge."""

    counts: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class CriticalPattern:
    graph: Graph
    f: int
    chi: int
    r: int
    good_edges: tuple[Edge, ...]
    aut: int


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown from the highest-degree vertex."""
    if g.n == 0:
        return []
    by_degree = sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))
    clique = [by_degree[0]]
    common = g.adj[by_degree[0]]
    for v in by_degree[1:]:
        if common >> v & 1:
            clique.append(v)
            common &= g.adj[v]
    return clique


def _search_order(g: Graph, seed: list[int]) -> list[int]:
    seeded = set(seed)
    rest = sorted(
        (v for v in range(g.n) if v not in seeded),
        key=lambda v: (-g.adj[v].bit_count(), v),
    )
    return seed + rest


def _colour_rec(
    g: Graph, k: int, order: list[int], depth: int, classes: list[int]
) -> bool:
    if depth == len(order):
        return True
    v = order[depth]
    opened = sum(1 for mask in classes if mask)
    # Unused colours are interchangeable, so only the first one is tried.
    for c in range(min(opened + 1, k)):
        if classes[c] & g.adj[v]:
            continue
        classes[c] |= 1 << v
        if _colour_rec(g, k, order, depth + 1, classes):
            return True
        classes[c] &= ~(1 << v)
    return False


def _colourable_with_seed(g: Graph, k: int, seed: list[int]) -> bool:
    if len(seed) > k:
        return False
    classes = [0] * k
    for c, v in enumerate(seed):
        classes[c] = 1 << v
    return _colour_rec(g, k, _search_order(g, seed), len(seed), classes)


def is_k_colorable(g: Graph, k: int) -> bool:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if g.n == 0:
        return True
    if k == 0:
        return False
    return _colourable_with_seed(g, k, greedy_clique(g))


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by increasing k from the greedy clique size."""
    if g.n == 0:
        return 0
    clique = greedy_clique(g)
    k = len(clique)
    while not _colourable_with_seed(g, k, clique):
        k += 1
    return k


def _check_fixed(g: Graph, k: int, fixed: Mapping[int, int]) -> None:
    for v, c in fixed.items():
        if not 0 <= v < g.n:
            raise InvalidEdgeError(f"Fixed vertex {v} is not below n={g.n}.")
        if not 1 <= c <= k:
            raise InconsistentColoringError(f"Colour {c} of vertex {v} outside 1..{k}.")
    for v, c in fixed.items():
        for w, d in fixed.items():
            if v < w and c == d and g.adj[v] >> w & 1:
                raise InconsistentColoringError(
                    f"Adjacent vertices {v} and {w} are both fixed to colour {c}."
                )


def enumerate_constrained_colorings(
    g: Graph, k: int, fixed: Mapping[int, int] | None = None
) -> Iterator[tuple[int, ...]]:
    """
    Yields every proper k-colouring extending fixed, colours 1..k distinguishable.

    Colourings are tuples indexed by vertex and come out in lexicographic order.
    The generator is restartable by calling the function again.
    """
    fixed = dict(fixed or {})
    _check_fixed(g, k, fixed)
    colours = [0] * g.n
    classes = [0] * (k + 1)

    def rec(v: int) -> Iterator[tuple[int, ...]]:
        if v == g.n:
            yield tuple(colours)
            return
        choices = [fixed[v]] if v in fixed else range(1, k + 1)
        for c in choices:
            if classes[c] & g.adj[v]:
                continue
            colours[v] = c
            classes[c] |= 1 << v
            yield from rec(v + 1)
            classes[c] &= ~(1 << v)
        colours[v] = 0

    yield from rec(0)


def class_profile(coloring: tuple[int, ...], u: int, v: int, k: int) -> ColoringClassProfile:
    counts = [0] * k
    for w, c in enumerate(coloring):
        if w not in (u, v):
            counts[c - 1] += 1
    return ColoringClassProfile(tuple(counts))


def analyze_pattern(g: Graph) -> CriticalPattern | None:
    """
    Classifies g as r-critical (returns the pattern data) or not (returns None).

    An edge uv is good when chi(g - uv) = chi(g) - 1. Only one good edge is
    required; criticality of all proper subgraphs is never tested.
    """
    if g.n > MAX_PATTERN_VERTICES:
        raise PatternTooLargeError(
            f"Pattern has {g.n} vertices, limit is {MAX_PATTERN_VERTICES}."
        )
    if g.m == 0:
        raise NotCriticalError("Pattern has no edges.")
    chi = chromatic_number(g)
    r = chi - 1
    good_edges = tuple(
        (u, v) for u, v in g.edges() if is_k_colorable(g.remove_edge(u, v), r)
    )
    if not good_edges:
        logger.debug(f"Pattern with chi={chi} has no good edge")
        return None
    return CriticalPattern(g, g.n, chi, r, good_edges, automorphism_count(g))


def require_critical(g: Graph) -> CriticalPattern:
    pattern = analyze_pattern(g)
    if pattern is None:
        raise NotCriticalError(
            f"Pattern with chi={chromatic_number(g)} has no edge whose deletion lowers it."
        )
    return pattern
