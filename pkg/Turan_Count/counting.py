#! /usr/bin/env python3
"""
Module for exact copy counting.

A copy of a pattern F in a host H is counted as an edge-preserving injection
V(F) -> V(H) divided by |Aut(F)|. Copies are not induced: non-edges of F may
land on edges of H.

Injections are enumerated by backtracking over the pattern vertices in a
static order. The candidates for the next pattern vertex are the unused host
vertices adjacent to the images of all of its already-placed neighbours,
computed as an intersection of adjacency bitmasks.
"""

import logging
from collections.abc import Iterator, Mapping
from functools import lru_cache
from typing import TYPE_CHECKING, NamedTuple

from .exceptions import InvalidEdgeError, InvariantBreachError, PatternTooLargeError
from .graph_core import Edge, Graph, iter_vertices
from .parallel import run_tasks

if TYPE_CHECKING:
    from .coloring import CriticalPattern

logger = logging.getLogger(__name__)

MAX_PATTERN_VERTICES: int = 10


class CopyCount(NamedTuple):
    copies: int
    injections: int


class _SearchPlan(NamedTuple):
    order: tuple[int, ...]
    # For each position, the positions of earlier-placed pattern neighbours.
    back_links: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=1024)
def _plan(pattern: Graph, anchored: tuple[int, ...] = ()) -> _SearchPlan:
    """Static order: anchors first, then descending degree, keeping the order connected where possible."""
    order: list[int] = list(anchored)
    placed = 0
    for a in anchored:
        placed |= 1 << a
    remaining = [v for v in range(pattern.n) if not placed >> v & 1]
    while remaining:
        best = min(
            remaining,
            key=lambda v: (
                -(pattern.adj[v] & placed).bit_count(),
                -pattern.adj[v].bit_count(),
                v,
            ),
        )
        order.append(best)
        placed |= 1 << best
        remaining.remove(best)
    position = {v: i for i, v in enumerate(order)}
    back_links = tuple(
        tuple(position[w] for w in iter_vertices(pattern.adj[v]) if position[w] < i)
        for i, v in enumerate(order)
    )
    return _SearchPlan(tuple(order), back_links)


def _extend(
    host: Graph, plan: _SearchPlan, images: list[int], used: int, depth: int
) -> int:
    if depth == len(plan.order):
        return 1
    candidates = ((1 << host.n) - 1) & ~used
    for position in plan.back_links[depth]:
        candidates &= host.adj[images[position]]
    last = len(plan.order) - 1
    if depth == last:
        return candidates.bit_count()
    total = 0
    if depth == last - 1:
        # The last vertex only needs a popcount per image of this one.
        final = ((1 << host.n) - 1) & ~used
        linked = False
        for position in plan.back_links[last]:
            if position == depth:
                linked = True
            else:
                final &= host.adj[images[position]]
        while candidates:
            low = candidates & -candidates
            options = final & ~low
            if linked:
                options &= host.adj[low.bit_length() - 1]
            total += options.bit_count()
            candidates ^= low
        return total
    while candidates:
        low = candidates & -candidates
        images[depth] = low.bit_length() - 1
        total += _extend(host, plan, images, used | low, depth + 1)
        candidates ^= low
    return total


def _check_pattern_size(pattern: Graph) -> None:
    if pattern.n > MAX_PATTERN_VERTICES:
        raise PatternTooLargeError(
            f"Pattern has {pattern.n} vertices, limit is {MAX_PATTERN_VERTICES}."
        )


def count_anchored_injections(
    pattern: Graph, host: Graph, anchors: Mapping[int, int]
) -> int:
    """Injections that send each anchored pattern vertex to its given host vertex."""
    _check_pattern_size(pattern)
    if pattern.n > host.n:
        return 0
    plan = _plan(pattern, tuple(anchors))
    images = [0] * pattern.n
    used = 0
    for depth, a in enumerate(anchors):
        image = anchors[a]
        if used >> image & 1:
            return 0
        for position in plan.back_links[depth]:
            if not host.adj[images[position]] >> image & 1:
                return 0
        images[depth] = image
        used |= 1 << image
    return _extend(host, plan, images, used, len(anchors))


def _count_under_root(task: tuple[Graph, Graph, int]) -> int:
    pattern, host, root = task
    plan = _plan(pattern)
    return count_anchored_injections(pattern, host, {plan.order[0]: root})


def count_injections(pattern: Graph, host: Graph, workers: int = 1) -> int:
    """Number of edge-preserving injections V(pattern) -> V(host).

    With workers > 1 the first branching level is split across processes; the
    total is a sum of exact integers and does not depend on the worker count.
    """
    _check_pattern_size(pattern)
    if pattern.n > host.n:
        return 0
    if pattern.n == 0:
        return 1
    if workers <= 1:
        plan = _plan(pattern)
        return _extend(host, plan, [0] * pattern.n, 0, 0)
    tasks = [(pattern, host, root) for root in range(host.n)]
    return sum(run_tasks(_count_under_root, tasks, workers))


def iter_injections(pattern: Graph, host: Graph) -> Iterator[tuple[int, ...]]:
    """Yields every edge-preserving injection as the tuple of images of 0..f-1."""
    _check_pattern_size(pattern)
    if pattern.n > host.n:
        return
    plan = _plan(pattern)
    images = [0] * pattern.n
    full = (1 << host.n) - 1

    def walk(depth: int, used: int) -> Iterator[tuple[int, ...]]:
        if depth == len(plan.order):
            mapping = [0] * pattern.n
            for position, v in enumerate(plan.order):
                mapping[v] = images[position]
            yield tuple(mapping)
            return
        candidates = full & ~used
        for position in plan.back_links[depth]:
            candidates &= host.adj[images[position]]
        while candidates:
            low = candidates & -candidates
            images[depth] = low.bit_length() - 1
            yield from walk(depth + 1, used | low)
            candidates ^= low

    yield from walk(0, 0)


@lru_cache(maxsize=256)
def arc_orbits(pattern: Graph) -> tuple[tuple[Edge, int], ...]:
    """
    One ordered edge (a, b) per Aut(F) orbit on ordered edges, with the orbit size.

    Anchored counts are constant on an orbit: if sigma is an automorphism then
    phi -> phi o sigma maps the injections sending (a, b) onto (x, y) to those
    sending (sigma^-1 a, sigma^-1 b) onto (x, y).
    """
    automorphisms = list(iter_injections(pattern, pattern))
    seen: set[Edge] = set()
    orbits: list[tuple[Edge, int]] = []
    for u, v in pattern.edges():
        for a, b in ((u, v), (v, u)):
            if (a, b) in seen:
                continue
            orbit = {(sigma[a], sigma[b]) for sigma in automorphisms}
            seen |= orbit
            orbits.append(((a, b), len(orbit)))
    return tuple(orbits)


def automorphism_count(pattern: Graph) -> int:
    """|Aut(F)|.

    An edge-preserving injection of F into itself is a bijection on vertices
    that maps E(F) injectively into E(F), hence onto it, so it also preserves
    non-edges.
    """
    return count_injections(pattern, pattern)


def count_copies(pattern: Graph, host: Graph, workers: int = 1) -> CopyCount:
    injections = count_injections(pattern, host, workers)
    copies, remainder = divmod(injections, automorphism_count(pattern))
    if remainder:
        raise InvariantBreachError(
            f"{injections} injections are not divisible by |Aut(F)|."
        )
    return CopyCount(copies, injections)


def _pattern_graph(pattern: "CriticalPattern | Graph") -> Graph:
    return pattern if isinstance(pattern, Graph) else pattern.graph


def _pattern_aut(pattern: "CriticalPattern | Graph") -> int:
    return automorphism_count(pattern) if isinstance(pattern, Graph) else pattern.aut


def _anchored_edge_injections(pattern: Graph, host: Graph, e: Edge) -> int:
    x, y = e
    return sum(
        size * count_anchored_injections(pattern, host, {a: x, b: y})
        for (a, b), size in arc_orbits(pattern)
    )


def copies_through_edge_by_deletion(
    pattern: "CriticalPattern | Graph", host: Graph, e: Edge
) -> int:
    """F(e) as #F(H) - #F(H - e)."""
    graph = _pattern_graph(pattern)
    without = host.remove_edge(*e)
    return count_copies(graph, host).copies - count_copies(graph, without).copies


def copies_through_edge(
    pattern: "CriticalPattern | Graph", host: Graph, e: Edge, verify: bool = False
) -> int:
    """F(e): copies of the pattern whose edge set contains the host edge e.

    Every injection whose image uses e sends exactly one pattern edge onto e,
    so summing anchored counts over pattern edges in both orientations counts
    each such injection once. That set is closed under Aut(F), so dividing by
    |Aut(F)| gives copies.
    """
    if not host.has_edge(*e):
        raise InvalidEdgeError(f"{e} is not an edge of the host.")
    graph = _pattern_graph(pattern)
    aut = _pattern_aut(pattern)
    copies, remainder = divmod(_anchored_edge_injections(graph, host, e), aut)
    if remainder:
        raise InvariantBreachError(f"Anchored count through {e} not divisible by {aut}.")
    if verify:
        by_deletion = copies_through_edge_by_deletion(pattern, host, e)
        if by_deletion != copies:
            raise InvariantBreachError(
                f"F({e}) anchored={copies} differs from deletion count={by_deletion}."
            )
    return copies


def copies_through_vertex(
    pattern: "CriticalPattern | Graph", host: Graph, v: int, verify: bool = False
) -> int:
    """Copies containing vertex v, equal to #F(H) - #F(H - v).

    Counted by anchoring each pattern vertex on v in turn; verify=True also
    runs the deletion difference and checks the two agree.
    """
    if not 0 <= v < host.n:
        raise InvalidEdgeError(f"Vertex {v} is not below n={host.n}.")
    graph = _pattern_graph(pattern)
    aut = _pattern_aut(pattern)
    anchored = sum(
        count_anchored_injections(graph, host, {a: v}) for a in range(graph.n)
    )
    copies, remainder = divmod(anchored, aut)
    if remainder:
        raise InvariantBreachError(f"Anchored count at vertex {v} not divisible by {aut}.")
    if verify:
        by_deletion = (
            count_copies(graph, host).copies
            - count_copies(graph, host.remove_vertex(v)).copies
        )
        if by_deletion != copies:
            raise InvariantBreachError(
                f"Vertex {v}: anchored={copies} differs from deletion count={by_deletion}."
            )
    return copies


def edge_copy_profile(pattern: "CriticalPattern | Graph", host: Graph) -> dict[Edge, int]:
    """F(e) for every host edge, keyed by (u, v) with u < v."""
    return {e: copies_through_edge(pattern, host, e) for e in host.edges()}
