#! /usr/bin/env python3
"""
Module for graph representation and the classic constructions.

Graphs are simple and undirected with at most 64 vertices; every adjacency
row is a single int bitmask. Graph values are immutable: every edit returns a
new Graph.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from itertools import combinations

from .exceptions import BlockTooSmallError, CapacityError, InvalidEdgeError

MAX_VERTICES: int = 64

Edge = tuple[int, int]


def _normalise_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, slots=True)
class Graph:
    """A simple undirected graph stored as per-vertex neighbour bitmasks."""

    n: int
    adj: tuple[int, ...]
    m: int = field(init=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"Graph has {self.n} vertices, limit is {MAX_VERTICES}.")
        if len(self.adj) != self.n:
            raise InvalidEdgeError(
                f"Adjacency has {len(self.adj)} rows for {self.n} vertices."
            )
        full = (1 << self.n) - 1
        degree_total = 0
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise InvalidEdgeError(f"Row {v} has a loop or an out-of-range vertex.")
            rest = row
            while rest:
                low = rest & -rest
                w = low.bit_length() - 1
                if not self.adj[w] >> v & 1:
                    raise InvalidEdgeError(f"Adjacency is not symmetric at {v}-{w}.")
                rest ^= low
            degree_total += row.bit_count()
        object.__setattr__(self, "m", degree_total // 2)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidEdgeError(f"Vertex {v} is not below n={self.n}.")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        """Neighbour bitmask of v."""
        self._check_vertex(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.neighbors(v).bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def edges(self) -> list[Edge]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        result: list[Edge] = []
        for u, row in enumerate(self.adj):
            upper = row >> (u + 1)
            w = u + 1
            while upper:
                if upper & 1:
                    result.append((u, w))
                upper >>= 1
                w += 1
        return result

    def non_edges(self) -> list[Edge]:
        return [
            (u, v) for u, v in combinations(range(self.n), 2) if not self.adj[u] >> v & 1
        ]

    def add_edges(self, pairs: Iterable[Edge]) -> "Graph":
        rows = list(self.adj)
        for u, v in pairs:
            self._check_vertex(u)
            self._check_vertex(v)
            if u == v:
                raise InvalidEdgeError(f"Loop at vertex {u}.")
            if rows[u] >> v & 1:
                raise InvalidEdgeError(f"Edge {_normalise_edge(u, v)} already present.")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def add_edge(self, u: int, v: int) -> "Graph":
        return self.add_edges([(u, v)])

    def remove_edges(self, pairs: Iterable[Edge]) -> "Graph":
        rows = list(self.adj)
        for u, v in pairs:
            self._check_vertex(u)
            self._check_vertex(v)
            if not rows[u] >> v & 1:
                raise InvalidEdgeError(f"Edge {_normalise_edge(u, v)} is not present.")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        return self.remove_edges([(u, v)])

    def swap_edge(self, drop: Edge, add: Edge) -> "Graph":
        """Removes edge drop and adds non-edge add; the edge count is unchanged."""
        (a, b), (c, d) = drop, add
        for v in (a, b, c, d):
            self._check_vertex(v)
        if not self.adj[a] >> b & 1:
            raise InvalidEdgeError(f"Edge {_normalise_edge(a, b)} is not present.")
        if c == d or self.adj[c] >> d & 1:
            raise InvalidEdgeError(f"Cannot add {_normalise_edge(c, d)}.")
        rows = list(self.adj)
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
        rows[c] |= 1 << d
        rows[d] |= 1 << c
        # Rows stay symmetric and loop-free, so the full check in __post_init__ is skipped.
        swapped = object.__new__(Graph)
        object.__setattr__(swapped, "n", self.n)
        object.__setattr__(swapped, "adj", tuple(rows))
        object.__setattr__(swapped, "m", self.m)
        return swapped

    def remove_vertex(self, v: int) -> "Graph":
        """Isolates v; indices of the other vertices are unchanged."""
        self._check_vertex(v)
        keep = ~(1 << v)
        rows = tuple(0 if w == v else row & keep for w, row in enumerate(self.adj))
        return Graph(self.n, rows)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            rest = frontier
            while rest:
                low = rest & -rest
                reach |= self.adj[low.bit_length() - 1]
                rest ^= low
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1


@dataclass(frozen=True, slots=True)
class PartSizes:
    """Ordered class sizes n_1..n_r of an r-partition."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.sizes) < 2:
            raise ValueError(f"Need at least 2 classes, got {len(self.sizes)}.")
        if any(size < 0 for size in self.sizes):
            raise ValueError(f"Part sizes must be non-negative: {self.sizes}.")

    @property
    def r(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def blocks(self) -> list[range]:
        """Contiguous vertex range of each class, classes in the given order."""
        result: list[range] = []
        start = 0
        for size in self.sizes:
            result.append(range(start, start + size))
            start += size
        return result


def _block_mask(block: range) -> int:
    return ((1 << len(block)) - 1) << block.start if len(block) else 0


def complete_multipartite(parts: PartSizes) -> Graph:
    """Complete multipartite graph with class i on the i-th contiguous index block."""
    n = parts.n
    if n > MAX_VERTICES:
        raise CapacityError(f"Parts {parts.sizes} need {n} vertices, limit is {MAX_VERTICES}.")
    full = (1 << n) - 1
    rows: list[int] = []
    for block in parts.blocks():
        row = full & ~_block_mask(block)
        rows.extend([row] * len(block))
    return Graph(n, tuple(rows))


def turan_part_sizes(n: int, r: int) -> PartSizes:
    """Turán class sizes: the n mod r ceiling parts first, then the floor parts."""
    if n < 0 or r < 2:
        raise ValueError(f"Turán graph needs n >= 0 and r >= 2, got n={n}, r={r}.")
    base, extra = divmod(n, r)
    return PartSizes(tuple([base + 1] * extra + [base] * (r - extra)))


def turan_graph(n: int, r: int) -> Graph:
    return complete_multipartite(turan_part_sizes(n, r))


def turan_number(n: int, r: int) -> int:
    """t_r(n), the edge count of T_r(n)."""
    if n < 0 or r < 2:
        raise ValueError(f"Turán number needs n >= 0 and r >= 2, got n={n}, r={r}.")
    sizes = [(n + i) // r for i in range(r)]
    return sum(a * b for a, b in combinations(sizes, 2))


def cross_pair_count(parts: PartSizes) -> int:
    """Sum over i < j of n_i * n_j."""
    total = parts.n
    return (total * total - sum(size * size for size in parts.sizes)) // 2


def add_matching(g: Graph, part_block: range, q: int) -> Graph:
    """Adds q disjoint edges (block[2i], block[2i+1]) inside part_block."""
    if q < 0:
        raise ValueError(f"Matching size must be non-negative, got {q}.")
    if len(part_block) < 2 * q:
        raise BlockTooSmallError(
            f"Block of {len(part_block)} vertices cannot hold a matching of size {q}."
        )
    pairs = [(part_block[2 * i], part_block[2 * i + 1]) for i in range(q)]
    return g.add_edges(pairs)


def from_edge_list(n: int, pairs: Iterable[Edge]) -> Graph:
    return Graph.empty(n).add_edges(pairs)


def cycle(m: int) -> Graph:
    if m < 3:
        raise ValueError(f"cycle length must be >= 3, got {m}")
    return from_edge_list(m, ((i, (i + 1) % m) for i in range(m)))


def path(m: int) -> Graph:
    return from_edge_list(m, ((i, i + 1) for i in range(m - 1)))


def complete(m: int) -> Graph:
    return from_edge_list(m, combinations(range(m), 2))


def k4_minus_edge() -> Graph:
    """K4 without the edge 2-3; vertices 0 and 1 have degree 3."""
    return complete(4).remove_edge(2, 3)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def iter_vertices(mask: int) -> Iterator[int]:
    """Vertices in a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
