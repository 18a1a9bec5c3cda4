#! /usr/bin/env python3
"""
Module for the partition bookkeeping of a host graph against the Turán bound.

Given a host H and an r-partition V_1..V_r:
- B (bad): edges of H inside a part.
- G (good): edges of H between parts.
- M (missing): pairs between parts that are not edges of H.
with q = |H| - t_r(n) and s = t_r(n) - |G|.

The partition is a best-found maximiser of the cross edge count: exhaustive
for r = 2 and n <= 16, seeded multi-restart local search otherwise.
"""

import logging
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from .coloring import CriticalPattern
from .counting import copies_through_edge, copies_through_vertex, count_copies
from .exceptions import HostTooSmallError, InvariantBreachError
from .extremal import c_exact
from .graph_core import Edge, Graph, PartSizes, iter_vertices, turan_number
from .parallel import run_tasks

logger = logging.getLogger(__name__)

DEFAULT_RESTARTS: int = 32
DEFAULT_EPSILON: Fraction = Fraction(1, 10)
EXHAUSTIVE_MAX_N: int = 16


@dataclass(frozen=True, slots=True)
class Partition:
    assignment: tuple[int, ...]
    r: int
    source: str = "local-search"

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"Partition needs r >= 2, got {self.r}.")
        if any(not 0 <= c < self.r for c in self.assignment):
            raise ValueError(f"Class index outside 0..{self.r - 1}: {self.assignment}.")

    @property
    def sizes(self) -> PartSizes:
        counts = [0] * self.r
        for c in self.assignment:
            counts[c] += 1
        return PartSizes(tuple(counts))

    def class_masks(self) -> list[int]:
        masks = [0] * self.r
        for v, c in enumerate(self.assignment):
            masks[c] |= 1 << v
        return masks


@dataclass(frozen=True, slots=True)
class Decomposition:
    bad: tuple[Edge, ...]
    good: tuple[Edge, ...]
    missing: tuple[Edge, ...]
    q: int
    s: int


def cross_edge_count(host: Graph, assignment: tuple[int, ...] | list[int]) -> int:
    return sum(1 for u, v in host.edges() if assignment[u] != assignment[v])


def _move_gain(host: Graph, masks: list[int], v: int, target: int, current: int) -> int:
    return (host.adj[v] & masks[current]).bit_count() - (host.adj[v] & masks[target]).bit_count()


def _best_move(host: Graph, assignment: list[int], masks: list[int]) -> tuple[int, int, int]:
    """(gain, vertex, class) of the best single-vertex move; lowest vertex then class on ties."""
    best = (0, -1, -1)
    for v in range(host.n):
        current = assignment[v]
        for target in range(len(masks)):
            if target == current:
                continue
            gain = _move_gain(host, masks, v, target, current)
            if gain > best[0]:
                best = (gain, v, target)
    return best


def _local_search(task: tuple[Graph, int, int]) -> tuple[int, tuple[int, ...]]:
    host, r, seed = task
    rng = random.Random(seed)
    assignment = [rng.randrange(r) for _ in range(host.n)]
    masks = [0] * r
    for v, c in enumerate(assignment):
        masks[c] |= 1 << v
    while True:
        gain, v, target = _best_move(host, assignment, masks)
        if gain <= 0:
            break
        masks[assignment[v]] &= ~(1 << v)
        masks[target] |= 1 << v
        assignment[v] = target
    return cross_edge_count(host, assignment), tuple(assignment)


def max_r_partition(
    host: Graph,
    r: int,
    seed: int = 0,
    restarts: int = DEFAULT_RESTARTS,
    workers: int = 1,
) -> Partition:
    """
    Best local optimum of the cross edge count over seeded restarts.

    Restart i starts from a random assignment drawn with seed * restarts + i;
    the best restart wins, the lowest restart index on ties.
    """
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}.")
    tasks = [(host, r, seed * restarts + i) for i in range(restarts)]
    results = run_tasks(_local_search, tasks, workers)
    best_cross, best_assignment = results[0]
    for cross, assignment in results[1:]:
        if cross > best_cross:
            best_cross, best_assignment = cross, assignment
    partition = Partition(best_assignment, r, "local-search")
    if not is_local_optimum(host, partition):
        raise InvariantBreachError("Local search ended outside a local optimum.")
    return partition


def is_local_optimum(host: Graph, partition: Partition) -> bool:
    """True when no single-vertex move increases the cross edge count."""
    masks = partition.class_masks()
    return _best_move(host, list(partition.assignment), masks)[0] <= 0


def exhaustive_max_cut(host: Graph) -> Partition:
    """Maximum bipartition by scanning all 2^(n-1) cuts with vertex n-1 fixed in class 0."""
    if host.n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"Exhaustive max cut is limited to n <= {EXHAUSTIVE_MAX_N}.")
    full = (1 << host.n) - 1
    best_cut, best_side = -1, 0
    for side in range(1 << max(host.n - 1, 0)):
        cut = sum((host.adj[v] & full & ~side).bit_count() for v in iter_vertices(side))
        if cut > best_cut:
            best_cut, best_side = cut, side
    assignment = tuple(1 if best_side >> v & 1 else 0 for v in range(host.n))
    return Partition(assignment, 2, "exhaustive")


def best_partition(
    host: Graph, r: int, seed: int = 0, restarts: int = DEFAULT_RESTARTS, workers: int = 1
) -> Partition:
    """Exhaustive cut for r = 2 and small n, local search otherwise."""
    if r == 2 and host.n <= EXHAUSTIVE_MAX_N:
        return exhaustive_max_cut(host)
    return max_r_partition(host, r, seed, restarts, workers)


def decompose(host: Graph, partition: Partition) -> Decomposition:
    if len(partition.assignment) != host.n:
        raise ValueError(
            f"Partition covers {len(partition.assignment)} vertices, host has {host.n}."
        )
    a = partition.assignment
    bad: list[Edge] = []
    good: list[Edge] = []
    missing: list[Edge] = []
    for u in range(host.n):
        for v in range(u + 1, host.n):
            edge = bool(host.adj[u] >> v & 1)
            if a[u] == a[v]:
                if edge:
                    bad.append((u, v))
            elif edge:
                good.append((u, v))
            else:
                missing.append((u, v))
    t = turan_number(host.n, partition.r)
    return Decomposition(tuple(bad), tuple(good), tuple(missing), host.m - t, t - len(good))


def _exceeds_fraction(value: int, epsilon: Fraction, c_n: int, strict: bool) -> bool:
    """value > (1 - ε) c_n, or >= when strict is False, compared exactly."""
    threshold = (1 - epsilon) * c_n
    return value > threshold if strict else value >= threshold


def classify_bad_edges(
    host: Graph,
    partition: Partition,
    pattern: CriticalPattern,
    epsilon: Fraction = DEFAULT_EPSILON,
) -> tuple[tuple[Edge, ...], tuple[Edge, ...]]:
    """(B_1, B_2): bad edges with F(e) > (1 - ε) c(n, F), and the rest."""
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}.")
    bad = decompose(host, partition).bad
    if not bad:
        return (), ()
    c_n = c_exact(host.n, pattern)
    b1: list[Edge] = []
    b2: list[Edge] = []
    for e in bad:
        heavy = _exceeds_fraction(copies_through_edge(pattern, host, e), epsilon, c_n, True)
        (b1 if heavy else b2).append(e)
    return tuple(b1), tuple(b2)


def heavy_missing_vertices(decomposition: Decomposition, n: int, threshold: Fraction) -> list[int]:
    """Vertices whose missing-pair degree d_M(v) exceeds threshold.

    The audit passes threshold = epsilon * n.
    """
    degree = [0] * n
    for u, v in decomposition.missing:
        degree[u] += 1
        degree[v] += 1
    return [v for v in range(n) if degree[v] > threshold]


def in_lemma4_window(sizes: PartSizes, s: int) -> bool:
    low, high = sizes.n // sizes.r, -(-sizes.n // sizes.r)
    return all(low - s <= size <= high + s for size in sizes.sizes)


@dataclass(slots=True)
class AuditReport:
    n: int
    r: int
    q: int
    s: int
    copies: int
    bound: int
    passed: bool
    max_vertex_copies: int
    rich_edges: int
    partition_source: str
    epsilon: Fraction = DEFAULT_EPSILON
    c_n: int = 0
    below_turan_threshold: bool = False
    bad_edges: int = 0
    missing_pairs: int = 0
    missing_within_s: bool = True
    turan_on_partition: bool = False
    parts_in_window: bool = True
    heavy_bad_edges: int = 0
    heavy_share_holds: bool = True
    heavy_missing_vertices: list[int] = field(default_factory=list)
    distribution_holds: bool = True
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict[str, Any]:
        """Stable key order: the core audit keys first, then the bookkeeping extras."""
        data = asdict(self)
        data["pass"] = data.pop("passed")
        data["epsilon"] = str(self.epsilon)
        core = ["n", "r", "q", "s", "copies", "bound", "pass", "max_vertex_copies",
                "rich_edges", "partition_source"]
        return {key: data[key] for key in core} | {
            key: value for key, value in data.items() if key not in core
        }


def audit_theorem(
    host: Graph,
    pattern: CriticalPattern,
    epsilon: Fraction = DEFAULT_EPSILON,
    seed: int = 0,
    restarts: int = DEFAULT_RESTARTS,
    workers: int = 1,
) -> AuditReport:
    """
    Checks #F >= q c(n, F) on one host and records the partition bookkeeping.

    Report-only: the bound is proved for n sufficiently large, so a failure at
    small n is a finding, not an error.
    """
    n, r = host.n, pattern.r
    try:
        c_n = c_exact(n, pattern)
    except HostTooSmallError:
        c_n = 0
    q = host.m - turan_number(n, r)
    copies = count_copies(pattern.graph, host, workers).copies
    bound = max(q, 0) * c_n
    partition = best_partition(host, r, seed, restarts, workers)
    decomposition = decompose(host, partition)
    vertex_counts = [copies_through_vertex(pattern, host, v) for v in range(n)]
    edge_counts = {e: copies_through_edge(pattern, host, e) for e in host.edges()}
    rich = sum(1 for value in edge_counts.values() if _exceeds_fraction(value, epsilon, c_n, False))
    heavy_bad = sum(
        1 for e in decomposition.bad if _exceeds_fraction(edge_counts[e], epsilon, c_n, True)
    )
    max_vertex_copies = max(vertex_counts, default=0)
    report = AuditReport(
        n=n,
        r=r,
        q=q,
        s=decomposition.s,
        copies=copies,
        bound=bound,
        passed=copies >= bound,
        max_vertex_copies=max_vertex_copies,
        rich_edges=rich,
        partition_source=partition.source,
        epsilon=epsilon,
        c_n=c_n,
        below_turan_threshold=q <= 0,
        bad_edges=len(decomposition.bad),
        missing_pairs=len(decomposition.missing),
        missing_within_s=len(decomposition.missing) <= decomposition.s,
        turan_on_partition=decomposition.s == 0 and not decomposition.missing,
        parts_in_window=in_lemma4_window(partition.sizes, max(decomposition.s, 0)),
        heavy_bad_edges=heavy_bad,
        heavy_share_holds=heavy_bad >= (1 - epsilon) * len(decomposition.bad),
        heavy_missing_vertices=heavy_missing_vertices(decomposition, n, epsilon * n),
        distribution_holds=q <= 0
        or max_vertex_copies >= q * c_n
        or rich >= (1 - epsilon) * q,
    )
    if q <= 0:
        report.notes.append("below Turán threshold")
    elif not report.passed:
        report.notes.append("below q*c(n,F): n may be under the theorem's threshold")
        logger.warning(f"Audit finding: {copies} copies below the bound {bound} at n={n}")
    return report
