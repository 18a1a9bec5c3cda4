#! /usr/bin/env python3
"""
Module for c(n, F), the fewest copies of an r-critical F created by adding one
edge to the Turán graph T_r(n), and everything computed around it.

- c_exact / c_multipartite: direct counts in T_r(n) or K(n_1..n_r) plus one
  edge inside a part.
- lemma5_formula: the sum over good edges and constrained colourings,
  normalised by |Aut(F)|.
- interpolate_count_polynomial: c(n, F) as an exact polynomial on r | n.
- closed forms for odd cycles and K4 minus an edge.
- sharpness_construction: T_r(n) plus a q-matching inside one part.
- lemma6_gap / fit_gamma: multipartite deficit against c(n, F).
- lemma4_violations: exhaustive scan of part-size windows.
"""

import logging
import math
from collections.abc import Iterable, Iterator
from fractions import Fraction
from typing import NamedTuple

from .coloring import CriticalPattern, class_profile, enumerate_constrained_colorings
from .count_polynomial import CountPolynomial, forward_differences, newton_forward
from .counting import copies_through_edge, count_copies
from .exceptions import (
    BlockTooSmallError,
    CapacityError,
    DeviationBoundError,
    DivisibilityError,
    HostTooSmallError,
    InvariantBreachError,
)
from .graph_core import (
    MAX_VERTICES,
    Graph,
    PartSizes,
    add_matching,
    complete_multipartite,
    cross_pair_count,
    turan_number,
    turan_part_sizes,
)
from .parallel import run_tasks

logger = logging.getLogger(__name__)


class SharpnessReport(NamedTuple):
    n: int
    q: int
    edges: int
    total_copies: int
    bound: int
    excess: int


class MultipartiteGap(NamedTuple):
    multipartite: int
    c_n: int
    s: int


class ExtremalRow(NamedTuple):
    n: int
    pattern: str
    c_exact: int
    formula: int | None
    closed_form: int | None
    alpha: Fraction


def _check_host_order(n: int, pattern: CriticalPattern) -> None:
    if n < pattern.f:
        raise HostTooSmallError(f"n={n} is below the pattern order f={pattern.f}.")
    if n > MAX_VERTICES:
        raise CapacityError(f"n={n} exceeds the vertex limit {MAX_VERTICES}.")


def _copies_with_edge_in_block(parts: PartSizes, block: range, pattern: CriticalPattern) -> int:
    """Copies in K(parts) plus the edge (block[0], block[1]).

    K(parts) is r-partite and so F-free; every copy uses the added edge.
    """
    host = add_matching(complete_multipartite(parts), block, 1)
    return copies_through_edge(pattern, host, (block[0], block[1]))


def minimising_block(n: int, pattern: CriticalPattern) -> tuple[int, range]:
    """
    (c(n, F), a Turán part achieving it).

    Pairs inside one part are all equivalent under the automorphisms of T_r(n),
    so only the first ceiling part and the first floor part are tried; ties
    keep the ceiling part.
    """
    _check_host_order(n, pattern)
    parts = turan_part_sizes(n, pattern.r)
    best: tuple[int, range] | None = None
    seen: set[int] = set()
    for size, block in zip(parts.sizes, parts.blocks()):
        if size < 2 or size in seen:
            continue
        seen.add(size)
        count = _copies_with_edge_in_block(parts, block, pattern)
        logger.debug(f"c({n}) candidate with edge in a part of size {size}: {count}")
        if best is None or count < best[0]:
            best = (count, block)
    if best is None:
        raise HostTooSmallError(f"No part of T_{pattern.r}({n}) can hold an edge.")
    return best


def c_exact(n: int, pattern: CriticalPattern) -> int:
    return minimising_block(n, pattern)[0]


def c_exact_upper_reduction(n: int, pattern: CriticalPattern) -> tuple[int, int]:
    """
    Pads n up to the next multiple of r and returns (n', c(n', F)).

    c(n, F) never exceeds c(n', F), which is what lets the colouring formula
    bound every n from above.
    """
    padded = -(-n // pattern.r) * pattern.r
    return padded, c_exact(padded, pattern)


def c_multipartite(parts: PartSizes, pattern: CriticalPattern) -> int:
    """c(n_1, ..., n_r, F): copies in K(n_1..n_r) plus one edge inside the first part."""
    if parts.r != pattern.r:
        raise ValueError(f"Expected {pattern.r} parts, got {parts.r}.")
    _check_host_order(parts.n, pattern)
    if parts.sizes[0] < 2:
        raise BlockTooSmallError(f"First part has {parts.sizes[0]} vertices, need 2.")
    return _copies_with_edge_in_block(parts, parts.blocks()[0], pattern)


def falling_factorial(x: int, k: int) -> int:
    """(x)_k = x (x-1) ... (x-k+1)."""
    return math.prod(x - i for i in range(k))


def lemma5_injection_sum(n: int, pattern: CriticalPattern) -> int:
    """
    Σ over good uv, Σ over proper r-colourings of F - uv with u, v in colour 1,
    of 2 (n/r - 2)_{x^1} Π_{i>=2} (n/r)_{x^i}.

    This counts the edge-preserving injections of F into T_r(n) plus one edge
    inside a part.
    """
    r = pattern.r
    if n % r:
        raise DivisibilityError(f"r={r} does not divide n={n}.")
    part = n // r
    if part < 2:
        raise BlockTooSmallError(f"Parts of size {part} cannot hold an edge.")
    total = 0
    for u, v in pattern.good_edges:
        reduced = pattern.graph.remove_edge(u, v)
        for coloring in enumerate_constrained_colorings(reduced, r, {u: 1, v: 1}):
            x = class_profile(coloring, u, v, r).counts
            term = 2 * falling_factorial(part - 2, x[0])
            for count in x[1:]:
                term *= falling_factorial(part, count)
            total += term
    return total


def lemma5_formula(n: int, pattern: CriticalPattern) -> int:
    """The good-edge colouring sum divided by |Aut(F)|; equals c(n, F) when r | n."""
    total = lemma5_injection_sum(n, pattern)
    copies, remainder = divmod(total, pattern.aut)
    if remainder:
        raise InvariantBreachError(
            f"Colouring sum {total} at n={n} is not divisible by |Aut(F)|={pattern.aut}."
        )
    return copies


def lemma5_formula_uncorrected(n: int, pattern: CriticalPattern) -> Fraction:
    """The same sum with the 1/2^(f^2) prefactor; reported, never asserted."""
    return Fraction(lemma5_injection_sum(n, pattern), 2 ** (pattern.f**2))


def default_base_n(pattern: CriticalPattern) -> int:
    """Smallest multiple of r that is at least f."""
    r = pattern.r
    return -(-pattern.f // r) * r


def _c_exact_task(task: tuple[int, CriticalPattern]) -> int:
    return c_exact(*task)


def interpolate_count_polynomial(
    pattern: CriticalPattern, base_n: int | None = None, workers: int = 1
) -> CountPolynomial:
    """
    Interpolates c(n, F) through n = base_n, base_n + r, ..., base_n + (f-2) r.

    One extra sample is taken when it fits in 64 vertices and its difference of
    order f - 1 must vanish.
    """
    r = pattern.r
    base = default_base_n(pattern) if base_n is None else base_n
    if base % r:
        raise DivisibilityError(f"r={r} does not divide base n={base}.")
    if base < pattern.f:
        raise HostTooSmallError(f"base n={base} is below f={pattern.f}.")
    count = pattern.f - 1
    if base + (count - 1) * r > MAX_VERTICES:
        raise CapacityError(
            f"Samples up to n={base + (count - 1) * r} exceed {MAX_VERTICES} vertices."
        )
    if base + count * r <= MAX_VERTICES:
        count += 1
    ns = [base + i * r for i in range(count)]
    values = run_tasks(_c_exact_task, [(n, pattern) for n in ns], workers)
    differences = forward_differences(values)
    if len(differences) > pattern.f - 1 and any(differences[pattern.f - 1:]):
        raise InvariantBreachError(
            f"c(n, F) samples {values} are not a polynomial of degree {pattern.f - 2}."
        )
    poly = CountPolynomial(newton_forward(base, r, values[: pattern.f - 1]), r)
    if poly.degree != pattern.f - 2:
        raise InvariantBreachError(
            f"Interpolated degree {poly.degree}, expected {pattern.f - 2}."
        )
    return poly


def lemma5_bounds(poly: CountPolynomial, n: int, c_n: int) -> tuple[bool, bool]:
    """
    (|c - α n^(f-2)| <= β n^(f-3),  (α/2) n^(f-2) < c < 2 α n^(f-2)).

    The first check is non-strict because β is the exact sum of the
    non-leading coefficients and is attained when only the n^(f-3) term is
    non-zero.
    """
    d = poly.degree
    leading = poly.alpha * n**d
    close = abs(c_n - leading) <= poly.beta * Fraction(n) ** (d - 1)
    sandwich = leading / 2 < c_n < 2 * leading
    return close, sandwich


def closed_form_odd_cycle(n: int, k: int) -> int:
    """c(n, C_{2k+1}) = ⌊n/2⌋(⌊n/2⌋-1)…(⌊n/2⌋-k+1) · (⌈n/2⌉-2)…(⌈n/2⌉-k)."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    low, high = n // 2, -(-n // 2)
    return falling_factorial(low, k) * math.prod(high - j for j in range(2, k + 1))


def closed_form_k4me(n: int) -> int:
    """c(n, K4 - e) = C(⌊n/2⌋, 2)."""
    return math.comb(n // 2, 2)


def sharpness_construction(
    n: int, pattern: CriticalPattern, q: int
) -> tuple[Graph, SharpnessReport]:
    """T_r(n) plus a q-matching inside the part that attains c(n, F)."""
    c_n, block = minimising_block(n, pattern)
    parts = turan_part_sizes(n, pattern.r)
    host = add_matching(complete_multipartite(parts), block, q)
    total = count_copies(pattern.graph, host).copies
    report = SharpnessReport(n, q, host.m, total, q * c_n, total - q * c_n)
    if host.m != turan_number(n, pattern.r) + q:
        raise InvariantBreachError(f"Construction has {host.m} edges.")
    return host, report


def max_deviation(parts: PartSizes) -> int:
    """Smallest s with ⌊n/r⌋ - s <= n_i <= ⌈n/r⌉ + s for every part."""
    low, high = parts.n // parts.r, -(-parts.n // parts.r)
    return max(max(low - size, size - high, 0) for size in parts.sizes)


def lemma6_gap(parts: PartSizes, pattern: CriticalPattern) -> MultipartiteGap:
    """(c(n_1..n_r, F), c(n, F), s) for s the deviation of the parts from n/r."""
    s = max_deviation(parts)
    if 3 * parts.r * s >= parts.n:
        raise DeviationBoundError(
            f"Deviation s={s} is not below n/(3r) for parts {parts.sizes}."
        )
    return MultipartiteGap(c_multipartite(parts, pattern), c_exact(parts.n, pattern), s)


def fit_gamma(gaps: Iterable[tuple[PartSizes, MultipartiteGap]], f: int) -> Fraction:
    """Smallest γ >= 0 with c(n_1..n_r) >= c(n) - γ s n^(f-3) on every given case."""
    gamma = Fraction(0)
    for parts, gap in gaps:
        if gap.s == 0:
            continue
        deficit = gap.c_n - gap.multipartite
        gamma = max(gamma, Fraction(deficit, gap.s * parts.n ** (f - 3)))
    return gamma


def analytic_gamma_bound(poly: CountPolynomial, pattern: CriticalPattern) -> Fraction:
    """α 2^f r + 2β, the constant the multipartite estimate is proved with."""
    return poly.alpha * 2**pattern.f * pattern.r + 2 * poly.beta


def compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """All ordered r-tuples of non-negative integers summing to n."""
    if r == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, r - 1):
            yield (first,) + rest


def lemma4_violations(
    n_max: int, rs: Iterable[int] = (2, 3), s_values: Iterable[int] = (0, 1, 2, 3)
) -> list[tuple[int, int, tuple[int, ...]]]:
    """
    (s, r, sizes) for every composition whose cross count is at least t_r(n) - s
    but whose sizes leave the window ⌊n/r⌋ - s .. ⌈n/r⌉ + s.
    """
    violations: list[tuple[int, int, tuple[int, ...]]] = []
    s_values = tuple(s_values)
    for r in rs:
        for n in range(n_max + 1):
            t = turan_number(n, r)
            for sizes in compositions(n, r):
                parts = PartSizes(sizes)
                cross = cross_pair_count(parts)
                deviation = max_deviation(parts)
                for s in s_values:
                    if cross >= t - s and deviation > s:
                        violations.append((s, r, sizes))
    if violations:
        logger.warning(f"{len(violations)} part-size window violations found")
    return violations


def closed_form_for(name: str, n: int) -> int | None:
    """Closed form for patterns named C<odd> or K4-e, None for anything else."""
    if name == "K4-e":
        return closed_form_k4me(n)
    if name.startswith("C") and name[1:].isdigit() and int(name[1:]) % 2:
        return closed_form_odd_cycle(n, int(name[1:]) // 2)
    return None


def report_rows(
    pattern: CriticalPattern, name: str, ns: Iterable[int], workers: int = 1
) -> list[ExtremalRow]:
    """Rows (n, F, c_exact, formula, closed_form, alpha) for the report command."""
    ns = [n for n in ns if n >= pattern.f]
    poly = interpolate_count_polynomial(pattern, workers=workers)
    values = run_tasks(_c_exact_task, [(n, pattern) for n in ns], workers)
    rows: list[ExtremalRow] = []
    for n, value in zip(ns, values):
        formula = lemma5_formula(n, pattern) if n % pattern.r == 0 else None
        rows.append(ExtremalRow(n, name, value, formula, closed_form_for(name, n), poly.alpha))
    return rows
