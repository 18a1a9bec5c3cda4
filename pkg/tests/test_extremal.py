#!/usr/bin/env python3

import math
from fractions import Fraction

import pytest

from Turan_Count.coloring import require_critical
from Turan_Count.counting import count_copies
from Turan_Count.exceptions import (
    BlockTooSmallError,
    CapacityError,
    DeviationBoundError,
    DivisibilityError,
    HostTooSmallError,
)
from Turan_Count.extremal import (
    c_exact,
    c_exact_upper_reduction,
    c_multipartite,
    closed_form_for,
    closed_form_k4me,
    closed_form_odd_cycle,
    compositions,
    falling_factorial,
    fit_gamma,
    interpolate_count_polynomial,
    lemma4_violations,
    lemma5_bounds,
    lemma5_formula,
    lemma5_formula_uncorrected,
    lemma5_injection_sum,
    lemma6_gap,
    max_deviation,
    minimising_block,
    analytic_gamma_bound,
    report_rows,
    sharpness_construction,
)
from Turan_Count.graph_core import PartSizes, complete, cycle, k4_minus_edge, turan_number


@pytest.fixture(scope="module")
def patterns():
    return {
        "C3": require_critical(cycle(3)),
        "C5": require_critical(cycle(5)),
        "C7": require_critical(cycle(7)),
        "K4": require_critical(complete(4)),
        "K4-e": require_critical(k4_minus_edge()),
    }


###--- c(n, F) ---###


@pytest.mark.parametrize("n, name, expected", [(6, "C3", 3), (10, "C5", 60), (8, "K4-e", 6), (7, "C5", 12)])
def test_c_exact(patterns, n, name, expected):
    assert c_exact(n, patterns[name]) == expected


def test_triangle_counts_match_half_n(patterns):
    for n in range(4, 21):
        assert c_exact(n, patterns["C3"]) == n // 2


def test_c5_matches_closed_form(patterns):
    for n in range(6, 17):
        assert c_exact(n, patterns["C5"]) == closed_form_odd_cycle(n, 2)
    assert c_exact(12, patterns["C5"]) == 120


def test_k4_minus_edge_matches_closed_form(patterns):
    for n in range(6, 17):
        assert c_exact(n, patterns["K4-e"]) == closed_form_k4me(n)


def test_c7_matches_closed_form(patterns):
    for n in (8, *range(10, 17)):
        assert c_exact(n, patterns["C7"]) == closed_form_odd_cycle(n, 3)


def test_c7_closed_form_overcounts_at_n_9(patterns):
    # An edge in the smaller part gives (5)_3 (2)_2 = 120 < (4)_3 (3)_2 = 144.
    assert c_exact(9, patterns["C7"]) == 120
    assert closed_form_odd_cycle(9, 3) == 144


def test_padding_to_a_multiple_of_r_never_lowers_the_count(patterns):
    for name in ("C3", "C5", "K4-e"):
        pattern = patterns[name]
        for n in range(pattern.f + 1, 16):
            padded, padded_count = c_exact_upper_reduction(n, pattern)
            assert padded % pattern.r == 0
            assert n <= padded < n + pattern.r
            assert c_exact(n, pattern) <= padded_count, (name, n)
    assert c_exact_upper_reduction(7, patterns["C5"]) == (8, 24)


def test_minimising_block_uses_larger_part_for_triangles(patterns):
    count, block = minimising_block(7, patterns["C3"])
    assert count == 3
    assert len(block) == 4


def test_c_exact_host_too_small(patterns):
    with pytest.raises(HostTooSmallError):
        c_exact(4, patterns["C5"])


@pytest.mark.parametrize("sizes, expected", [((5, 5), 60), ((4, 6), 60), ((6, 4), 48)])
def test_c_multipartite(patterns, sizes, expected):
    assert c_multipartite(PartSizes(sizes), patterns["C5"]) == expected


def test_c_multipartite_first_part_too_small(patterns):
    with pytest.raises(BlockTooSmallError):
        c_multipartite(PartSizes((1, 9)), patterns["C5"])


###--- closed forms ---###


@pytest.mark.parametrize("n, k, expected", [(10, 2, 60), (7, 2, 12), (6, 1, 3)])
def test_closed_form_odd_cycle(n, k, expected):
    assert closed_form_odd_cycle(n, k) == expected


@pytest.mark.parametrize("n, expected", [(8, 6), (9, 6), (4, 1)])
def test_closed_form_k4me(n, expected):
    assert closed_form_k4me(n) == expected


@pytest.mark.parametrize(
    "name, n, expected", [("C5", 10, 60), ("C3", 9, 4), ("K4-e", 8, 6), ("K4", 9, None), ("Petersen", 10, None)]
)
def test_closed_form_for(name, n, expected):
    assert closed_form_for(name, n) == expected


def test_falling_factorial():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(5, 0) == 1


###--- colouring formula ---###


def test_formula_matches_direct_counts(patterns):
    for name, pattern in patterns.items():
        ns = range(8, 21, 4) if name == "C7" else range(pattern.f, 21)
        for n in ns:
            if n % pattern.r == 0:
                assert lemma5_formula(n, pattern) == c_exact(n, pattern), (name, n)


@pytest.mark.parametrize("n, name, expected", [(10, "C5", 60), (8, "K4-e", 6), (6, "C3", 3), (9, "K4", 9)])
def test_lemma5_formula_examples(patterns, n, name, expected):
    assert lemma5_formula(n, patterns[name]) == expected


def test_lemma5_formula_needs_divisibility(patterns):
    with pytest.raises(DivisibilityError):
        lemma5_formula(9, patterns["C5"])


def test_uncorrected_prefactor_differs(patterns):
    pattern = patterns["C5"]
    assert lemma5_injection_sum(10, pattern) == 600
    assert lemma5_formula_uncorrected(10, pattern) == Fraction(600, 2**25)
    assert lemma5_formula_uncorrected(10, pattern) != lemma5_formula(10, pattern)


###--- count polynomial ---###


def test_c5_polynomial(patterns):
    pattern = patterns["C5"]
    poly = interpolate_count_polynomial(pattern)
    assert poly.degree == 3
    assert poly.alpha == Fraction(1, 8)
    assert poly.valid_modulus == 2
    assert poly(18) == c_exact(18, pattern)


def test_triangle_polynomial(patterns):
    poly = interpolate_count_polynomial(patterns["C3"])
    assert poly.coeffs == (Fraction(0), Fraction(1, 2))


def test_k4_minus_edge_polynomial(patterns):
    poly = interpolate_count_polynomial(patterns["K4-e"])
    assert poly.coeffs == (Fraction(0), Fraction(-1, 4), Fraction(1, 8))


def test_k4_polynomial(patterns):
    poly = interpolate_count_polynomial(patterns["K4"])
    assert poly.alpha == Fraction(1, 9)
    assert poly.beta == 0


def test_polynomial_with_explicit_base(patterns):
    poly = interpolate_count_polynomial(patterns["C5"], base_n=8)
    assert poly == interpolate_count_polynomial(patterns["C5"])


@pytest.mark.parametrize("base_n, error", [(7, DivisibilityError), (4, HostTooSmallError), (60, CapacityError)])
def test_polynomial_bad_base(patterns, base_n, error):
    with pytest.raises(error):
        interpolate_count_polynomial(patterns["C5"], base_n=base_n)


def test_polynomial_bounds(patterns):
    for name in ("C3", "C5", "K4-e"):
        pattern = patterns[name]
        poly = interpolate_count_polynomial(pattern)
        for n in range(pattern.f, 25):
            if n % pattern.r:
                continue
            close, sandwich = lemma5_bounds(poly, n, c_exact(n, pattern))
            assert close, (name, n)
            if n >= 4 * pattern.f:
                assert sandwich, (name, n)


###--- sharpness ---###


def test_sharpness_c5():
    pattern = require_critical(cycle(5))
    host, report = sharpness_construction(12, pattern, 3)
    assert host.m == turan_number(12, 2) + 3 == report.edges
    assert report.total_copies == 360
    assert report.excess == 0


def test_sharpness_triangle():
    _, report = sharpness_construction(12, require_critical(cycle(3)), 2)
    assert report.total_copies == 12
    assert report.excess == 0


def test_odd_cycles_have_zero_excess():
    for k in (1, 2):
        pattern = require_critical(cycle(2 * k + 1))
        for n in (10, 12, 14):
            _, block = minimising_block(n, pattern)
            for q in (1, 2, 3):
                if 2 * q > len(block):
                    continue
                _, report = sharpness_construction(n, pattern, q)
                assert report.total_copies == q * c_exact(n, pattern)
                assert report.excess == 0


def test_k4_minus_edge_excess_is_bounded(patterns):
    pattern = patterns["K4-e"]
    for n in range(10, 17):
        _, block = minimising_block(n, pattern)
        for q in (1, 2, 3):
            if 2 * q > len(block):
                continue
            host, report = sharpness_construction(n, pattern, q)
            assert report.excess == count_copies(pattern.graph, host).copies - q * c_exact(n, pattern)
            assert report.excess >= 0
            assert Fraction(report.excess, q * q * n ** (pattern.f - 4)) <= 10


def test_sharpness_block_too_small(patterns):
    with pytest.raises(BlockTooSmallError):
        sharpness_construction(10, patterns["C5"], 3)


###--- multipartite deficits ---###


@pytest.mark.parametrize(
    "sizes, expected", [((5, 5), (60, 60, 0)), ((4, 6), (60, 60, 1)), ((6, 4), (48, 60, 1))]
)
def test_lemma6_gap(patterns, sizes, expected):
    assert tuple(lemma6_gap(PartSizes(sizes), patterns["C5"])) == expected


def test_lemma6_gap_deviation_bound(patterns):
    with pytest.raises(DeviationBoundError):
        lemma6_gap(PartSizes((2, 8)), patterns["C5"])


def test_fit_gamma_against_bound(patterns):
    pattern = patterns["C5"]
    cases = [(PartSizes(sizes), lemma6_gap(PartSizes(sizes), pattern)) for sizes in ((5, 5), (4, 6), (6, 4))]
    gamma = fit_gamma(cases, pattern.f)
    assert gamma == Fraction(12, 100)
    assert gamma <= analytic_gamma_bound(interpolate_count_polynomial(pattern), pattern)


@pytest.mark.parametrize("sizes, s", [((5, 5), 0), ((4, 6), 1), ((2, 8), 3), ((3, 3, 3), 0), ((2, 3, 4), 1)])
def test_max_deviation(sizes, s):
    assert max_deviation(PartSizes(sizes)) == s


###--- part-size windows ---###


def test_compositions():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert sum(1 for _ in compositions(6, 3)) == math.comb(8, 2)


def test_lemma4_has_no_violations():
    assert lemma4_violations(24, (2, 3), range(4)) == []


###--- report rows ---###


def test_report_rows(patterns):
    rows = report_rows(patterns["C5"], "C5", range(4, 11))
    assert [row.n for row in rows] == [5, 6, 7, 8, 9, 10]
    assert rows[-1].c_exact == rows[-1].formula == rows[-1].closed_form == 60
    assert rows[0].formula is None
    assert all(row.alpha == Fraction(1, 8) for row in rows)
