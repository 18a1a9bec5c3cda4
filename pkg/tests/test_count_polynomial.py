#!/usr/bin/env python3

from fractions import Fraction

import pytest

from Turan_Count.count_polynomial import (
    CountPolynomial,
    forward_differences,
    newton_forward,
    poly_add,
    poly_eval,
    poly_mul,
)
from Turan_Count.exceptions import InvariantBreachError

F = Fraction


def test_poly_arithmetic():
    assert poly_add((F(1), F(2)), (F(-1), F(-2))) == ()
    assert poly_mul((F(-1), F(1)), (F(1), F(1))) == (F(-1), F(0), F(1))
    assert poly_eval((F(1), F(0), F(2)), 3) == 19


def test_forward_differences():
    assert forward_differences([1, 4, 9, 16]) == [1, 3, 2, 0]


def test_newton_forward_recovers_quadratic():
    # n^2/8 - n/4 sampled at n = 4, 6, 8
    values = [F(n * n, 8) - F(n, 4) for n in (4, 6, 8)]
    assert newton_forward(4, 2, values) == (F(0), F(-1, 4), F(1, 8))


def test_newton_forward_half_n():
    assert newton_forward(4, 2, [2, 3]) == (F(0), F(1, 2))


def test_count_polynomial_properties():
    poly = CountPolynomial((F(0), F(1), F(-3, 4), F(1, 8)), 2)
    assert poly.degree == 3
    assert poly.alpha == F(1, 8)
    assert poly.beta == F(7, 4)
    assert poly(10) == 60
    assert str(poly) == "1/8*n^3 - 3/4*n^2 + n"


def test_count_polynomial_needs_positive_leading_coefficient():
    with pytest.raises(InvariantBreachError):
        CountPolynomial((F(1), F(-1)), 2)
    with pytest.raises(InvariantBreachError):
        CountPolynomial((), 2)
