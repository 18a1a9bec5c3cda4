#! /usr/bin/env python3
"""
Exact polynomials in n with rational coefficients.

Coefficients are stored lowest degree first. Everything here uses Fraction;
there is no floating point.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import InvariantBreachError

Coefficients = tuple[Fraction, ...]


def _trim(coeffs: Sequence[Fraction]) -> Coefficients:
    trimmed = list(coeffs)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    return tuple(trimmed)


def poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Coefficients:
    width = max(len(a), len(b))
    return _trim(
        [
            (a[i] if i < len(a) else Fraction(0)) + (b[i] if i < len(b) else Fraction(0))
            for i in range(width)
        ]
    )


def poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Coefficients:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_eval(coeffs: Sequence[Fraction], x: Fraction | int) -> Fraction:
    """Horner evaluation."""
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def forward_differences(values: Sequence[int | Fraction]) -> list[Fraction]:
    """Leading entries y0, Δy0, Δ²y0, ... of the difference table."""
    row = [Fraction(v) for v in values]
    leading: list[Fraction] = []
    while row:
        leading.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return leading


def newton_forward(base: int, step: int, values: Sequence[int | Fraction]) -> Coefficients:
    """
    Monomial coefficients in n of the interpolant through (base + i*step, values[i]).

    Uses p(n) = Σ_k Δ^k y0 · C(t, k) with t = (n - base) / step.
    """
    leading = forward_differences(values)
    result: Coefficients = ()
    basis: Coefficients = (Fraction(1),)
    for k, delta in enumerate(leading):
        if delta:
            result = poly_add(result, poly_mul(basis, (delta,)))
        # C(t, k+1) = C(t, k) · (t - k) / (k + 1), with t - k = (n - base - k*step) / step
        factor = (Fraction(-(base + k * step), step * (k + 1)), Fraction(1, step * (k + 1)))
        basis = poly_mul(basis, factor)
    return result


@dataclass(frozen=True, slots=True)
class CountPolynomial:
    """c(n, F) as an exact polynomial on the progression n ≡ 0 mod valid_modulus."""

    coeffs: Coefficients
    valid_modulus: int

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[-1] <= 0:
            raise InvariantBreachError(
                f"Count polynomial must have a positive leading coefficient: {self.coeffs}"
            )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def alpha(self) -> Fraction:
        return self.coeffs[-1]

    @property
    def beta(self) -> Fraction:
        """Sum of the absolute values of the non-leading coefficients."""
        return sum((abs(c) for c in self.coeffs[:-1]), Fraction(0))

    def __call__(self, n: int | Fraction) -> Fraction:
        return poly_eval(self.coeffs, n)

    def __str__(self) -> str:
        terms: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = "n" if power == 1 else f"n^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            terms.append(f"{sign} {body}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]
