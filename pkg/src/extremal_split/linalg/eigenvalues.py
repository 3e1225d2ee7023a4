"""Exact eigenvalue values: rationals and quadratic irrationals.

A quadratic irrational a + b*sqrt(d) is kept in the unique canonical
form with d > 1 squarefree and b != 0, so equality is syntactic.
Comparisons between distinct values are decided by interval refinement
with integer square roots; they never touch floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import InputError
from .intfactor import squarefree_decompose


class NegativeDiscriminant(InputError):
    pass


@dataclass(frozen=True)
class QuadraticIrrational:
    """a + b*sqrt(d) with rational a, b != 0 and squarefree d > 1."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        if self.b == 0:
            raise ValueError("rational value, use Fraction instead")
        if self.d < 2:
            raise ValueError("need d > 1")
        _, sf = squarefree_decompose(self.d)
        if sf != self.d:
            raise ValueError(f"{self.d} is not squarefree")

    def conjugate(self) -> "QuadraticIrrational":
        return QuadraticIrrational(self.a, -self.b, self.d)

    def approx(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self) -> str:
        b = self.b
        root = f"sqrt({self.d})"
        if abs(b) != 1:
            root = f"{abs(b)}*{root}"
        sign = "+" if b > 0 else "-"
        if self.a == 0:
            return root if b > 0 else f"-{root}"
        return f"{self.a} {sign} {root}"


EigenvalueExact = Union[Fraction, QuadraticIrrational]


def exact_value(a: Fraction, b: Fraction, d: int) -> EigenvalueExact:
    """Canonical a + b*sqrt(d), collapsing to a Fraction when possible."""
    if b == 0 or d == 0:
        return a
    if d < 0:
        raise NegativeDiscriminant("complex values are out of scope")
    s, sf = squarefree_decompose(d)
    if sf == 1:
        return a + b * s
    return QuadraticIrrational(a, b * s, sf)


def solve_quadratic(
    a: Fraction | int, b: Fraction | int, c: Fraction | int
) -> tuple[EigenvalueExact, EigenvalueExact]:
    """Exact roots of a*t^2 + b*t + c = 0, larger root first.

    Requires a != 0 and a nonnegative discriminant.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        raise InputError("not a quadratic: a = 0")
    disc = b * b - 4 * a * c
    if disc < 0:
        raise NegativeDiscriminant(f"discriminant {disc} < 0")
    # sqrt(p/q) = sqrt(p*q)/q
    inner = disc.numerator * disc.denominator
    s, sf = squarefree_decompose(inner) if inner else (0, 1)
    root_rat = Fraction(s, disc.denominator)
    base = -b / (2 * a)
    if sf == 1:
        spread = root_rat / (2 * a)
        hi, lo = base + abs(spread), base - abs(spread)
        return hi, lo
    spread = abs(root_rat / (2 * a))
    return (
        exact_value(base, spread, sf),
        exact_value(base, -spread, sf),
    )


def approx(value: EigenvalueExact) -> float:
    if isinstance(value, QuadraticIrrational):
        return value.approx()
    return float(value)


def value_str(value: EigenvalueExact) -> str:
    return str(value)


def _bounds(value: EigenvalueExact, k: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure with width shrinking as 2^-k."""
    if isinstance(value, Fraction):
        return value, value
    scale = 1 << k
    lo_root = math.isqrt(value.d * scale * scale)
    lo = Fraction(lo_root, scale)
    hi = Fraction(lo_root + 1, scale)
    if value.b > 0:
        return value.a + value.b * lo, value.a + value.b * hi
    return value.a + value.b * hi, value.a + value.b * lo


def compare(x: EigenvalueExact, y: EigenvalueExact) -> int:
    """Exact three-way comparison of eigenvalue values."""
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return (x > y) - (x < y)
    if x == y:
        return 0
    for k in range(4, 512, 8):
        xlo, xhi = _bounds(x, k)
        ylo, yhi = _bounds(y, k)
        if xlo > yhi:
            return 1
        if xhi < ylo:
            return -1
    raise ArithmeticError(f"could not separate {x} and {y}")  # pragma: no cover


def abs_compare(x: EigenvalueExact, y: EigenvalueExact) -> int:
    """Compare |x| with |y| exactly."""
    return compare(_abs(x), _abs(y))


def _abs(x: EigenvalueExact) -> EigenvalueExact:
    if compare(x, Fraction(0)) < 0:
        if isinstance(x, QuadraticIrrational):
            return QuadraticIrrational(-x.a, -x.b, x.d)
        return -x
    return x
