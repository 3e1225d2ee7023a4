"""Integer univariate polynomials in canonical form.

Coefficients are stored ascending (index = power) with no trailing
zeros; the zero polynomial is the empty tuple.  All arithmetic is
exact.  Division helpers either guarantee exactness (pseudo-division)
or verify it (``div_exact``).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator

from ..errors import InternalCheckError
from .intfactor import divisors


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        self.coeffs = tuple(cs)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def x_minus(cls, r: int) -> "IntPoly":
        return cls((-r, 1))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * power + (coeff,))

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x):
        """Evaluate by Horner; result type follows the argument."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "IntPoly") -> "IntPoly":
        """self(inner(x)) as a polynomial."""
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + IntPoly((c,))
        return acc

    # -- content and division ------------------------------------------------

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPoly(tuple(c // g for c in self.coeffs))

    def div_exact(self, divisor: "IntPoly") -> "IntPoly":
        """Exact quotient in Z[x]; raises if the division leaves anything."""
        q, r = self.divmod_frac(divisor)
        if r:
            raise InternalCheckError(f"inexact polynomial division: {self} / {divisor}")
        out = []
        for c in q:
            if c.denominator != 1:
                raise InternalCheckError(
                    f"non-integer quotient in exact division: {self} / {divisor}"
                )
            out.append(c.numerator)
        return IntPoly(out)

    def divmod_frac(
        self, divisor: "IntPoly"
    ) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """Long division over the rationals; returns (quotient, remainder)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        db = divisor.degree
        lead = Fraction(divisor.leading())
        quot = [Fraction(0)] * max(0, len(rem) - db)
        for k in range(len(rem) - db - 1, -1, -1):
            c = rem[k + db] / lead
            if c:
                quot[k] = c
                for j, dcoef in enumerate(divisor.coeffs):
                    rem[k + j] -= c * dcoef
        while rem and not rem[-1]:
            rem.pop()
        return tuple(quot), tuple(rem)

    def pseudo_rem(self, divisor: "IntPoly") -> "IntPoly":
        """Pseudo-remainder: rem of lead(divisor)^(da-db+1) * self by divisor."""
        da, db = self.degree, divisor.degree
        if da < db:
            return self
        scaled = self * (divisor.leading() ** (da - db + 1))
        _, rem = scaled.divmod_frac(divisor)
        out = []
        for c in rem:
            if c.denominator != 1:
                raise InternalCheckError("pseudo-remainder came out non-integral")
            out.append(c.numerator)
        return IntPoly(out)

    # -- rendering -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd in Z[x] via the primitive pseudo-remainder sequence."""
    a, b = a.primitive(), b.primitive()
    while b:
        a, b = b, a.pseudo_rem(b).primitive()
    return a


def squarefree_part(p: IntPoly) -> IntPoly:
    """p / gcd(p, p'), primitive with positive leading coefficient."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return p.div_exact(g).primitive()


def rational_roots(p: IntPoly) -> list[Fraction]:
    """All rational roots (without multiplicity), ascending."""
    if p.is_zero():
        raise ValueError("every rational is a root of the zero polynomial")
    coeffs = list(p.coeffs)
    shift = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    roots = set()
    if shift:
        roots.add(Fraction(0))
    q = IntPoly(coeffs)
    if q.degree >= 1:
        a0, an = abs(q.coeffs[0]), abs(q.leading())
        for num in divisors(a0):
            for den in divisors(an):
                if math.gcd(num, den) != 1:
                    continue
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if q(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def multiplicity_of_factor(p: IntPoly, factor: IntPoly) -> int:
    """Largest e with factor^e dividing p exactly."""
    count = 0
    cur = p
    while cur.degree >= factor.degree:
        q, r = cur.divmod_frac(factor)
        if r or any(c.denominator != 1 for c in q):
            break
        cur = IntPoly(tuple(c.numerator for c in q))
        count += 1
    return count
