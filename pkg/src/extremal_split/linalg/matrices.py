"""Arbitrary-precision integer matrices and the exact operations on them.

The heavy loops (multiplication, fraction-free elimination, the
division-free characteristic polynomial) are delegated to the kernel
backend; everything here is orchestration, validation and the exact
rational solves that sit on top.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import InputError, InternalCheckError
from . import kernel
from .polynomials import IntPoly

DEFAULT_MAX_N = 400


class NotSquare(InputError):
    pass


class NotSymmetric(InputError):
    pass


class MatrixTooLarge(InputError):
    pass


def max_matrix_size() -> int:
    """Size cap for spectral operations (EXTREMAL_SPLIT_MAX_N, default 400)."""
    raw = os.environ.get("EXTREMAL_SPLIT_MAX_N")
    if not raw:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"EXTREMAL_SPLIT_MAX_N is not an integer: {raw!r}")


def _check_cap(n: int, what: str) -> None:
    cap = max_matrix_size()
    if n > cap:
        raise MatrixTooLarge(f"{what}: size {n} exceeds cap {cap}")


class IntMatrix:
    """Immutable rectangular matrix of Python ints."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Sequence[int]]):
        rs = tuple(tuple(r) for r in rows)
        if not rs or not rs[0]:
            raise InputError("matrix needs at least one row and one column")
        width = len(rs[0])
        for r in rs:
            if len(r) != width:
                raise InputError("ragged rows")
            for x in r:
                if not isinstance(x, int):
                    raise InputError(f"integer entry expected, got {x!r}")
        self.rows = rs

    # -- constructors ----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nr: int, nc: int | None = None) -> "IntMatrix":
        nc = nr if nc is None else nc
        return cls([[0] * nc for _ in range(nr)])

    @classmethod
    def ones(cls, nr: int, nc: int | None = None) -> "IntMatrix":
        nc = nr if nc is None else nc
        return cls([[1] * nc for _ in range(nr)])

    # -- shape and access --------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({self.nrows}x{self.ncols})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)

    def tolists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            [
                [x + y for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            [
                [x - y for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __mul__(self, other: "IntMatrix | int") -> "IntMatrix":
        if isinstance(other, int):
            return IntMatrix([[x * other for x in r] for r in self.rows])
        if self.ncols != other.nrows:
            raise InputError(
                f"dimension mismatch: {self.nrows}x{self.ncols} @ "
                f"{other.nrows}x{other.ncols}"
            )
        return IntMatrix(kernel.mat_mul(self.tolists(), other.tolists()))

    __rmul__ = __mul__

    def __neg__(self) -> "IntMatrix":
        return self * -1

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.rows)))

    def trace(self) -> int:
        if not self.is_square:
            raise NotSquare("trace of a non-square matrix")
        return sum(self.rows[i][i] for i in range(self.nrows))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        rs = self.rows
        n = self.nrows
        return all(rs[i][j] == rs[j][i] for i in range(n) for j in range(i + 1, n))

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for r in self.rows for x in r)


def trace_product(a: IntMatrix, b: IntMatrix) -> int:
    """Tr(a @ b), computed without forming the product."""
    if a.ncols != b.nrows or a.nrows != b.ncols:
        raise InputError("trace_product needs compatible shapes")
    return kernel.trace_product(a.tolists(), b.tolists())


def rank(m: IntMatrix) -> int:
    """Exact rank via fraction-free elimination."""
    r, _ = kernel.bareiss(m.tolists())
    return r


def determinant(m: IntMatrix) -> int:
    if not m.is_square:
        raise NotSquare("determinant of a non-square matrix")
    _, det = kernel.bareiss(m.tolists())
    return det


def char_poly(m: IntMatrix) -> IntPoly:
    """det(xI - M), exact and monic of degree n."""
    if not m.is_square:
        raise NotSquare("characteristic polynomial of a non-square matrix")
    _check_cap(m.nrows, "char_poly")
    desc = kernel.berkowitz(m.tolists())
    return IntPoly(reversed(desc))


def nullity_at(m: IntMatrix, alpha: Fraction | int) -> int:
    """dim ker(M - alpha*I), exact; denominators are cleared first."""
    if not m.is_square:
        raise NotSquare("nullity of a non-square matrix")
    alpha = Fraction(alpha)
    p, q = alpha.numerator, alpha.denominator
    n = m.nrows
    shifted = [
        [q * x - (p if i == j else 0) for j, x in enumerate(row)]
        for i, row in enumerate(m.rows)
    ]
    r, _ = kernel.bareiss(shifted)
    return n - r


class _MomentTable:
    """Powers of a symmetric matrix and the trace moments they induce.

    Power k costs one kernel multiplication; moment m_(i+j) is then a
    cheap entrywise sum, so moments up to 2k come from k products.
    """

    def __init__(self, m: IntMatrix):
        self.mat = m.tolists()
        self.n = m.nrows
        self.powers: list[list[list[int]]] = [
            IntMatrix.identity(self.n).tolists(),
            self.mat,
        ]
        self.moments: dict[int, int] = {0: self.n}

    def power(self, k: int) -> list[list[int]]:
        while len(self.powers) <= k:
            self.powers.append(kernel.mat_mul(self.powers[-1], self.mat))
        return self.powers[k]

    def moment(self, t: int) -> int:
        if t not in self.moments:
            hi = (t + 1) // 2
            self.moments[t] = kernel.trace_product(self.power(t - hi), self.power(hi))
        return self.moments[t]

    def combine(self, coeffs: Sequence[int]) -> list[list[int]]:
        """sum coeffs[k] * M^k as a plain matrix."""
        n = self.n
        out = [[0] * n for _ in range(n)]
        for k, c in enumerate(coeffs):
            if not c:
                continue
            pk = self.power(k)
            for i in range(n):
                row = pk[i]
                orow = out[i]
                for j in range(n):
                    orow[j] += c * row[j]
        return out


def _require_symmetric(m: IntMatrix, what: str) -> None:
    if not m.is_symmetric():
        raise NotSymmetric(f"{what} requires a symmetric matrix")


def min_poly(m: IntMatrix, table: _MomentTable | None = None) -> IntPoly:
    """Monic minimal polynomial of a symmetric integer matrix.

    Uses the trace inner product: the powers I, M, ..., M^d are linearly
    dependent exactly when their moment Gram matrix is singular, which
    costs O(delta) matrix products rather than a full characteristic
    polynomial.  The result is verified by evaluating it at M.
    """
    _require_symmetric(m, "min_poly")
    _check_cap(m.nrows, "min_poly")
    t = table if table is not None else _MomentTable(m)
    n = m.nrows
    for d in range(1, n + 1):
        gram = [[t.moment(i + j) for j in range(d + 1)] for i in range(d + 1)]
        r, _ = kernel.bareiss(gram)
        if r <= d:
            coeffs = _solve_moment_system(t, d)
            candidate = IntPoly(coeffs + [1])
            zero = t.combine(list(candidate))
            if any(x for row in zero for x in row):
                raise InternalCheckError("minimal polynomial does not annihilate M")
            return candidate
    raise InternalCheckError("no minimal polynomial found")  # pragma: no cover


def _solve_moment_system(t: _MomentTable, d: int) -> list[int]:
    """Solve G a = -(m_d..m_{2d-1}) for the trailing coefficients."""
    g = [[Fraction(t.moment(i + j)) for j in range(d)] for i in range(d)]
    rhs = [Fraction(-t.moment(d + i)) for i in range(d)]
    sol = _solve_fraction_system(g, rhs)
    out = []
    for c in sol:
        if c.denominator != 1:
            raise InternalCheckError("minimal polynomial came out non-integer")
        out.append(c.numerator)
    return out


def _solve_fraction_system(
    g: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction]:
    """Gaussian elimination over Q; the system must be uniquely solvable."""
    n = len(g)
    m = [row[:] + [rhs[i]] for i, row in enumerate(g)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            raise InternalCheckError("singular system in exact solve")
        m[col], m[piv] = m[piv], m[col]
        pval = m[col][col]
        m[col] = [x / pval for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]


def distinct_root_count(m: IntMatrix) -> int:
    """Number of distinct eigenvalues of a symmetric matrix."""
    return min_poly(m).degree


def moment_hankel_rank(m: IntMatrix) -> int:
    """Independent distinct-eigenvalue count: rank of the full moment Hankel.

    Builds H[i][j] = Tr(M^(i+j)) for 0 <= i, j <= n and returns its rank.
    Needs all matrix powers up to n, so this is the small-matrix oracle
    against which min_poly is cross-checked, not the production path.
    """
    _require_symmetric(m, "moment_hankel_rank")
    t = _MomentTable(m)
    n = m.nrows
    h = [[t.moment(i + j) for j in range(n + 1)] for i in range(n + 1)]
    r, _ = kernel.bareiss(h)
    return r


def nullspace(m: IntMatrix) -> list[tuple[Fraction, ...]]:
    """Rational basis of ker(M) via echelon form and back-substitution."""
    nr, nc = m.nrows, m.ncols
    rows = [[Fraction(x) for x in r] for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * nc
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(tuple(vec))
    return basis
