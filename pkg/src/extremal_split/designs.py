"""Combinatorial block designs: validation, parameters and generators.

A design is a multiset of blocks (subsets of {1..v}); repeats are
allowed and meaningful.  Uniform designs carry the full parameter
tuple (v, b, r, k, lambda); pair-balanced designs with variable block
sizes carry (r, lambda) and must additionally have constant
replication so that the Gram identity B B^T = lambda*J + (r-lambda)*I
holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError, InternalCheckError
from .linalg import IntMatrix


class DesignError(InputError):
    pass


class NonUniformBlockSize(DesignError):
    pass


class UnbalancedPair(DesignError):
    def __init__(self, e: int, f: int, count: int, expected: int):
        super().__init__(f"pair ({e},{f}) covered {count} times, expected {expected}")
        self.pair = (e, f)
        self.count = count


class NonConstantReplication(DesignError):
    def __init__(self, point: int, count: int, expected: int):
        super().__init__(f"point {point} lies in {count} blocks, expected {expected}")
        self.point = point
        self.count = count


class LambdaZero(DesignError):
    pass


class NoSTSExists(DesignError):
    def __init__(self, v: int):
        super().__init__(f"no Steiner triple system on {v} points (need v = 1,3 mod 6)")
        self.v = v


class TooSmall(DesignError):
    pass


class GramMismatch(InternalCheckError):
    def __init__(self, i: int, j: int):
        super().__init__(f"Gram identity fails at entry ({i},{j})")
        self.entry = (i, j)


@dataclass(frozen=True)
class Design:
    """v points (1-based) and an ordered multiset of blocks.

    Blocks are stored as strictly increasing tuples; input order is
    preserved so the incidence matrix has reproducible columns.
    """

    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.v < 1:
            raise DesignError(f"need at least one point, got v={self.v}")
        if not self.blocks:
            raise DesignError("design has no blocks")
        for blk in self.blocks:
            if not blk:
                raise DesignError("empty block")
            if any(p < 1 or p > self.v for p in blk):
                raise DesignError(f"block {blk} has points outside 1..{self.v}")
            if any(a >= b for a, b in zip(blk, blk[1:])):
                raise DesignError(f"block {blk} is not strictly increasing")

    @property
    def b(self) -> int:
        return len(self.blocks)


def design(v: int, blocks: Iterable[Sequence[int]]) -> Design:
    """Build a Design, sorting each block and rejecting duplicate points."""
    normalized = []
    for blk in blocks:
        t = tuple(sorted(blk))
        if len(set(t)) != len(t):
            raise DesignError(f"block {tuple(blk)} repeats a point")
        normalized.append(t)
    return Design(v, tuple(normalized))


@dataclass(frozen=True)
class DesignParams:
    """(v, b, r, k, lambda) with the standard counting identities enforced."""

    v: int
    b: int
    r: int
    k: int
    lam: int

    def __post_init__(self):
        if self.lam <= 0:
            raise LambdaZero(f"lambda must be positive, got {self.lam}")
        if self.r * (self.k - 1) != self.lam * (self.v - 1):
            raise DesignError(
                f"replication identity fails: {self.r}*({self.k}-1) != "
                f"{self.lam}*({self.v}-1)"
            )
        if self.b * self.k != self.v * self.r:
            raise DesignError(
                f"count identity fails: {self.b}*{self.k} != {self.v}*{self.r}"
            )


@dataclass(frozen=True)
class RLParams:
    """(r, lambda) for pair-balanced designs with variable block sizes."""

    r: int
    lam: int

    def __post_init__(self):
        if self.r <= 0 or self.lam <= 0:
            raise DesignError(f"need positive parameters, got ({self.r},{self.lam})")


def _pair_counts(d: Design) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for blk in d.blocks:
        for i in range(len(blk)):
            for j in range(i + 1, len(blk)):
                key = (blk[i], blk[j])
                counts[key] = counts.get(key, 0) + 1
    return counts


def _replications(d: Design) -> list[int]:
    reps = [0] * (d.v + 1)
    for blk in d.blocks:
        for p in blk:
            reps[p] += 1
    return reps[1:]


def _check_pair_balance(d: Design) -> int:
    """Every point pair covered the same positive number of times."""
    if d.v < 2:
        raise LambdaZero("no point pairs on fewer than two points")
    counts = _pair_counts(d)
    lam = counts.get((1, 2), 0)
    for e in range(1, d.v + 1):
        for f in range(e + 1, d.v + 1):
            c = counts.get((e, f), 0)
            if c != lam:
                raise UnbalancedPair(e, f, c, lam)
    if lam == 0:
        raise LambdaZero("no pair is covered by any block")
    return lam


def _check_replication(d: Design) -> int:
    reps = _replications(d)
    r = reps[0]
    for p, c in enumerate(reps, start=1):
        if c != r:
            raise NonConstantReplication(p, c, r)
    return r


def validate_uniform(d: Design) -> DesignParams:
    """Validate as a (v, b, r, k, lambda)-design."""
    k = len(d.blocks[0])
    for blk in d.blocks:
        if len(blk) != k:
            raise NonUniformBlockSize(
                f"block sizes differ: {len(blk)} vs {k}"
            )
    lam = _check_pair_balance(d)
    r = _check_replication(d)
    return DesignParams(v=d.v, b=d.b, r=r, k=k, lam=lam)


def validate_rl(d: Design) -> RLParams:
    """Validate as an (r, lambda)-design (constant replication required)."""
    lam = _check_pair_balance(d)
    r = _check_replication(d)
    return RLParams(r=r, lam=lam)


def incidence_matrix(d: Design) -> IntMatrix:
    """v x b matrix; column j is the indicator of block j."""
    cols = []
    for blk in d.blocks:
        col = [0] * d.v
        for p in blk:
            col[p - 1] = 1
        cols.append(col)
    return IntMatrix(list(zip(*cols)))


def gram_check(d: Design) -> tuple[int, int]:
    """Assert B B^T = lambda*J + (r-lambda)*I entrywise; returns (r, lambda).

    The validator counts pairs by direct scan, so this is an independent
    route to the same parameters; disagreement is an internal bug.
    """
    params = validate_rl(d)
    b = incidence_matrix(d)
    gram = b * b.transpose()
    r, lam = params.r, params.lam
    for i in range(d.v):
        for j in range(d.v):
            expected = r if i == j else lam
            if gram[i][j] != expected:
                raise GramMismatch(i + 1, j + 1)
    return r, lam


def is_symmetric(params: DesignParams) -> bool:
    return params.b == params.v


def fisher_check(params: DesignParams) -> bool:
    """b >= v for non-trivial designs; False would mean a logic error."""
    if params.k >= params.v:
        raise DesignError("Fisher check needs a non-trivial design (k < v)")
    return params.b >= params.v


def block_intersection_profile(d: Design) -> set[int]:
    """Set of pairwise block-intersection sizes."""
    if d.b < 2:
        raise DesignError("need at least two blocks")
    sets = [frozenset(blk) for blk in d.blocks]
    profile = set()
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            profile.add(len(sets[i] & sets[j]))
    return profile


def has_disjoint_blocks(d: Design) -> bool:
    return 0 in block_intersection_profile(d)


def disjoint_block_pair(d: Design) -> tuple[int, int] | None:
    """Indices (0-based) of some disjoint block pair, or None."""
    sets = [frozenset(blk) for blk in d.blocks]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if not (sets[i] & sets[j]):
                return (i, j)
    return None


def replicate(d: Design, m: int) -> Design:
    """m copies of every block, keeping block order grouped by copy."""
    if m < 1:
        raise DesignError(f"need m >= 1, got {m}")
    return Design(d.v, d.blocks * m)


def rl_check_square_condition(params: DesignParams | RLParams) -> bool:
    return params.r == params.lam**2


def sts(v: int) -> Design:
    """A Steiner triple system on v points (exists iff v = 1,3 mod 6).

    Bose construction for v = 3 mod 6, Skolem construction for
    v = 1 mod 6.  Any valid (v,3,1)-design is acceptable.
    """
    if v < 3 or v % 6 not in (1, 3):
        raise NoSTSExists(v)
    if v % 6 == 3:
        return _sts_bose(v)
    return _sts_skolem(v)


def _sts_bose(v: int) -> Design:
    n = v // 3
    half = (n + 1) // 2  # inverse of 2 mod n (n odd)

    def point(x: int, i: int) -> int:
        return 3 * x + i + 1

    blocks = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(n)]
    for x in range(n):
        for y in range(x + 1, n):
            z = (x + y) * half % n
            for i in range(3):
                blocks.append(
                    tuple(sorted((point(x, i), point(y, i), point(z, (i + 1) % 3))))
                )
    return Design(v, tuple(blocks))


def _sts_skolem(v: int) -> Design:
    t = v // 6
    n = 2 * t
    infinity = v

    # half-idempotent commutative quasigroup on Z_2t
    def circ(x: int, y: int) -> int:
        s = (x + y) % n
        return s // 2 if s % 2 == 0 else t + (s - 1) // 2

    def point(x: int, i: int) -> int:
        return 3 * x + i + 1

    blocks = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(t)]
    for x in range(t):
        for i in range(3):
            blocks.append(
                tuple(sorted((infinity, point(t + x, i), point(x, (i + 1) % 3))))
            )
    for x in range(n):
        for y in range(x + 1, n):
            z = circ(x, y)
            for i in range(3):
                blocks.append(
                    tuple(sorted((point(x, i), point(y, i), point(z, (i + 1) % 3))))
                )
    return Design(v, tuple(blocks))
