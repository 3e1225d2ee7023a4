"""Split graphs and their combinatorial metrics.

A split graph is stored as (c, s, B): clique size, stable-set size and
the c x s biadjacency matrix.  Vertices are 1-based with the clique
listed first, so vertex c+j is the j-th stable vertex and the adjacency
matrix is [[J-I, B], [B^T, 0]].
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .designs import Design, incidence_matrix
from .errors import InputError
from .linalg import IntMatrix


class GraphError(InputError):
    pass


@dataclass(frozen=True)
class SplitGraph:
    c: int
    s: int
    B: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.c < 1:
            raise GraphError(f"clique size must be >= 1, got {self.c}")
        if self.s < 0:
            raise GraphError(f"stable-set size must be >= 0, got {self.s}")
        if len(self.B) != self.c:
            raise GraphError("biadjacency must have one row per clique vertex")
        for row in self.B:
            if len(row) != self.s:
                raise GraphError("biadjacency must have one column per stable vertex")
            if any(x not in (0, 1) for x in row):
                raise GraphError("biadjacency entries must be 0/1")

    @property
    def n(self) -> int:
        return self.c + self.s

    def adjacency(self) -> IntMatrix:
        c, s = self.c, self.s
        rows = []
        for i in range(c):
            rows.append([0 if j == i else 1 for j in range(c)] + list(self.B[i]))
        for j in range(s):
            rows.append([self.B[i][j] for i in range(c)] + [0] * s)
        return IntMatrix(rows)

    def edge_count(self) -> int:
        return self.c * (self.c - 1) // 2 + sum(sum(r) for r in self.B)

    def biadjacency(self) -> IntMatrix:
        if self.s == 0:
            raise GraphError("no stable vertices, biadjacency is empty")
        return IntMatrix(self.B)


def split_graph(c: int, s: int, rows: Iterable[Sequence[int]]) -> SplitGraph:
    return SplitGraph(c, s, tuple(tuple(r) for r in rows))


def from_design(d: Design) -> SplitGraph:
    """Clique on the points, one stable vertex per block, edges by incidence."""
    inc = incidence_matrix(d)
    return SplitGraph(d.v, d.b, inc.rows)


def corona_clique(c: int) -> SplitGraph:
    """K_c with one pendant vertex hung on every clique vertex."""
    if c < 1:
        raise GraphError(f"need c >= 1, got {c}")
    eye = tuple(tuple(1 if i == j else 0 for j in range(c)) for i in range(c))
    return SplitGraph(c, c, eye)


def _neighbors(g: SplitGraph) -> list[list[int]]:
    """0-based adjacency lists, clique vertices first."""
    c, s = g.c, g.s
    adj: list[list[int]] = [[] for _ in range(c + s)]
    for i in range(c):
        for j in range(i + 1, c):
            adj[i].append(j)
            adj[j].append(i)
    for i in range(c):
        row = g.B[i]
        for j in range(s):
            if row[j]:
                adj[i].append(c + j)
                adj[c + j].append(i)
    return adj


def _bfs_ecc(adj: list[list[int]], start: int) -> tuple[int, int]:
    """(number of reached vertices, eccentricity of start)."""
    dist = [-1] * len(adj)
    dist[start] = 0
    queue = deque([start])
    seen = 1
    ecc = 0
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                ecc = max(ecc, dist[w])
                seen += 1
                queue.append(w)
    return seen, ecc


def is_connected(g: SplitGraph) -> bool:
    adj = _neighbors(g)
    seen, _ = _bfs_ecc(adj, 0)
    return seen == g.n


def diameter(g: SplitGraph) -> int | None:
    """Exact diameter by BFS from every vertex; None when disconnected."""
    adj = _neighbors(g)
    best = 0
    for start in range(g.n):
        seen, ecc = _bfs_ecc(adj, start)
        if seen != g.n:
            return None
        best = max(best, ecc)
    return best


@dataclass(frozen=True)
class DegreeSummary:
    degrees: tuple[int, ...]  # all vertex degrees, clique first
    distinct_count: int
    bidegreed: bool
    clique_degree: int | None = None
    stable_degree: int | None = None
    cross_degree: int | None = None


def degree_summary(g: SplitGraph) -> DegreeSummary:
    """Degree multiset plus the bidegree structure when it applies.

    For a connected bidegreed split graph all clique vertices share one
    degree d and all stable vertices the other k; then the cross degree
    k' = d - (c-1) satisfies k'c = sk.  Both facts are asserted, not
    assumed.
    """
    c, s = g.c, g.s
    clique_deg = [c - 1 + sum(g.B[i]) for i in range(c)]
    stable_deg = [sum(g.B[i][j] for i in range(c)) for j in range(s)]
    degrees = tuple(clique_deg + stable_deg)
    distinct = len(set(degrees))
    bidegreed = distinct == 2
    if not (bidegreed and is_connected(g)):
        return DegreeSummary(degrees, distinct, bidegreed)
    d_set, k_set = set(clique_deg), set(stable_deg)
    if len(d_set) != 1 or len(k_set) != 1:
        raise GraphError(
            "connected bidegreed split graph with mixed degrees inside a part"
        )
    d, k = clique_deg[0], stable_deg[0]
    kp = d - (c - 1)
    if kp * c != s * k:
        raise GraphError("edge double count k'c = sk fails")
    return DegreeSummary(degrees, distinct, True, d, k, kp)


def edge_list(g: SplitGraph) -> list[tuple[int, int]]:
    """Undirected edges as 1-based (u, v) pairs, u < v, clique first."""
    c, s = g.c, g.s
    edges = [(i + 1, j + 1) for i in range(c) for j in range(i + 1, c)]
    for i in range(c):
        for j in range(s):
            if g.B[i][j]:
                edges.append((i + 1, c + j + 1))
    return edges


def to_dot(g: SplitGraph) -> str:
    lines = ["graph split {"]
    for i in range(g.c):
        lines.append(f'  v{i + 1} [shape=circle, style=filled, label="{i + 1}"];')
    for j in range(g.s):
        lines.append(f'  v{g.c + j + 1} [shape=box, label="{g.c + j + 1}"];')
    for u, v in edge_list(g):
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines)
