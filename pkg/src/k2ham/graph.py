"""Immutable simple graphs stored as per-vertex adjacency bitsets.

Vertices are ``0..n-1``. A vertex set is an ``int`` bitmask or any
iterable of vertex labels; functions accept both and return plain
Python containers.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, GraphError, PreconditionError

MAX_VERTICES = 128


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: int | Iterable[int]) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            if self.n > MAX_VERTICES:
                raise CapacityError(f"{self.n} vertices exceeds capacity {MAX_VERTICES}")
            raise GraphError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for w in iter_bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], strict: bool = True) -> Graph:
        """Build a graph; ``strict`` rejects duplicate edges instead of merging them."""
        if n > MAX_VERTICES:
            raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if strict and rows[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_regular(self, d: int) -> bool:
        return all(row.bit_count() == d for row in self.adj)

    def with_edges(self, add: Iterable[tuple[int, int]] = (), remove: Iterable[tuple[int, int]] = ()) -> Graph:
        rows = list(self.adj)
        for u, v in remove:
            if not rows[u] >> v & 1:
                raise GraphError(f"edge ({u}, {v}) not present")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        for u, v in add:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if rows[u] >> v & 1:
                raise GraphError(f"edge ({u}, {v}) already present")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def delete_vertices(g: Graph, s: int | Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``V(g) - s``.

    Surviving vertices keep their relative order; the returned list maps
    each new label to its original label.
    """
    mask = to_mask(s)
    if mask & ~g.all_mask:
        raise PreconditionError("deleted set contains vertices outside the graph")
    keep = g.all_mask & ~mask
    if not keep:
        raise PreconditionError("deleting every vertex leaves an empty graph")
    old = list(iter_bits(keep))
    new_of = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        row = 0
        for w in iter_bits(g.adj[v] & keep):
            row |= 1 << new_of[w]
        rows.append(row)
    return Graph(len(old), tuple(rows)), old


def induced_subgraph(g: Graph, s: int | Iterable[int]) -> tuple[Graph, list[int]]:
    return delete_vertices(g, g.all_mask & ~to_mask(s))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def disjoint_union(*graphs: Graph) -> tuple[Graph, list[int]]:
    """Union with the vertices of later graphs shifted; returns the offsets."""
    offsets, edges, total = [], [], 0
    for h in graphs:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in h.edges())
        total += h.n
    return Graph.from_edges(total, edges), offsets


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``within``."""
    todo = g.all_mask if within is None else within
    comps = []
    while todo:
        seed = todo & -todo
        comp = frontier = seed
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            frontier = reach & todo & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


def is_connected(g: Graph, within: int | None = None) -> bool:
    return len(component_masks(g, within)) <= 1


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for w in iter_bits(g.adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``n > k`` and no set of fewer than ``k`` vertices disconnects ``g``."""
    if not 1 <= k <= 3:
        raise PreconditionError("k must be 1, 2 or 3")
    if g.n <= k:
        return False
    full = g.all_mask
    for size in range(k):
        for cut in combinations(range(g.n), size):
            if not is_connected(g, full & ~to_mask(cut)):
                return False
    return True


def is_bipartite_balanced(g: Graph) -> tuple[bool, bool | None]:
    """Return ``(bipartite, balanced)``; ``balanced`` is None for non-bipartite input."""
    if not is_connected(g):
        raise PreconditionError("bipartition balance is only defined for connected graphs")
    side = [-1] * g.n
    side[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in iter_bits(g.adj[v]):
            if side[w] < 0:
                side[w] = 1 - side[v]
                queue.append(w)
            elif side[w] == side[v]:
                return False, None
    ones = sum(side)
    return True, 2 * ones == g.n
