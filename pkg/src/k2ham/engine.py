"""Backtracking search for hamiltonian cycles, paths and spanning path pairs.

Every query is reduced to one core problem: grow a path from a fixed
prefix until it covers all vertices except a target ``t``, then close
onto ``t``. Hamiltonian cycles use the prefix ``x, s, y`` folded into
prefix ``[s, y]`` with target ``x``; an ``st``-path uses prefix ``[s]``.
Two spanning paths ``s1..t1`` and ``s2..t2`` become one ``s1..t2`` path
through an auxiliary vertex that may only be entered from ``t1`` and
must leave towards ``s2``. Required edges are subdivided by an auxiliary
degree-2 vertex, forbidden edges are deleted.

Pruning, checked incrementally after every extension:

* the target needs a neighbour that is still outside the path;
* every vertex outside the path needs at least two neighbours that are
  not interior path vertices (the target needs one).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import PreconditionError, Undecided
from .graph import Graph, iter_bits, norm_edge, to_mask

log = logging.getLogger(__name__)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Constraints:
    required: frozenset[Edge] = frozenset()
    forbidden: frozenset[Edge] = frozenset()

    @classmethod
    def make(cls, required: Iterable[Edge] = (), forbidden: Iterable[Edge] = ()) -> Constraints:
        return cls(frozenset(norm_edge(*e) for e in required), frozenset(norm_edge(*e) for e in forbidden))

    def validate(self, g: Graph) -> None:
        if self.required & self.forbidden:
            raise PreconditionError(f"edges both required and forbidden: {sorted(self.required & self.forbidden)}")
        for u, v in self.required:
            if not (0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v)):
                raise PreconditionError(f"required edge ({u}, {v}) is not in the graph")

    def allows(self, edges: Iterable[Edge]) -> bool:
        used = {norm_edge(*e) for e in edges}
        return self.required <= used and not (self.forbidden & used)


NO_CONSTRAINTS = Constraints()


@dataclass
class SearchStats:
    """Optional sink for diagnostics of one or more searches."""

    nodes: int = 0
    contradictory: bool = False
    notes: list[str] = field(default_factory=list)


class _Problem:
    """The transformed graph plus bookkeeping to map solutions back."""

    def __init__(self, g: Graph, c: Constraints, deleted: Iterable[int] = ()):
        c.validate(g)
        self.n0 = g.n
        dead = to_mask(deleted)
        if dead & ~g.all_mask:
            raise PreconditionError("deleted vertex outside the graph")
        for u, v in c.required:
            if dead >> u & 1 or dead >> v & 1:
                raise PreconditionError(f"required edge ({u}, {v}) touches a deleted vertex")
        self.dead = dead
        adj = [0 if dead >> v & 1 else row & ~dead for v, row in enumerate(g.adj)]
        for u, v in c.forbidden:
            if 0 <= u < g.n and 0 <= v < g.n:
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
        self.contradictory = False
        req_deg = [0] * g.n
        for u, v in sorted(c.required):
            req_deg[u] += 1
            req_deg[v] += 1
            z = len(adj)
            adj[u] = adj[u] & ~(1 << v) | (1 << z)
            adj[v] = adj[v] & ~(1 << u) | (1 << z)
            adj.append((1 << u) | (1 << v))
        self.req_deg = req_deg
        if any(d > 2 for d in req_deg):
            self.contradictory = True
        self.adj = adj
        self.banned_arcs: set[tuple[int, int]] = set()

    def add_vertex(self, nbrs: Iterable[int]) -> int:
        z = len(self.adj)
        row = 0
        for v in nbrs:
            row |= 1 << v
            self.adj[v] |= 1 << z
        self.adj.append(row)
        return z

    def project(self, seq: list[int]) -> list[int]:
        return [v for v in seq if v < self.n0]


def _grow(adj: list[int], prefix: list[int], target: int, banned_arcs: set[tuple[int, int]],
          on_solution: Callable[[list[int]], bool], stats: SearchStats | None, budget: int | None,
          dead: int = 0) -> bool:
    """Extend ``prefix`` to a path over every vertex but ``target``, ending next to it.

    ``on_solution`` receives the full path (target appended) and returns True
    to stop the search. Returns True iff the search was stopped that way.
    """
    n = len(adj)
    tbit = 1 << target
    if (dead >> target & 1) or any(dead >> v & 1 for v in prefix):
        return False
    visited = dead
    for v in prefix:
        visited |= 1 << v
    if target in prefix or len(set(prefix)) != len(prefix):
        return False
    free = ((1 << n) - 1) & ~visited
    end = prefix[-1]
    for i in range(len(prefix) - 1):
        if not adj[prefix[i]] >> prefix[i + 1] & 1:
            return False
    demand = [2] * n
    demand[target] = 1
    avail = [0] * n
    reach = free | (1 << end)
    for v in iter_bits(free):
        avail[v] = (adj[v] & reach).bit_count()
        if avail[v] < demand[v]:
            return False
    if free != tbit and not adj[target] & free & ~tbit:
        return False

    path = list(prefix)
    nodes = 0
    banned_from: dict[int, int] = {}
    for u, v in banned_arcs:
        banned_from[u] = banned_from.get(u, 0) | (1 << v)

    def extend(u: int, free: int) -> bool:
        nonlocal nodes
        if free == tbit:
            if adj[u] & tbit and not banned_from.get(u, 0) & tbit:
                path.append(target)
                stop = on_solution(path)
                path.pop()
                return stop
            return False
        nodes += 1
        if budget is not None and nodes > budget:
            raise Undecided(nodes)
        choices = adj[u] & free & ~tbit & ~banned_from.get(u, 0)
        for w in iter_bits(choices):
            wbit = 1 << w
            rest = free & ~wbit
            # u becomes interior: its outside neighbours lose one option
            touched = adj[u] & rest
            ok = True
            for v in iter_bits(touched):
                avail[v] -= 1
                if avail[v] < demand[v]:
                    ok = False
            if ok and rest != tbit and not adj[target] & rest & ~tbit:
                ok = False
            if ok:
                path.append(w)
                if extend(w, rest):
                    for v in iter_bits(touched):
                        avail[v] += 1
                    return True
                path.pop()
            for v in iter_bits(touched):
                avail[v] += 1
        return False

    try:
        return extend(end, free)
    finally:
        if stats is not None:
            stats.nodes += nodes


def _start_vertex(adj: list[int], dead: int) -> int:
    return min((v for v in range(len(adj)) if not dead >> v & 1), key=lambda v: (adj[v].bit_count(), v))


def canonical_cycle(seq: list[int]) -> tuple[int, ...]:
    """Rotate/reflect a cycle to start at its minimum label, then its smaller neighbour."""
    k = len(seq)
    i = seq.index(min(seq))
    fwd = seq[i:] + seq[:i]
    if k > 2 and fwd[-1] < fwd[1]:
        fwd = [fwd[0]] + fwd[1:][::-1]
    return tuple(fwd)


def _cycle_search(g: Graph, c: Constraints, on_cycle: Callable[[tuple[int, ...]], bool],
                  stats: SearchStats | None, budget: int | None, deleted: Iterable[int] = ()) -> bool:
    prob = _Problem(g, c, deleted)
    if g.n - prob.dead.bit_count() < 3:
        return False
    if prob.contradictory:
        if stats is not None:
            stats.contradictory = True
            stats.notes.append("a vertex has more than two required edges")
        return False
    adj = prob.adj
    s = _start_vertex(adj, prob.dead)
    nbrs = list(iter_bits(adj[s]))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            def take(p, x=x):
                return on_cycle(canonical_cycle(prob.project(p)))
            if _grow(adj, [s, y], x, prob.banned_arcs, take, stats, budget, prob.dead):
                return True
    return False


def find_hamiltonian_cycle(g: Graph, c: Constraints = NO_CONSTRAINTS, *, deleted: Iterable[int] = (),
                           stats: SearchStats | None = None, budget: int | None = None) -> tuple[int, ...] | None:
    """A hamiltonian cycle of ``g - deleted`` obeying ``c``, or None if none exists.

    The cycle is in canonical orientation and uses the labels of ``g``.
    Raises :class:`Undecided` when ``budget`` node expansions do not suffice;
    fewer than three surviving vertices count as non-hamiltonian.
    """
    found: list[tuple[int, ...]] = []

    def keep(cyc):
        found.append(cyc)
        return True

    _cycle_search(g, c, keep, stats, budget, deleted)
    return found[0] if found else None


def is_hamiltonian(g: Graph, c: Constraints = NO_CONSTRAINTS, **kw) -> bool:
    return find_hamiltonian_cycle(g, c, **kw) is not None


def iter_hamiltonian_cycles(g: Graph, c: Constraints = NO_CONSTRAINTS, *, deleted: Iterable[int] = (),
                            stats: SearchStats | None = None, budget: int | None = None) -> list[tuple[int, ...]]:
    """Every hamiltonian cycle exactly once, as canonical vertex sequences."""
    out: list[tuple[int, ...]] = []

    def keep(cyc):
        out.append(cyc)
        return False

    _cycle_search(g, c, keep, stats, budget, deleted)
    return out


def count_hamiltonian_cycles(g: Graph, c: Constraints = NO_CONSTRAINTS, **kw) -> int:
    return len(iter_hamiltonian_cycles(g, c, **kw))


def find_hamiltonian_path(g: Graph, s: int, t: int, c: Constraints = NO_CONSTRAINTS, *, deleted: Iterable[int] = (),
                          stats: SearchStats | None = None, budget: int | None = None,
                          where: Callable[[tuple[int, ...]], bool] | None = None) -> tuple[int, ...] | None:
    """A spanning ``s``--``t`` path of ``g - deleted`` obeying ``c``, or None.

    ``where`` filters candidate paths; the search continues past rejected ones.
    """
    if s == t:
        raise PreconditionError("path endpoints must differ")
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise PreconditionError("path endpoint outside the graph")
    prob = _Problem(g, c, deleted)
    if prob.contradictory:
        if stats is not None:
            stats.contradictory = True
        return None
    found: list[tuple[int, ...]] = []

    def keep(p):
        sol = tuple(prob.project(p))
        if where is not None and not where(sol):
            return False
        found.append(sol)
        return True

    _grow(prob.adj, [s], t, prob.banned_arcs, keep, stats, budget, prob.dead)
    return found[0] if found else None


def find_disjoint_spanning_paths(g: Graph, pair1: tuple[int, int], pair2: tuple[int, int],
                                 c: Constraints = NO_CONSTRAINTS, *, deleted: Iterable[int] = (),
                                 stats: SearchStats | None = None, budget: int | None = None,
                                 where: Callable[[tuple[int, ...], tuple[int, ...]], bool] | None = None
                                 ) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Vertex-disjoint ``pair1`` and ``pair2`` paths that together cover ``V(g) - deleted``.

    ``where(p, q)`` filters candidate pairs as in :func:`find_hamiltonian_path`.
    """
    s1, t1 = pair1
    s2, t2 = pair2
    ends = [s1, t1, s2, t2]
    if len(set(ends)) != 4:
        raise PreconditionError("the four path endpoints must be pairwise distinct")
    if not all(0 <= v < g.n for v in ends):
        raise PreconditionError("path endpoint outside the graph")
    prob = _Problem(g, c, deleted)
    if prob.contradictory:
        if stats is not None:
            stats.contradictory = True
        return None
    z = prob.add_vertex([t1, s2])
    prob.banned_arcs.add((s2, z))
    prob.banned_arcs.add((z, t1))
    found: list[tuple[tuple[int, ...], tuple[int, ...]]] = []

    def keep(p):
        k = p.index(z)
        sol = (tuple(prob.project(p[:k])), tuple(prob.project(p[k + 1:])))
        if where is not None and not where(*sol):
            return False
        found.append(sol)
        return True

    _grow(prob.adj, [s1], t2, prob.banned_arcs, keep, stats, budget, prob.dead)
    return found[0] if found else None
