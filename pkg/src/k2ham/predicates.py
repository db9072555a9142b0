"""Graph-class predicates with hand-checkable witness bundles."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations

from .engine import find_hamiltonian_cycle, is_hamiltonian
from .errors import PreconditionError
from .graph import Graph, component_masks, girth, is_k_connected, iter_bits

Deletion = tuple[int, ...]


class SettingWarning(UserWarning):
    """An operation was applied outside the setting it is defined for."""


@dataclass
class PredicateReport:
    """Verdict plus certificates.

    ``witnesses`` maps a deleted vertex set (``()`` for the graph itself)
    to a hamiltonian cycle in original labels. ``counterexample`` is the
    first deletion whose subgraph is non-hamiltonian, or ``()`` when the
    graph itself is hamiltonian but was required not to be.
    """

    verdict: bool
    witnesses: dict[Deletion, tuple[int, ...]] = field(default_factory=dict)
    counterexample: Deletion | None = None
    checks: dict[str, bool] = field(default_factory=dict)

    def __bool__(self):
        return self.verdict


def cycle_after_deletion(g: Graph, deleted: Deletion, **kw) -> tuple[int, ...] | None:
    """Hamiltonian cycle of ``g - deleted`` in the labels of ``g``."""
    return find_hamiltonian_cycle(g, deleted=deleted, **kw)


def _all_deletions(g: Graph, deletions, **kw) -> PredicateReport:
    report = PredicateReport(True)
    for d in deletions:
        cyc = cycle_after_deletion(g, d, **kw)
        if cyc is None:
            return PredicateReport(False, report.witnesses, counterexample=d)
        report.witnesses[d] = cyc
    return report


def is_k1_hamiltonian(g: Graph, **kw) -> PredicateReport:
    """Every vertex-deleted subgraph is hamiltonian."""
    if g.n < 4:
        raise PreconditionError("K1-hamiltonicity needs at least 4 vertices")
    return _all_deletions(g, ((v,) for v in range(g.n)), **kw)


def is_k2_hamiltonian(g: Graph, **kw) -> PredicateReport:
    """Deleting the ends of any edge leaves a hamiltonian graph."""
    if g.n < 5:
        raise PreconditionError("K2-hamiltonicity needs at least 5 vertices")
    return _all_deletions(g, g.edges(), **kw)


def _non_hamiltonian_and(g: Graph, inner, **kw) -> PredicateReport:
    if g.n < 5:
        raise PreconditionError("needs at least 5 vertices")
    cyc = find_hamiltonian_cycle(g, **kw)
    if cyc is not None:
        return PredicateReport(False, {(): cyc}, counterexample=(), checks={"non_hamiltonian": False})
    report = inner(g, **kw)
    report.checks = {"non_hamiltonian": True, inner.__name__.removeprefix("is_"): report.verdict}
    return report


def is_hypohamiltonian(g: Graph, **kw) -> PredicateReport:
    return _non_hamiltonian_and(g, is_k1_hamiltonian, **kw)


def is_k2_hypohamiltonian(g: Graph, **kw) -> PredicateReport:
    return _non_hamiltonian_and(g, is_k2_hamiltonian, **kw)


def exceptional_vertices(g: Graph, **kw) -> frozenset[int]:
    """Vertices whose deletion leaves a non-hamiltonian graph.

    Defined for non-hamiltonian 2-connected graphs. Other input is still
    evaluated deletion by deletion, with a :class:`SettingWarning`.
    """
    if is_hamiltonian(g, **kw):
        warnings.warn("exceptional vertices are defined for non-hamiltonian graphs", SettingWarning, stacklevel=2)
    elif not is_k_connected(g, 2):
        warnings.warn("exceptional vertices are defined for 2-connected graphs", SettingWarning, stacklevel=2)
    return frozenset(v for v in range(g.n) if cycle_after_deletion(g, (v,), **kw) is None)


def three_edge_coloring(g: Graph) -> dict[tuple[int, int], int] | None:
    """A proper 3-edge-colouring of a cubic graph, or None.

    Backtracking that always colours the edge with the fewest remaining
    colours next.
    """
    if not g.is_regular(3):
        raise PreconditionError("edge 3-colouring is only attempted on cubic graphs")
    edges = g.edges()
    inc: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for i, (u, v) in enumerate(edges):
        inc[u].append(i)
        inc[v].append(i)
    color = [-1] * len(edges)
    used = [0] * g.n  # bitmask of colours present at each vertex

    def options(i):
        u, v = edges[i]
        return 0b111 & ~(used[u] | used[v])

    def assign(i, c):
        u, v = edges[i]
        color[i] = c
        used[u] |= 1 << c
        used[v] |= 1 << c

    def unassign(i):
        u, v = edges[i]
        used[u] &= ~(1 << color[i])
        used[v] &= ~(1 << color[i])
        color[i] = -1

    # the three edges at vertex 0 get colours 0, 1, 2 without loss of generality
    for c, i in enumerate(inc[0]):
        assign(i, c)

    def solve():
        best, best_opts, best_cnt = -1, 0, 4
        for i in range(len(edges)):
            if color[i] < 0:
                o = options(i)
                cnt = o.bit_count()
                if cnt == 0:
                    return False
                if cnt < best_cnt:
                    best, best_opts, best_cnt = i, o, cnt
                    if cnt == 1:
                        break
        if best < 0:
            return True
        for c in iter_bits(best_opts):
            assign(best, c)
            if solve():
                return True
            unassign(best)
        return False

    if not solve():
        return None
    return {e: color[i] for i, e in enumerate(edges)}


def cubic_chromatic_class(g: Graph) -> int:
    """1 if the cubic graph is 3-edge-colourable, else 2."""
    return 1 if three_edge_coloring(g) is not None else 2


def cyclic_edge_cut(g: Graph, max_size: int = 3) -> tuple[tuple[int, int], ...] | None:
    """An edge cut of at most ``max_size`` edges leaving two components with cycles."""
    edges = g.edges()
    for size in range(1, max_size + 1):
        for cut in combinations(edges, size):
            h = g.with_edges(remove=cut)
            comps = component_masks(h)
            if len(comps) < 2:
                continue
            cyclic = 0
            for comp in comps:
                vs = comp.bit_count()
                es = sum((h.adj[v] & comp).bit_count() for v in iter_bits(comp)) // 2
                if es >= vs:
                    cyclic += 1
            if cyclic >= 2:
                return cut
    return None


def is_cyclically_4_edge_connected(g: Graph) -> bool:
    if len(component_masks(g)) != 1:
        raise PreconditionError("cyclic edge-connectivity is checked on connected graphs")
    return cyclic_edge_cut(g, 3) is None


def is_snark(g: Graph) -> PredicateReport:
    """Cubic, girth at least 5, chromatic index 4 and cyclically 4-edge-connected."""
    checks = {"cubic": g.is_regular(3) and len(component_masks(g)) == 1}
    if checks["cubic"]:
        checks["girth>=5"] = girth(g) >= 5
        if checks["girth>=5"]:
            checks["class2"] = cubic_chromatic_class(g) == 2
            if checks["class2"]:
                checks["cyclically_4_edge_connected"] = is_cyclically_4_edge_connected(g)
    verdict = len(checks) == 4 and all(checks.values())
    return PredicateReport(verdict, checks=checks)
