"""Fragment gluing, the dot product and its sufficient conditions, extendable 5-cycles."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .engine import (Constraints, find_disjoint_spanning_paths, find_hamiltonian_cycle,
                     find_hamiltonian_path)
from .errors import PreconditionError
from .graph import Graph, delete_vertices, norm_edge
from .predicates import SettingWarning


@dataclass(frozen=True)
class Fragment:
    graph: Graph
    attachments: tuple[int, int, int]

    def __post_init__(self):
        if len(self.attachments) != 3 or len(set(self.attachments)) != 3:
            raise PreconditionError("a fragment needs three distinct attachments")
        if not all(0 <= v < self.graph.n for v in self.attachments):
            raise PreconditionError("attachment outside the fragment")

    @property
    def trivial(self) -> bool:
        return self.graph.n == 4


@dataclass
class Glued:
    graph: Graph
    maps: tuple[list[int], list[int]]  # vertex of each part -> vertex of the result


def fragment_from_cubic_vertex(g: Graph, v: int) -> Fragment:
    """``(g - v, N(v))`` with the attachments in ascending original order."""
    if g.degree(v) != 3:
        raise PreconditionError(f"vertex {v} is not cubic")
    h, old = delete_vertices(g, [v])
    new = {w: i for i, w in enumerate(old)}
    return Fragment(h, tuple(new[w] for w in g.neighbors(v)))


def trivial_fragment() -> Fragment:
    """K_{1,3} with its leaves as attachments."""
    return Fragment(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]), (1, 2, 3))


def glue(f1: Fragment, f2: Fragment, pairing: tuple[int, int, int] = (0, 1, 2)) -> Glued:
    """Identify attachment ``i`` of ``f1`` with attachment ``pairing[i]`` of ``f2``.

    ``f1`` keeps its labels; the remaining vertices of ``f2`` follow in
    ascending order. Parallel edges created by the identification merge.
    """
    if sorted(pairing) != [0, 1, 2]:
        raise PreconditionError("pairing must be a permutation of (0, 1, 2)")
    if f1.trivial and f2.trivial:
        warnings.warn("gluing two trivial fragments", SettingWarning, stacklevel=2)
    map1 = list(range(f1.graph.n))
    map2 = [-1] * f2.graph.n
    for i, x in enumerate(f1.attachments):
        map2[f2.attachments[pairing[i]]] = x
    nxt = f1.graph.n
    for v in range(f2.graph.n):
        if map2[v] < 0:
            map2[v] = nxt
            nxt += 1
    edges = {norm_edge(map1[u], map1[v]) for u, v in f1.graph.edges()}
    edges |= {norm_edge(map2[u], map2[v]) for u, v in f2.graph.edges()}
    return Glued(Graph.from_edges(nxt, sorted(edges)), (map1, map2))


@dataclass(frozen=True)
class DotSpec:
    """Labels for ``G . H``: independent edges ``ab``, ``cd`` of G; adjacent cubic ``x``, ``y`` of H.

    ``primes`` optionally fixes ``(a', b', c', d')``; by default a', b' are the
    other neighbours of x and c', d' those of y, each pair ascending.
    """

    a: int
    b: int
    c: int
    d: int
    x: int
    y: int
    primes: tuple[int, int, int, int] | None = None

    def resolve_primes(self, h: Graph) -> tuple[int, int, int, int]:
        ab = [w for w in h.neighbors(self.x) if w != self.y]
        cd = [w for w in h.neighbors(self.y) if w != self.x]
        if self.primes is None:
            return (ab[0], ab[1], cd[0], cd[1])
        ap, bp, cp, dp = self.primes
        if sorted((ap, bp)) != ab or sorted((cp, dp)) != cd:
            raise PreconditionError("primes must be the outer neighbours of x and of y")
        return self.primes


def check_g_labels(g: Graph, a: int, b: int, c: int, d: int) -> None:
    if len({a, b, c, d}) != 4:
        raise PreconditionError("ab and cd must be independent edges")
    if not (g.has_edge(a, b) and g.has_edge(c, d)):
        raise PreconditionError("ab and cd must be edges of G")
    for u in (a, b):
        for w in (c, d):
            if g.has_edge(u, w):
                raise PreconditionError(f"{u} is adjacent to {w}; a, b must avoid N(c) and N(d)")


def check_h_labels(h: Graph, x: int, y: int, primes=None) -> tuple[int, int, int, int]:
    if not h.has_edge(x, y):
        raise PreconditionError("x and y must be adjacent")
    if h.degree(x) != 3 or h.degree(y) != 3:
        raise PreconditionError("x and y must be cubic")
    ap, bp, cp, dp = DotSpec(0, 0, 0, 0, x, y, primes).resolve_primes(h)
    if len({ap, bp, cp, dp}) != 4:
        raise PreconditionError("x and y lie on a triangle")
    if h.has_edge(ap, bp) or h.has_edge(cp, dp):
        raise PreconditionError("a' must not be adjacent to b', nor c' to d'")
    return ap, bp, cp, dp


def dot_product(g: Graph, h: Graph, spec: DotSpec) -> Glued:
    """``(G - ab - cd) + (H - x - y)`` joined by ``aa', bb', cc', dd'``.

    G keeps its labels; surviving vertices of H follow in ascending order.
    """
    if g.n < 6 or h.n < 6:
        raise PreconditionError("both factors need at least six vertices")
    check_g_labels(g, spec.a, spec.b, spec.c, spec.d)
    ap, bp, cp, dp = check_h_labels(h, spec.x, spec.y, spec.primes)
    hh, old = delete_vertices(h, [spec.x, spec.y])
    map_h = [-1] * h.n
    for i, v in enumerate(old):
        map_h[v] = g.n + i
    edges = [e for e in g.edges() if e not in (norm_edge(spec.a, spec.b), norm_edge(spec.c, spec.d))]
    edges += [(g.n + u, g.n + v) for u, v in hh.edges()]
    edges += [(spec.a, map_h[ap]), (spec.b, map_h[bp]), (spec.c, map_h[cp]), (spec.d, map_h[dp])]
    return Glued(Graph.from_edges(g.n + hh.n, edges), (list(range(g.n)), map_h))


@dataclass
class ConditionReport:
    """Per-condition verdicts; ``details[name]`` lists ``(claim, witness-or-None)``."""

    verdicts: dict[str, bool] = field(default_factory=dict)
    details: dict[str, list[tuple[str, object]]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.verdicts) and all(self.verdicts.values())

    def record(self, name: str, claim: str, witness) -> bool:
        self.details.setdefault(name, []).append((claim, witness))
        return witness is not None


def _path(g, s, t, deleted=(), forbid=(), require=(), **kw):
    if s in deleted or t in deleted:
        return None
    forbid = [e for e in forbid if e[0] not in deleted and e[1] not in deleted and g.has_edge(*e)]
    return find_hamiltonian_path(g, s, t, Constraints.make(require, forbid), deleted=deleted, **kw)


def _pair(g, p1, p2, deleted=(), forbid=(), **kw):
    if set(p1 + p2) & set(deleted):
        return None
    forbid = [e for e in forbid if e[0] not in deleted and e[1] not in deleted and g.has_edge(*e)]
    return find_disjoint_spanning_paths(g, p1, p2, Constraints.make((), forbid), deleted=deleted, **kw)


def _path_or_pairs(g, ab, cd, deleted, forbid, **kw):
    """Either a hamiltonian ab-path avoiding cd, a cd-path avoiding ab, or
    disjoint spanning paths pairing {a, b} with {c, d}, none using ab or cd."""
    a, b = ab
    c, d = cd
    w = _path(g, a, b, deleted, forbid=[cd], **kw)
    if w is not None:
        return "ab-path", w
    w = _path(g, c, d, deleted, forbid=[ab], **kw)
    if w is not None:
        return "cd-path", w
    for t1, t2 in ((c, d), (d, c)):
        w = _pair(g, (a, t1), (b, t2), deleted, forbid=forbid, **kw)
        if w is not None:
            return f"paths {a}-{t1}/{b}-{t2}", w
    return "none", None


def check_dot_conditions_g(g: Graph, a: int, b: int, c: int, d: int, *, stop_early: bool = False,
                           **kw) -> ConditionReport:
    """Conditions (i)--(iii) on the G side of a dot product."""
    check_g_labels(g, a, b, c, d)
    ab, cd = norm_edge(a, b), norm_edge(c, d)
    rep = ConditionReport()

    ok = True
    for v, w in g.edges():
        if (v, w) in (ab, cd):
            continue
        kind, wit = _path_or_pairs(g, (a, b), (c, d), (v, w), (ab, cd), **kw)
        ok &= rep.record("i", f"G-{v}-{w}: {kind}", wit)
        if not ok and stop_early:
            break
    rep.verdicts["i"] = ok
    if stop_early and not ok:
        return rep

    ok = True
    for s in (a, b):
        for t in (c, d):
            ok &= rep.record("ii", f"{s}{t}-path avoiding ab, cd", _path(g, s, t, forbid=(ab, cd), **kw))
    ok &= rep.record("ii", "disjoint ab- and cd-paths avoiding ab, cd", _pair(g, (a, b), (c, d), forbid=(ab, cd), **kw))
    rep.verdicts["ii"] = ok
    if stop_early and not ok:
        return rep

    ok = True
    for gone, edge in ((a, cd), (b, cd), (c, ab), (d, ab)):
        cyc = find_hamiltonian_cycle(g, Constraints.make([edge]), deleted=[gone], **kw)
        ok &= rep.record("iii", f"G-{gone} has a hamiltonian cycle through {edge}", cyc)
    rep.verdicts["iii"] = ok
    return rep


def check_dot_conditions_h(h: Graph, x: int, y: int, primes=None, *, stop_early: bool = False,
                           **kw) -> ConditionReport:
    """Conditions (iv)--(vi) on the H side of a dot product."""
    ap, bp, cp, dp = check_h_labels(h, x, y, primes)
    rep = ConditionReport()
    ok = rep.record("iv", f"H-{x} hamiltonian", find_hamiltonian_cycle(h, deleted=[x], **kw))
    ok &= rep.record("iv", f"H-{y} hamiltonian", find_hamiltonian_cycle(h, deleted=[y], **kw))
    ok &= rep.record("iv", "disjoint a'b'- and c'd'-paths spanning H-x-y", _pair(h, (ap, bp), (cp, dp), (x, y), **kw))
    rep.verdicts["iv"] = ok
    if stop_early and not ok:
        return rep

    ok = True
    for v, w in h.edges():
        if v in (x, y) or w in (x, y):
            continue
        gone = (x, y, v, w)
        found = None
        for s in (ap, bp):
            for t in (cp, dp):
                found = found or _path(h, s, t, gone, **kw)
        if found is None:
            for t1, t2 in ((cp, dp), (dp, cp)):
                found = found or _pair(h, (ap, t1), (bp, t2), gone, **kw)
        ok &= rep.record("v", f"H-x-y-{v}-{w}", found)
        if not ok and stop_early:
            break
    rep.verdicts["v"] = ok
    if stop_early and not ok:
        return rep

    ok = True
    for u, p in ((x, ap), (x, bp), (y, cp), (y, dp)):
        ok &= rep.record("vi", f"H-{u}-{p} hamiltonian", find_hamiltonian_cycle(h, deleted=[u, p], **kw))
    rep.verdicts["vi"] = ok
    return rep


def check_iterative_bullets(g: Graph, a: int, b: int, c: int, d: int, xg: int, yg: int, **kw) -> ConditionReport:
    """The three bullets that let ``(xg, yg)`` satisfy (iv)--(vi) in ``G . H``."""
    rep = ConditionReport()
    problems = []
    if not g.has_edge(xg, yg):
        problems.append("x_G y_G is not an edge")
    if g.degree(xg) != 3 or g.degree(yg) != 3:
        problems.append("x_G and y_G must be cubic")
    closed = {xg, yg, *g.neighbors(xg), *g.neighbors(yg)}
    if closed & {a, b, c, d}:
        problems.append("N[x_G] or N[y_G] meets {a, b, c, d}")
    if problems:
        raise PreconditionError("; ".join(problems))
    ab, cd = norm_edge(a, b), norm_edge(c, d)
    for name, gone in (("x", xg), ("y", yg)):
        w = _path(g, a, b, (gone,), forbid=[cd], **kw) or _path(g, c, d, (gone,), forbid=[ab], **kw)
        rep.verdicts[name] = rep.record(name, f"G-{gone}: ab-path avoiding cd or cd-path avoiding ab", w)
    found = find_disjoint_spanning_paths(g, (a, b), (c, d), where=lambda p, q: (xg in p) != (yg in p), **kw)
    rep.verdicts["split"] = rep.record("split", "disjoint spanning ab-, cd-paths separating x_G, y_G", found)
    return rep


def find_iterative_edges(g: Graph, a: int, b: int, c: int, d: int, **kw) -> list[tuple[int, int]]:
    """All edges ``(xg, yg)`` (both orientations) passing :func:`check_iterative_bullets`."""
    out = []
    for u, v in g.edges():
        for xg, yg in ((u, v), (v, u)):
            try:
                if check_iterative_bullets(g, a, b, c, d, xg, yg, **kw).ok:
                    out.append((xg, yg))
            except PreconditionError:
                pass
    return out


def find_dot_labels_g(g: Graph, first_only: bool = True, **kw) -> list[tuple[int, int, int, int]]:
    """Labels ``(a, b, c, d)`` for which (i)--(iii) hold."""
    out = []
    edges = g.edges()
    for e1 in edges:
        for e2 in edges:
            for a, b in (e1, e1[::-1]):
                for c, d in (e2, e2[::-1]):
                    try:
                        check_g_labels(g, a, b, c, d)
                    except PreconditionError:
                        continue
                    if check_dot_conditions_g(g, a, b, c, d, stop_early=True, **kw).ok:
                        out.append((a, b, c, d))
                        if first_only:
                            return out
    return out


def find_dot_labels_h(h: Graph, first_only: bool = True, **kw) -> list[tuple[int, int]]:
    """Ordered adjacent cubic pairs ``(x, y)`` for which (iv)--(vi) hold."""
    out = []
    for u, v in h.edges():
        for x, y in ((u, v), (v, u)):
            try:
                check_h_labels(h, x, y)
            except PreconditionError:
                continue
            if check_dot_conditions_h(h, x, y, stop_early=True, **kw).ok:
                out.append((x, y))
                if first_only:
                    return out
    return out


def five_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every 5-cycle once, starting at its minimum vertex, second vertex < last."""
    out = []
    for v0 in range(g.n):
        for v1 in g.neighbors(v0):
            if v1 < v0:
                continue
            for v2 in g.neighbors(v1):
                if v2 <= v0 or v2 == v1:
                    continue
                for v3 in g.neighbors(v2):
                    if v3 <= v0 or v3 in (v1,):
                        continue
                    for v4 in g.neighbors(v3):
                        if v4 <= v0 or v4 in (v1, v2) or not g.has_edge(v4, v0) or v4 < v1:
                            continue
                        out.append((v0, v1, v2, v3, v4))
    return out


@dataclass
class ExtendableCycle:
    cycle: tuple[int, ...]
    # witnesses[("i", k)] is a cycle of G - v_k avoiding v_{k-2}v_{k+2};
    # witnesses[("ii", k)] a cycle of G - v'_k meeting C exactly in v_{k-2}..v_{k+2}
    witnesses: dict[tuple[str, int], tuple[int, ...]]


def check_extendable(g: Graph, cyc: tuple[int, ...], **kw) -> ExtendableCycle | None:
    if len(cyc) != 5 or any(g.degree(v) != 3 for v in cyc):
        return None
    on = set(cyc)
    outer = []
    for v in cyc:
        off = [w for w in g.neighbors(v) if w not in on]
        assert len(off) == 1, "a cubic vertex on an induced 5-cycle has one neighbour off it"
        outer.append(off[0])
    wit = {}
    for k in range(5):
        vm2, vm1, v, vp1, vp2 = (cyc[(k + j) % 5] for j in (-2, -1, 0, 1, 2))
        h1 = find_hamiltonian_cycle(g, Constraints.make((), [(vm2, vp2)]), deleted=[v], **kw)
        if h1 is None:
            return None
        wit["i", k] = h1
        if outer[k] in on:
            return None
        cons = Constraints.make([(vm2, vm1), (vm1, v), (v, vp1), (vp1, vp2)], [(vp2, vm2)])
        h2 = find_hamiltonian_cycle(g, cons, deleted=[outer[k]], **kw)
        if h2 is None:
            return None
        wit["ii", k] = h2
    return ExtendableCycle(tuple(cyc), wit)


def find_extendable_5_cycles(g: Graph, first_only: bool = False, **kw) -> list[ExtendableCycle]:
    out = []
    for cyc in five_cycles(g):
        found = check_extendable(g, cyc, **kw)
        if found is not None:
            out.append(found)
            if first_only:
                break
    return out
