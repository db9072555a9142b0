"""Suitable cells, K1-cells, K2-cells and the cyclic cell-gluing construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .engine import find_disjoint_spanning_paths, find_hamiltonian_path
from .errors import PreconditionError
from .graph import Graph, disjoint_union

ROLES = "abcd"
# the four pairs that must be good (1.1) and the two that must be bad (1.2)
GOOD_PAIRS = (("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"))
BAD_PAIRS = (("a", "d"), ("b", "c"))
GOOD_PAIR_OF_PAIRS = (("a", "b"), ("c", "d"))
BAD_PAIRS_OF_PAIRS = ((("a", "d"), ("b", "c")), (("a", "c"), ("b", "d")))
# 1.6: deleting the first pair leaves the second pair good
COMPLEMENT_PAIRS = ((("a", "c"), ("b", "d")), (("a", "d"), ("b", "c")),
                    (("b", "c"), ("a", "d")), (("b", "d"), ("a", "c")))
# 2.2 to 2.5: outer vertex, pair that must be good after deleting it and a neighbour
NEIGHBOUR_RULES = {"2.2": ("a", ("b", "c")), "2.3": ("d", ("b", "c")),
                   "2.4": ("b", ("a", "d")), "2.5": ("c", ("a", "d"))}
# outer-role permutations that map every property list onto itself
SYMMETRIES = ((0, 1, 2, 3), (3, 2, 1, 0), (1, 0, 3, 2), (2, 3, 0, 1))


@dataclass(frozen=True)
class Cell:
    graph: Graph
    outer: tuple[int, int, int, int]

    def __post_init__(self):
        if len(set(self.outer)) != 4:
            raise PreconditionError("outer vertices must be pairwise distinct")
        if not all(0 <= v < self.graph.n for v in self.outer):
            raise PreconditionError("outer vertex outside the graph")
        if self.graph.n < 5:
            raise PreconditionError("a cell needs at least five vertices")

    def role(self, r: str) -> int:
        return self.outer[ROLES.index(r)]

    @property
    def inner(self) -> list[int]:
        return [v for v in range(self.graph.n) if v not in self.outer]

    def relabeled(self, sym) -> Cell:
        return Cell(self.graph, tuple(self.outer[i] for i in sym))


@dataclass
class Check:
    """One good/bad claim. ``witness`` is a path or path pair in cell labels."""

    claim: str
    ok: bool
    witness: object = None


@dataclass
class CellVerdict:
    suitable: bool
    k1: bool = False
    k2: bool = False
    properties: dict[str, list[Check]] = field(default_factory=dict)

    def failed(self) -> list[str]:
        return [p for p, checks in self.properties.items() if not all(c.ok for c in checks)]

    def summary(self) -> str:
        mark = {True: "✓", False: "✗"}
        return f"suitable {mark[self.suitable]} k1 {mark[self.k1]} k2 {mark[self.k2]}"


def good_pair(g: Graph, u: int, v: int, **kw) -> bool:
    return pair_witness(g, (), u, v, **kw) is not None


def good_pair_of_pairs(g: Graph, p1: tuple[int, int], p2: tuple[int, int], **kw) -> bool:
    return pairs_witness(g, (), p1, p2, **kw) is not None


def pair_witness(g: Graph, deleted, u: int, v: int, **kw):
    """Hamiltonian ``uv``-path of ``g - deleted``, or None."""
    if u in deleted or v in deleted:
        return None
    return find_hamiltonian_path(g, u, v, deleted=deleted, **kw)


def pairs_witness(g: Graph, deleted, p1, p2, **kw):
    if set(p1 + p2) & set(deleted):
        return None
    return find_disjoint_spanning_paths(g, p1, p2, deleted=deleted, **kw)


class _Oracle:
    """Memoised good/bad queries on one graph (cell labels in, witnesses out)."""

    def __init__(self, g: Graph, **kw):
        self.g = g
        self.kw = kw
        self.pair = lru_cache(maxsize=None)(self._pair)
        self.pairs = lru_cache(maxsize=None)(self._pairs)

    def _pair(self, deleted: frozenset, u: int, v: int):
        if u > v:
            u, v = v, u
        return pair_witness(self.g, tuple(sorted(deleted)), u, v, **self.kw)

    def _pairs(self, deleted: frozenset, p1, p2):
        return pairs_witness(self.g, tuple(sorted(deleted)), p1, p2, **self.kw)


def _name(pair):
    return f"({pair[0]},{pair[1]})"


def _suitable_checks(cell: Cell, orc: _Oracle, stop_early: bool = False) -> dict[str, list[Check]]:
    R = cell.role
    props: dict[str, list[Check]] = {}
    none = frozenset()

    def add(prop, claim, want_good, witness):
        props.setdefault(prop, []).append(Check(claim, (witness is not None) == want_good, witness))
        return props[prop][-1].ok

    plan = []
    for p in GOOD_PAIRS:
        plan.append(("1.1", f"{_name(p)} good", True, lambda p=p: orc.pair(none, R(p[0]), R(p[1]))))
    for p in BAD_PAIRS:
        plan.append(("1.2", f"{_name(p)} bad", False, lambda p=p: orc.pair(none, R(p[0]), R(p[1]))))
    p1, p2 = GOOD_PAIR_OF_PAIRS
    plan.append(("1.3", f"({_name(p1)},{_name(p2)}) good", True,
                 lambda: orc.pairs(none, (R(p1[0]), R(p1[1])), (R(p2[0]), R(p2[1])))))
    for q1, q2 in BAD_PAIRS_OF_PAIRS:
        plan.append(("1.4", f"({_name(q1)},{_name(q2)}) bad", False,
                     lambda q1=q1, q2=q2: orc.pairs(none, (R(q1[0]), R(q1[1])), (R(q2[0]), R(q2[1])))))
    for sub, pairs in (("1.5(a)", GOOD_PAIRS), ("1.5(b)", BAD_PAIRS)):
        for v in ROLES:
            for p in pairs:
                if v in p:
                    continue
                plan.append((sub, f"{_name(p)} bad in G-{v}", False,
                             lambda v=v, p=p: orc.pair(frozenset([R(v)]), R(p[0]), R(p[1]))))
    for dead, live in COMPLEMENT_PAIRS:
        plan.append(("1.6", f"{_name(live)} good in G-{dead[0]}-{dead[1]}", True,
                     lambda dead=dead, live=live: orc.pair(frozenset([R(dead[0]), R(dead[1])]), R(live[0]), R(live[1]))))
    for prop, claim, want, query in plan:
        if not add(prop, claim, want, query()) and stop_early:
            break
    return props


def _newly_good(cell: Cell, orc: _Oracle, deleted: frozenset) -> Check | None:
    """First bad configuration of 1.2, 1.4 or 1.5(a) that is good after ``deleted``."""
    R = cell.role
    for p in BAD_PAIRS:
        w = orc.pair(deleted, R(p[0]), R(p[1]))
        if w is not None:
            return Check(f"1.2: {_name(p)}", True, w)
    for q1, q2 in BAD_PAIRS_OF_PAIRS:
        w = orc.pairs(deleted, (R(q1[0]), R(q1[1])), (R(q2[0]), R(q2[1])))
        if w is not None:
            return Check(f"1.4: ({_name(q1)},{_name(q2)})", True, w)
    for v in ROLES:
        for p in GOOD_PAIRS:
            if v in p:
                continue
            w = orc.pair(deleted | {R(v)}, R(p[0]), R(p[1]))
            if w is not None:
                return Check(f"1.5: {_name(p)} in G-{v}", True, w)
    return None


def check_suitable(cell: Cell, *, stop_early: bool = False, _orc: _Oracle | None = None, **kw) -> CellVerdict:
    orc = _orc or _Oracle(cell.graph, **kw)
    props = _suitable_checks(cell, orc, stop_early)
    ok = len(props) == 7 and all(c.ok for checks in props.values() for c in checks)
    return CellVerdict(ok, properties=props)


def _k1_checks(cell: Cell, orc: _Oracle, stop_early: bool) -> list[Check]:
    out = []
    for x in cell.inner:
        found = _newly_good(cell, orc, frozenset([x]))
        out.append(Check(f"G-{x}: " + (found.claim if found else "no bad configuration becomes good"),
                         found is not None, found.witness if found else None))
        if found is None and stop_early:
            break
    return out


def _k2_checks(cell: Cell, orc: _Oracle, stop_early: bool) -> dict[str, list[Check]]:
    g = cell.graph
    props: dict[str, list[Check]] = {"2.1": []}
    inner = set(cell.inner)
    for x, y in g.edges():
        if x in inner and y in inner:
            found = _newly_good(cell, orc, frozenset([x, y]))
            props["2.1"].append(Check(f"G-{x}-{y}: " + (found.claim if found else "no bad configuration becomes good"),
                                      found is not None, found.witness if found else None))
            if found is None and stop_early:
                return props
    for prop, (o, pair) in NEIGHBOUR_RULES.items():
        props[prop] = []
        ov = cell.role(o)
        for x in g.neighbors(ov):
            w = orc.pair(frozenset([ov, x]), cell.role(pair[0]), cell.role(pair[1]))
            props[prop].append(Check(f"{_name(pair)} good in G-{o}-{x}", w is not None, w))
            if w is None and stop_early:
                return props
    return props


def check_k1_cell(cell: Cell, *, stop_early: bool = False, **kw) -> CellVerdict:
    orc = _Oracle(cell.graph, **kw)
    verdict = check_suitable(cell, stop_early=stop_early, _orc=orc)
    if verdict.suitable:
        verdict.properties["K1"] = _k1_checks(cell, orc, stop_early)
        verdict.k1 = all(c.ok for c in verdict.properties["K1"])
    return verdict


def check_k2_cell(cell: Cell, *, stop_early: bool = False, **kw) -> CellVerdict:
    orc = _Oracle(cell.graph, **kw)
    verdict = check_suitable(cell, stop_early=stop_early, _orc=orc)
    if verdict.suitable:
        k2 = _k2_checks(cell, orc, stop_early)
        verdict.properties.update(k2)
        verdict.k2 = len(k2) == 5 and all(c.ok for checks in k2.values() for c in checks)
    return verdict


def check_cell(cell: Cell, *, stop_early: bool = False, **kw) -> CellVerdict:
    """Suitability plus both the K1 and K2 levels, sharing one query cache."""
    orc = _Oracle(cell.graph, **kw)
    verdict = check_suitable(cell, stop_early=stop_early, _orc=orc)
    if verdict.suitable:
        verdict.properties["K1"] = _k1_checks(cell, orc, stop_early)
        verdict.k1 = all(c.ok for c in verdict.properties["K1"])
        k2 = _k2_checks(cell, orc, stop_early)
        verdict.properties.update(k2)
        verdict.k2 = len(k2) == 5 and all(c.ok for checks in k2.values() for c in checks)
    return verdict


def canonical_outer(outer) -> tuple[int, int, int, int]:
    return min(tuple(outer[i] for i in sym) for sym in SYMMETRIES)


def find_cells(g: Graph, level: str = "suitable", dedupe: bool = True, **kw) -> list[Cell]:
    """All outer labelings making ``g`` a cell of the given level.

    ``level`` is ``"suitable"``, ``"k1"``, ``"k2"`` or ``"k1k2"``. With
    ``dedupe`` only the canonical labeling of each symmetry orbit is kept.
    """
    if g.n < 5:
        raise PreconditionError("a cell needs at least five vertices")
    if level not in ("suitable", "k1", "k2", "k1k2"):
        raise PreconditionError(f"unknown cell level {level!r}")
    orc = _Oracle(g, **kw)
    none = frozenset()
    good = {(u, v): orc.pair(none, u, v) is not None for u in range(g.n) for v in range(g.n) if u != v}
    out = []
    for outer in permutations(range(g.n), 4):
        if dedupe and canonical_outer(outer) != outer:
            continue
        a, b, c, d = outer
        if not (good[a, b] and good[a, c] and good[b, d] and good[c, d]) or good[a, d] or good[b, c]:
            continue
        cell = Cell(g, outer)
        verdict = check_suitable(cell, stop_early=True, _orc=orc)
        if not verdict.suitable:
            continue
        if level in ("k1", "k1k2"):
            if not all(c.ok for c in _k1_checks(cell, orc, True)):
                continue
        if level in ("k2", "k1k2"):
            k2 = _k2_checks(cell, orc, True)
            if not (len(k2) == 5 and all(c.ok for checks in k2.values() for c in checks)):
                continue
        out.append(cell)
    return out


@dataclass
class Composite:
    graph: Graph
    maps: list[list[int]]  # maps[i][v] = vertex of the composite for vertex v of cell i


def build_gamma(cells: list[Cell], variant: str = "k2", verify: bool = True, **kw) -> Composite:
    """Glue ``k`` cells in a ring, identifying ``b_i`` with ``a_{i+1}`` and ``c_i`` with ``d_{i+1}``.

    Cell 0 keeps its labels; later cells are numbered upwards in order.
    """
    k = len(cells)
    if k < 3 or k % 2 == 0:
        raise PreconditionError("the ring needs an odd number k >= 3 of cells")
    if variant not in ("k1", "k2"):
        raise PreconditionError("variant must be 'k1' or 'k2'")
    if verify:
        check = check_k1_cell if variant == "k1" else check_k2_cell
        memo: dict[Cell, bool] = {}
        for i, cell in enumerate(cells):
            if cell not in memo:
                v = check(cell, stop_early=True, **kw)
                memo[cell] = v.k1 if variant == "k1" else v.k2
            if not memo[cell]:
                raise PreconditionError(f"cell {i} is not a {variant.upper()}-cell")
    union, offsets = disjoint_union(*(c.graph for c in cells))
    parent = list(range(union.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, cell in enumerate(cells):
        nxt = cells[(i + 1) % k]
        j = (i + 1) % k
        for here, there in (("b", "a"), ("c", "d")):
            u = find(offsets[i] + cell.role(here))
            w = find(offsets[j] + nxt.role(there))
            # the representative is the earlier vertex, so cell 0 keeps its labels
            lo, hi = min(u, w), max(u, w)
            parent[hi] = lo
    label: dict[int, int] = {}
    for v in range(union.n):
        r = find(v)
        if r not in label:
            label[r] = len(label)
    edges = {tuple(sorted((label[find(u)], label[find(v)]))) for u, v in union.edges()}
    graph = Graph.from_edges(len(label), sorted(edges))
    maps = [[label[find(offsets[i] + v)] for v in range(c.graph.n)] for i, c in enumerate(cells)]
    return Composite(graph, maps)
