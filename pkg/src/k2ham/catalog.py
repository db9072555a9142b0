"""Constructors for the concrete graphs used as examples and fixtures."""

from __future__ import annotations

from itertools import combinations

from .errors import PreconditionError
from .graph import Graph

# Figure labels of J18 are 1-based; the graph below is 0-based.
J18_FIGURE_EDGES = [
    (1, 2), (1, 4), (2, 3), (2, 11), (3, 7), (4, 5), (4, 13), (5, 6), (5, 14),
    (6, 10), (7, 8), (7, 15), (8, 9), (8, 16), (9, 10), (10, 12), (11, 13),
    (11, 15), (12, 14), (12, 16), (13, 17), (14, 17), (15, 18), (16, 18), (17, 18),
]
J18_OUTER = (5, 8, 2, 0)  # a, b, c, d

# Drawing coordinates of J18 (0-based), used to derive its plane rotation system.
J18_COORDS = {
    0: (0, 0), 1: (2, 0), 2: (4, 0), 3: (0, 2), 4: (0, 4), 5: (0, 6),
    6: (4, 2), 7: (4, 4), 8: (4, 6), 9: (2, 6), 10: (2, 1), 11: (2, 5),
    12: (1, 2), 13: (1, 4), 14: (3, 2), 15: (3, 4), 16: (1.5, 3), 17: (2.5, 3),
}


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def prism(k: int = 3) -> Graph:
    """The circular ladder C_k x K_2."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph.from_edges(2 * k, edges)


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer n-cycle ``0..n-1``, spokes ``i -- n+i``, inner steps of ``k``."""
    if not (n > 2 * k and k >= 1):
        raise PreconditionError("GP(n, k) requires n > 2k >= 2")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def flower(k: int) -> Graph:
    """Flower snark J_k on 4k vertices.

    Vertex ``4i`` is the centre of claw ``i``; ``4i+1`` (a_i) lies on a
    k-cycle, ``4i+2`` (b_i) and ``4i+3`` (c_i) on a common 2k-cycle.
    """
    if k < 5 or k % 2 == 0:
        raise PreconditionError("flower snarks need odd k >= 5")
    t, a, b, c = (lambda i: 4 * i), (lambda i: 4 * i + 1), (lambda i: 4 * i + 2), (lambda i: 4 * i + 3)
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(t(i), a(i)), (t(i), b(i)), (t(i), c(i)), (a(i), a(j))]
        if j:
            edges += [(b(i), b(j)), (c(i), c(j))]
        else:
            edges += [(b(i), c(0)), (c(i), b(0))]
    return Graph.from_edges(4 * k, edges)


def cube(d: int) -> Graph:
    if d < 1:
        raise PreconditionError("cube dimension must be at least 1")
    n = 1 << d
    return Graph.from_edges(n, ((v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)))


def coxeter() -> Graph:
    """Coxeter graph: a_i, b_i, c_i on 7-cycles of steps 1, 2, 3, each joined to d_i."""
    edges = []
    for i in range(7):
        edges += [(i, (i + 1) % 7), (7 + i, 7 + (i + 2) % 7), (14 + i, 14 + (i + 3) % 7)]
        edges += [(21 + i, i), (21 + i, 7 + i), (21 + i, 14 + i)]
    return Graph.from_edges(28, edges)


def j18() -> Graph:
    return Graph.from_edges(18, ((u - 1, v - 1) for u, v in J18_FIGURE_EDGES))


def triangle_replaced_k4() -> Graph:
    """K4 with every vertex expanded into a triangle (truncated tetrahedron)."""
    # vertex (v, w) sits in the triangle of v on the edge towards w
    index = {}
    for v in range(4):
        for w in range(4):
            if v != w:
                index[v, w] = len(index)
    edges = [(index[v, w], index[w, v]) for v, w in combinations(range(4), 2)]
    for v in range(4):
        others = [index[v, w] for w in range(4) if w != v]
        edges += list(combinations(others, 2))
    return Graph.from_edges(12, edges)


def wheel19() -> Graph:
    """19-vertex graph: 15-cycle ``0..14``, hub 15, spokes 16, 17, 18.

    Spoke ``16 + j`` is adjacent to the hub and to every cycle vertex
    ``i`` with ``i % 3 == j``.
    """
    edges = [(i, (i + 1) % 15) for i in range(15)]
    edges += [(15, 16 + j) for j in range(3)]
    edges += [(16 + i % 3, i) for i in range(15)]
    return Graph.from_edges(19, edges)


def dodecahedron() -> Graph:
    """GP(10, 2)."""
    return generalized_petersen(10, 2)


CATALOG = {
    "petersen": petersen,
    "gp": generalized_petersen,
    "flower": flower,
    "cube": cube,
    "coxeter": coxeter,
    "j18": j18,
    "triangle_replaced_k4": triangle_replaced_k4,
    "wheel19": wheel19,
    "dodecahedron": dodecahedron,
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "star": star,
    "prism": prism,
}


def named(name: str, *params: int) -> Graph:
    """Look up a graph by catalog name, e.g. ``named("gp", 11, 2)``."""
    try:
        build = CATALOG[name.lower()]
    except KeyError:
        raise PreconditionError(f"unknown graph name {name!r}; known: {', '.join(sorted(CATALOG))}") from None
    try:
        return build(*params)
    except TypeError as exc:
        raise PreconditionError(f"bad parameters for {name}: {exc}") from None


def parse_name(spec: str) -> Graph:
    """Parse ``"gp:11,2"`` / ``"flower:5"`` / ``"petersen"`` style names."""
    name, _, args = spec.partition(":")
    params = [int(p) for p in args.split(",") if p.strip()] if args else []
    return named(name, *params)
