"""Rotation systems, face traversal and Grinberg's criterion."""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

from .errors import GraphError, PreconditionError
from .graph import Graph, is_connected, norm_edge


@dataclass(frozen=True)
class Embedding:
    """Clockwise neighbour order per vertex."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rotation) != self.graph.n:
            raise GraphError("one rotation per vertex expected")
        for v, rot in enumerate(self.rotation):
            if len(set(rot)) != len(rot) or sorted(rot) != self.graph.neighbors(v):
                raise GraphError(f"rotation at {v} is not a permutation of its neighbours")

    @classmethod
    def from_rotation(cls, rotation) -> Embedding:
        """Build graph and embedding together; rejects one-sided adjacencies."""
        rotation = tuple(tuple(r) for r in rotation)
        n = len(rotation)
        for v, rot in enumerate(rotation):
            for w in rot:
                if not 0 <= w < n:
                    raise GraphError(f"vertex {v} lists {w}, outside 0..{n - 1}")
                if v not in rotation[w]:
                    raise GraphError(f"inconsistent rotation: {v} lists {w} but not vice versa")
        edges = {norm_edge(v, w) for v, rot in enumerate(rotation) for w in rot}
        return cls(Graph.from_edges(n, sorted(edges)), rotation)

    @classmethod
    def from_coordinates(cls, g: Graph, coords) -> Embedding:
        """Clockwise order of each neighbourhood in a straight-line drawing."""
        rot = []
        for v in range(g.n):
            x0, y0 = coords[v]
            rot.append(tuple(sorted(g.neighbors(v), key=lambda w: -math.atan2(coords[w][1] - y0, coords[w][0] - x0))))
        return cls(g, tuple(rot))

    def successor(self, v: int, u: int) -> int:
        rot = self.rotation[v]
        return rot[(rot.index(u) + 1) % len(rot)]


@dataclass(frozen=True)
class FaceSet:
    embedding: Embedding
    faces: tuple[tuple[int, ...], ...]  # boundary walks; face k uses darts (w[i], w[i+1])

    @property
    def sizes(self) -> list[int]:
        return [len(f) for f in self.faces]

    def residues(self) -> list[int]:
        return [len(f) % 3 for f in self.faces]

    def darts(self, k: int):
        f = self.faces[k]
        return [(f[i], f[(i + 1) % len(f)]) for i in range(len(f))]

    def face_of_dart(self) -> dict[tuple[int, int], int]:
        return {d: k for k in range(len(self.faces)) for d in self.darts(k)}


def faces(emb: Embedding) -> FaceSet:
    """Trace faces by following ``(u, v) -> (v, succ_v(u))``; enforces Euler's formula."""
    g = emb.graph
    if not is_connected(g):
        raise PreconditionError("face traversal needs a connected graph")
    seen: set[tuple[int, int]] = set()
    walks = []
    for u in range(g.n):
        for v in emb.rotation[u]:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = b, emb.successor(b, a)
            if (a, b) != (u, v):
                raise GraphError("face walk did not close")
            walks.append(tuple(walk))
    assert len(seen) == 2 * g.m and sum(map(len, walks)) == 2 * g.m, "every dart lies on exactly one face"
    if g.n - g.m + len(walks) != 2:
        raise GraphError(f"Euler check failed: V - E + F = {g.n - g.m + len(walks)}; not a plane embedding")
    return FaceSet(emb, tuple(walks))


class InconsistentSides(PreconditionError):
    """A side assignment that contradicts the cycle; ``sigma`` holds the sum it would give."""

    def __init__(self, msg: str, sigma: int):
        super().__init__(msg)
        self.sigma = sigma


def _edge_faces(fs: FaceSet) -> dict[tuple[int, int], tuple[int, int]]:
    fod = fs.face_of_dart()
    return {(u, v): (fod[u, v], fod[v, u]) for u, v in fs.embedding.graph.edges()}


def _check_cycle(g: Graph, cycle) -> set[tuple[int, int]]:
    if len(cycle) != g.n or len(set(cycle)) != g.n:
        raise PreconditionError("not a hamiltonian cycle of the embedded graph")
    edges = {norm_edge(cycle[i], cycle[(i + 1) % g.n]) for i in range(g.n)}
    if not all(g.has_edge(*e) for e in edges):
        raise PreconditionError("cycle uses a non-edge")
    return edges


def cycle_sides(fs: FaceSet, cycle) -> list[int]:
    """Side (0/1) of every face: equal across chords, opposite across cycle edges."""
    on = _check_cycle(fs.embedding.graph, cycle)
    nbrs: dict[int, list[tuple[int, int]]] = {k: [] for k in range(len(fs.faces))}
    for e, (f1, f2) in _edge_faces(fs).items():
        flip = 1 if e in on else 0
        nbrs[f1].append((f2, flip))
        nbrs[f2].append((f1, flip))
    side = [-1] * len(fs.faces)
    side[0] = 0
    stack = [0]
    while stack:
        f = stack.pop()
        for h, flip in nbrs[f]:
            want = side[f] ^ flip
            if side[h] < 0:
                side[h] = want
                stack.append(h)
            elif side[h] != want:
                raise GraphError("faces cannot be split consistently by this cycle")
    return side


def grinberg_sum(fs: FaceSet, cycle, side_assignment=None) -> int:
    """``sum (s - 2)(f_s - f'_s)`` over faces inside versus outside ``cycle``.

    Without ``side_assignment`` the sides are derived from the embedding.
    A supplied assignment that disagrees with the cycle raises
    :class:`InconsistentSides` carrying the (generally nonzero) sum.
    """
    sides = cycle_sides(fs, cycle) if side_assignment is None else list(side_assignment)
    if len(sides) != len(fs.faces) or not set(sides) <= {0, 1}:
        raise PreconditionError("side assignment must give 0 or 1 for every face")
    sigma = sum((len(f) - 2) * (1 if s == 0 else -1) for f, s in zip(fs.faces, sides))
    if side_assignment is not None:
        on = _check_cycle(fs.embedding.graph, cycle)
        for e, (f1, f2) in _edge_faces(fs).items():
            if (sides[f1] != sides[f2]) != (e in on):
                raise InconsistentSides(f"faces {f1} and {f2} across edge {e} are on the wrong sides", sigma)
    return sigma


def grinbergian_obstruction(fs: FaceSet) -> bool:
    """True iff exactly one face has size not congruent to 2 mod 3.

    Then every side split gives a sum that is nonzero mod 3, so the graph
    has no hamiltonian cycle.
    """
    odd = [f for f in fs.faces if (len(f) - 2) % 3]
    return len(odd) == 1


def add_edge_in_face(emb: Embedding, u: int, v: int, face: tuple[int, ...]) -> Embedding:
    """Draw the new edge ``uv`` inside ``face``, splitting it in two."""
    if emb.graph.has_edge(u, v):
        raise PreconditionError(f"{u} and {v} are already adjacent")
    if u not in face or v not in face or face.count(u) > 1 or face.count(v) > 1:
        raise PreconditionError("both endpoints must appear once on the face")
    rot = [list(r) for r in emb.rotation]
    k = len(face)
    for x, y in ((u, v), (v, u)):
        prev = face[(face.index(x) - 1) % k]
        r = rot[x]
        r.insert(r.index(prev) + 1, y)
    return Embedding.from_rotation(rot)


def _load(name: str) -> Embedding:
    from .formats import decode_embedding
    text = resources.files("k2ham.data").joinpath(name).read_text()
    return decode_embedding(text)[1]


def dodecahedron_embedding() -> Embedding:
    return _load("dodecahedron.emb")


def j18_embedding() -> Embedding:
    return _load("j18.emb")


def k4_embedding() -> Embedding:
    return Embedding.from_rotation([(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)])
