"""Search-free witness validators and replayable JSON certificates."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field

from . import __version__
from .formats import decode_graph6, encode_graph6
from .graph import Graph, norm_edge

SCHEMA = 1


def _edges_of(seq, closed: bool) -> set[tuple[int, int]]:
    k = len(seq)
    pairs = zip(seq, seq[1:] + seq[:1]) if closed and k > 2 else zip(seq, seq[1:])
    return {norm_edge(u, v) for u, v in pairs}


def _problems_walk(g: Graph, seq, closed: bool) -> list[str]:
    out = []
    if len(set(seq)) != len(seq):
        out.append("repeated vertex")
    if any(not 0 <= v < g.n for v in seq):
        out.append("vertex out of range")
        return out
    for u, v in sorted(_edges_of(list(seq), closed)):
        if not g.has_edge(u, v):
            out.append(f"{u}-{v} is not an edge")
    return out


def validate_cycle(g: Graph, seq, deleted=(), required=(), forbidden=()) -> list[str]:
    """Problems with ``seq`` as a hamiltonian cycle of ``g - deleted``; empty means valid."""
    seq = list(seq)
    out = _problems_walk(g, seq, closed=True)
    if len(seq) < 3:
        out.append("a cycle needs three vertices")
    alive = set(range(g.n)) - set(deleted)
    if set(seq) != alive:
        out.append("does not cover exactly the surviving vertices")
    used = _edges_of(seq, closed=True)
    out += _constraint_problems(used, required, forbidden)
    return out


def validate_path(g: Graph, seq, s: int, t: int, deleted=(), required=(), forbidden=()) -> list[str]:
    seq = list(seq)
    out = _problems_walk(g, seq, closed=False)
    if not seq or seq[0] != s or seq[-1] != t:
        out.append(f"does not run from {s} to {t}")
    if set(seq) != set(range(g.n)) - set(deleted):
        out.append("does not cover exactly the surviving vertices")
    out += _constraint_problems(_edges_of(seq, closed=False), required, forbidden)
    return out


def validate_path_pair(g: Graph, p, q, pair1, pair2, deleted=(), forbidden=()) -> list[str]:
    p, q = list(p), list(q)
    out = _problems_walk(g, p, False) + _problems_walk(g, q, False)
    if not p or not q or (p[0], p[-1]) != tuple(pair1) or (q[0], q[-1]) != tuple(pair2):
        out.append("wrong endpoints")
    if set(p) & set(q):
        out.append("paths intersect")
    if set(p) | set(q) != set(range(g.n)) - set(deleted):
        out.append("paths do not span the surviving vertices")
    out += _constraint_problems(_edges_of(p, False) | _edges_of(q, False), (), forbidden)
    return out


def _constraint_problems(used, required, forbidden) -> list[str]:
    out = []
    for e in required:
        if norm_edge(*e) not in used:
            out.append(f"misses required edge {tuple(e)}")
    for e in forbidden:
        if norm_edge(*e) in used:
            out.append(f"uses forbidden edge {tuple(e)}")
    return out


@dataclass
class Certificate:
    """A claim about ``subject`` (graph6) backed by cycle witnesses.

    ``witnesses`` entries: ``{"deleted": [...], "cycle": [...]}``, optionally
    with ``required``/``forbidden`` edge lists. ``searched`` records claims
    established by exhaustive search, which replay cannot re-check.
    """

    subject: str
    claim: str
    witnesses: list[dict] = field(default_factory=list)
    searched: dict[str, bool] = field(default_factory=dict)
    version: int = SCHEMA
    tool: str = f"k2ham {__version__}"
    seconds: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        data = json.loads(text)
        if data.get("version") != SCHEMA:
            raise ValueError(f"unsupported certificate version {data.get('version')}")
        return cls(**data)


def _required_deletions(g: Graph, claim: str) -> list[tuple[int, ...]] | None:
    if claim in ("k1", "hypo"):
        return [(v,) for v in range(g.n)]
    if claim in ("k2", "k2hypo"):
        return [tuple(e) for e in g.edges()]
    if claim == "hamiltonian":
        return [()]
    return None


def replay(cert: Certificate) -> list[str]:
    """Re-check every witness and the coverage the claim needs. Empty list means accepted."""
    g = decode_graph6(cert.subject)
    out = []
    seen = set()
    for w in cert.witnesses:
        d = tuple(w.get("deleted", ()))
        errs = validate_cycle(g, w["cycle"], d, w.get("required", ()), w.get("forbidden", ()))
        out += [f"deleted {list(d)}: {e}" for e in errs]
        seen.add(tuple(sorted(d)))
    need = _required_deletions(g, cert.claim)
    if need is not None:
        missing = [d for d in need if tuple(sorted(d)) not in seen]
        out += [f"no witness for deletion {list(d)}" for d in missing]
    return out


def certify(g: Graph, claim: str, timed: bool = True, **kw) -> Certificate:
    """Run the predicate named by ``claim`` and package its witnesses.

    Raises ValueError when the claim is false, since only true claims
    have witness certificates. ``timed=False`` zeroes the timing field so
    output is reproducible byte for byte.
    """
    from .engine import find_hamiltonian_cycle
    from .predicates import is_hypohamiltonian, is_k1_hamiltonian, is_k2_hamiltonian, is_k2_hypohamiltonian

    t0 = time.perf_counter()
    searched = {}
    if claim == "hamiltonian":
        cyc = find_hamiltonian_cycle(g, **kw)
        ok, wit = cyc is not None, {(): cyc}
    else:
        fn = {"k1": is_k1_hamiltonian, "k2": is_k2_hamiltonian, "hypo": is_hypohamiltonian,
              "k2hypo": is_k2_hypohamiltonian}.get(claim)
        if fn is None:
            raise ValueError(f"no certificate form for claim {claim!r}")
        rep = fn(g, **kw)
        ok, wit = rep.verdict, rep.witnesses
        if claim in ("hypo", "k2hypo"):
            searched["non_hamiltonian"] = rep.checks.get("non_hamiltonian", False)
    if not ok:
        raise ValueError(f"claim {claim!r} is false for this graph")
    ws = [{"deleted": list(d), "cycle": list(c)} for d, c in wit.items()]
    return Certificate(encode_graph6(g).decode(), claim, ws, searched, seconds=round(time.perf_counter() - t0, 6) if timed else 0.0)
