"""Streaming graph6 filter with ordered multi-process fan-out."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from multiprocessing import get_all_start_methods, get_context
from typing import Iterable, Iterator

from .errors import K2HamError, ParseError, Undecided
from .formats import decode_any
from .graph import Graph, girth, is_connected
from .predicates import (cubic_chromatic_class, is_hypohamiltonian, is_k1_hamiltonian, is_k2_hamiltonian,
                         is_k2_hypohamiltonian, is_snark)
from .engine import is_hamiltonian

JOBS_ENV = "K2HAM_JOBS"


def _girth_at_least(k):
    return lambda g, **kw: girth(g) >= k


def _cell_suitable(g, **kw):
    from .cells import find_cells
    return g.n >= 5 and bool(find_cells(g, "suitable", **kw))


def _safe(fn, min_n):
    # predicates with a size precondition simply fail on smaller graphs
    return lambda g, **kw: g.n >= min_n and bool(fn(g, **kw))


PREDICATES = {
    "hamiltonian": lambda g, **kw: g.n >= 3 and is_hamiltonian(g, **kw),
    "k1": _safe(is_k1_hamiltonian, 4),
    "k2": _safe(is_k2_hamiltonian, 5),
    "hypo": _safe(is_hypohamiltonian, 5),
    "k2hypo": _safe(is_k2_hypohamiltonian, 5),
    "snark": lambda g, **kw: bool(is_snark(g)),
    "cubic": lambda g, **kw: g.is_regular(3),
    "class2": lambda g, **kw: g.is_regular(3) and cubic_chromatic_class(g) == 2,
    "connected": lambda g, **kw: is_connected(g),
    "cell-suitable": _cell_suitable,
}
CERTIFIABLE = {"hamiltonian", "k1", "k2", "hypo", "k2hypo"}


def resolve_predicate(name: str):
    """Catalog lookup; ``girth>=5`` style names are parsed."""
    if name.startswith("girth>="):
        try:
            return _girth_at_least(int(name[len("girth>="):]))
        except ValueError:
            pass
    elif name in PREDICATES:
        return PREDICATES[name]
    known = ", ".join(sorted(PREDICATES) + ["girth>=K"])
    raise K2HamError(f"unknown predicate {name!r}; known: {known}")


@dataclass(frozen=True)
class FilterSpec:
    predicate: str
    negate: bool = False
    jobs: int = 1
    mode: str = "graphs"  # graphs | count | certificates
    budget: int | None = None

    def __post_init__(self):
        if self.jobs < 1:
            raise K2HamError("job count must be at least 1")
        if self.mode not in ("graphs", "count", "certificates"):
            raise K2HamError(f"unknown output mode {self.mode!r}")
        if self.mode == "certificates" and (self.negate or self.predicate not in CERTIFIABLE):
            raise K2HamError(f"certificates are available for {', '.join(sorted(CERTIFIABLE))} without --not")
        resolve_predicate(self.predicate)


@dataclass
class Outcome:
    lineno: int
    line: str
    status: str  # match | reject | undecided | error
    message: str = ""
    certificate: str = ""


@dataclass
class Summary:
    total: int = 0
    matched: int = 0
    undecided: int = 0
    errors: int = 0

    def add(self, o: Outcome):
        self.total += 1
        if o.status == "match":
            self.matched += 1
        elif o.status == "undecided":
            self.undecided += 1
        elif o.status == "error":
            self.errors += 1

    def line(self) -> str:
        return f"total {self.total} matched {self.matched} undecided {self.undecided} errors {self.errors}"


def evaluate(spec: FilterSpec, lineno: int, line: str) -> Outcome:
    """Decode one line and apply the predicate; never raises for bad input."""
    try:
        g = decode_any(line)
    except (ParseError, K2HamError) as exc:
        return Outcome(lineno, line, "error", str(exc))
    kw = {"budget": spec.budget} if spec.budget is not None else {}
    try:
        hit = bool(resolve_predicate(spec.predicate)(g, **kw)) != spec.negate
    except Undecided as exc:
        return Outcome(lineno, line, "undecided", str(exc))
    except K2HamError as exc:
        return Outcome(lineno, line, "error", str(exc))
    cert = ""
    if hit and spec.mode == "certificates":
        from .certificates import certify
        cert = certify(g, spec.predicate, timed=False, **kw).to_json()
    return Outcome(lineno, line, "match" if hit else "reject", certificate=cert)


def _task(args):
    return evaluate(*args)


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise K2HamError(f"{JOBS_ENV} must be an integer, got {raw!r}") from None


def _numbered(lines: Iterable) -> Iterator[tuple[int, str]]:
    for no, raw in enumerate(lines, 1):
        if isinstance(raw, bytes):
            raw = raw.decode("ascii", errors="replace")
        s = raw.strip()
        if s:
            yield no, s


def run_filter(lines: Iterable, spec: FilterSpec, window: int | None = None) -> Iterator[Outcome]:
    """Outcomes in input order. Workers see at most ``window`` lines ahead of the consumer."""
    items = ((spec, no, s) for no, s in _numbered(lines))
    if spec.jobs == 1:
        yield from map(_task, items)
        return
    window = window or 8 * spec.jobs
    ctx = get_context("fork" if "fork" in get_all_start_methods() else "spawn")
    with ctx.Pool(spec.jobs) as pool:
        pending: deque = deque()
        for item in items:
            pending.append(pool.apply_async(_task, (item,)))
            if len(pending) >= window:
                yield pending.popleft().get()
        while pending:
            yield pending.popleft().get()


def filter_graphs(graphs: Iterable[Graph], predicate: str, **kw) -> list[Graph]:
    """In-process convenience: the graphs satisfying ``predicate``."""
    fn = resolve_predicate(predicate)
    return [g for g in graphs if fn(g, **kw)]
