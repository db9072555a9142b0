from __future__ import annotations

import sys
from functools import lru_cache
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from k2ham.formats import decode_graph6
from k2ham.graph import Graph

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@lru_cache(maxsize=None)
def corpus(max_n: int = 8) -> tuple[Graph, ...]:
    lines = (DATA / "graphs_upto8.g6").read_text().split()
    return tuple(g for g in map(decode_graph6, lines) if g.n <= max_n)


@pytest.fixture(scope="session")
def small_graphs():
    return corpus()


@st.composite
def graphs(draw, min_n=1, max_n=8, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
