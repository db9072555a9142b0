"""Rebuild the named constructions and report the verified properties of each."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from k2ham import catalog
from k2ham.cells import Cell, build_gamma
from k2ham.constructions import (DotSpec, check_g_labels, dot_product, find_dot_labels_g, find_dot_labels_h,
                                 find_extendable_5_cycles, fragment_from_cubic_vertex, glue)
from k2ham.engine import is_hamiltonian
from k2ham.errors import PreconditionError
from k2ham.graph import girth
from k2ham.predicates import is_hypohamiltonian, is_k2_hamiltonian, is_snark


@dataclass
class Config:
    gamma_cells: int = 3
    flower: int = 5
    skip_slow: bool = False


def _any_labels(g):
    """First ab, cd meeting the side conditions, whether or not (i)-(iii) hold."""
    for a, b in g.edges():
        for c, d in g.edges():
            try:
                check_g_labels(g, a, b, c, d)
                return a, b, c, d
            except PreconditionError:
                pass
    raise PreconditionError("no admissible edge pair")


def _dot(g, h):
    (abcd,) = find_dot_labels_g(g)
    (xy,) = find_dot_labels_h(h)
    return dot_product(g, h, DotSpec(*abcd, *xy)).graph


def builds(cfg: Config):
    p = catalog.petersen()
    yield "petersen", p
    yield "gp(11,2)", catalog.generalized_petersen(11, 2)
    yield "glue(P-0, P-0)", glue(fragment_from_cubic_vertex(p, 0), fragment_from_cubic_vertex(p, 0)).graph
    yield "P . P", dot_product(p, p, DotSpec(*_any_labels(p), 0, 1)).graph
    j = catalog.flower(cfg.flower)
    yield f"J{cfg.flower}", j
    yield f"J{cfg.flower} . J{cfg.flower}", _dot(j, j)
    if not cfg.skip_slow:
        cell = Cell(catalog.j18(), catalog.J18_OUTER)
        yield f"gamma(j18 x {cfg.gamma_cells})", build_gamma([cell] * cfg.gamma_cells).graph


def report(name, g) -> str:
    t0 = time.perf_counter()
    cols = {
        "n": g.n,
        "m": g.m,
        "girth": girth(g),
        "ham": is_hamiltonian(g),
        "hypo": bool(is_hypohamiltonian(g)),
        "K2": bool(is_k2_hamiltonian(g)),
        "snark": bool(is_snark(g)),
        "ext5": bool(g.is_regular(3) and find_extendable_5_cycles(g, first_only=True)),
    }
    body = "  ".join(f"{k}={v}" for k, v in cols.items())
    return f"{name:<22} {body}  ({time.perf_counter() - t0:.2f}s)"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--gamma-cells", type=int, default=Config.gamma_cells)
    ap.add_argument("--flower", type=int, default=Config.flower)
    ap.add_argument("--skip-slow", action="store_true")
    args = ap.parse_args(argv)
    cfg = Config(args.gamma_cells, args.flower, args.skip_slow)
    for name, g in builds(cfg):
        print(report(name, g), flush=True)


if __name__ == "__main__":
    main()
