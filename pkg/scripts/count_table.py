"""Tabulate non-hamiltonian and K2-hypohamiltonian counts per order.

Reads graph6 lines (the bundled corpus of all graphs on at most 8 vertices
by default, or any generator output such as ``geng -c 10``) and prints one
row per order: connected graphs of girth >= g, non-hamiltonian ones,
K2-hypohamiltonian ones, and those that are also hypohamiltonian.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from k2ham.engine import is_hamiltonian
from k2ham.formats import decode_any
from k2ham.graph import girth, is_connected
from k2ham.predicates import is_hypohamiltonian, is_k2_hamiltonian

CORPUS = Path(__file__).resolve().parent.parent / "tests" / "data" / "graphs_upto8.g6"


@dataclass
class Config:
    inputs: list[Path] = field(default_factory=lambda: [CORPUS])
    min_girth: int = 3
    min_n: int = 5


def tabulate(lines, cfg: Config) -> dict[int, Counter]:
    rows: dict[int, Counter] = {}
    for line in lines:
        line = line.strip()
        if not line:
            continue
        g = decode_any(line)
        if g.n < cfg.min_n or not is_connected(g) or girth(g) < cfg.min_girth:
            continue
        row = rows.setdefault(g.n, Counter())
        row["total"] += 1
        if g.n >= 3 and is_hamiltonian(g):
            continue
        row["nonham"] += 1
        if is_k2_hamiltonian(g):
            row["k2hypo"] += 1
            row["both"] += bool(is_hypohamiltonian(g))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("inputs", nargs="*", type=Path, help="graph6 files, - for stdin (default: bundled corpus)")
    ap.add_argument("--girth", type=int, default=Config.min_girth)
    ap.add_argument("--min-n", type=int, default=Config.min_n)
    args = ap.parse_args(argv)
    cfg = Config(args.inputs or [CORPUS], args.girth, args.min_n)
    t0 = time.perf_counter()
    rows: dict[int, Counter] = {}
    for src in cfg.inputs:
        lines = sys.stdin if str(src) == "-" else src.read_text().splitlines()
        for n, row in tabulate(lines, cfg).items():
            rows.setdefault(n, Counter()).update(row)
    print(f"{'order':>5} {'girth':>5} {'total':>9} {'non-ham':>9} {'K2-hypo':>8} {'both':>5}")
    for n in sorted(rows):
        r = rows[n]
        print(f"{n:>5} {'>=' + str(cfg.min_girth):>5} {r['total']:>9} {r['nonham']:>9} {r['k2hypo']:>8} {r['both']:>5}")
    print(f"# {time.perf_counter() - t0:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
