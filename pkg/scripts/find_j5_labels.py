"""Search the flower snark J5 for dot-product labels and an iterative edge.

The result (labels plus every witness) is written as a JSON fixture that
the test suite compares against a fresh search.
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from k2ham import catalog
from k2ham.constructions import (check_dot_conditions_g, check_dot_conditions_h, check_iterative_bullets,
                                 find_dot_labels_g, find_dot_labels_h, find_iterative_edges)


@dataclass
class Config:
    k: int = 5
    out: Path = Path(__file__).resolve().parent.parent / "tests" / "data" / "j5_dot.json"


def _plain(details):
    return {name: [[claim, w] for claim, w in rows] for name, rows in details.items()}


def run(cfg: Config) -> dict:
    g = catalog.flower(cfg.k)
    t0 = time.perf_counter()
    (labels_g,) = find_dot_labels_g(g)
    (labels_h,) = find_dot_labels_h(g)
    edges = find_iterative_edges(g, *labels_g)
    rep_g = check_dot_conditions_g(g, *labels_g)
    rep_h = check_dot_conditions_h(g, *labels_h)
    rep_it = check_iterative_bullets(g, *labels_g, *edges[0])
    return {
        "graph": f"flower:{cfg.k}",
        "labels_g": list(labels_g),
        "labels_h": list(labels_h),
        "iterative_edges": [list(e) for e in edges],
        "witnesses_g": _plain(rep_g.details),
        "witnesses_h": _plain(rep_h.details),
        "witnesses_iterative": _plain(rep_it.details),
        "seconds": round(time.perf_counter() - t0, 3),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=Config.k)
    ap.add_argument("--out", type=Path, default=Config.out)
    args = ap.parse_args(argv)
    data = run(Config(args.k, args.out))
    args.out.write_text(json.dumps(data, indent=1) + "\n")
    print(f"labels G {data['labels_g']} H {data['labels_h']}; "
          f"{len(data['iterative_edges'])} iterative edges; {data['seconds']}s -> {args.out}")


if __name__ == "__main__":
    main()
