"""Write every graph on 1..8 vertices (one per isomorphism class) as graph6.

n <= 7 comes from the networkx atlas; n = 8 is grown from it by adding a
vertex with every possible neighbourhood and keeping one graph per class
(Weisfeiler-Lehman hash buckets, then exact isomorphism tests).
"""

from __future__ import annotations

import argparse
from itertools import combinations
from pathlib import Path

import networkx as nx

KNOWN = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def grow(graphs, n):
    buckets: dict[str, list[nx.Graph]] = {}
    for h in graphs:
        for k in range(n):
            for nb in combinations(range(n - 1), k):
                g = h.copy()
                g.add_node(n - 1)
                g.add_edges_from((n - 1, w) for w in nb)
                key = nx.weisfeiler_lehman_graph_hash(g, iterations=3)
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(g, o) for o in bucket):
                    bucket.append(g)
    return [g for b in buckets.values() for g in b]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "tests/data/graphs_upto8.g6"))
    args = ap.parse_args()
    by_n: dict[int, list[nx.Graph]] = {}
    for g in nx.graph_atlas_g()[1:]:
        by_n.setdefault(g.number_of_nodes(), []).append(g)
    by_n[8] = grow(by_n[7], 8)
    lines = []
    for n in sorted(by_n):
        assert len(by_n[n]) == KNOWN[n], (n, len(by_n[n]))
        lines += [nx.to_graph6_bytes(g, header=False).decode().strip() for g in by_n[n]]
    Path(args.out).write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {args.out}")


if __name__ == "__main__":
    main()
