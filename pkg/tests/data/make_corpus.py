"""Regenerate graph6_corpus.jsonl from networkx (run once; the output is pinned)."""

from __future__ import annotations

import json
import random
from pathlib import Path

import networkx as nx


def main() -> None:
    rng = random.Random(7)
    orders = [0, 1, 2, 3, 5, 6, 7, 12, 13, 62, 63, 64, 70, 100]
    lines = []
    for i in range(100):
        n = orders[i] if i < len(orders) else rng.randint(0, 40)
        g = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(2**31))
        edges = sorted(tuple(sorted(e)) for e in g.edges())
        g6 = nx.to_graph6_bytes(g, header=False).decode("ascii").strip()
        lines.append(json.dumps({"n": n, "edges": edges, "g6": g6}))
    Path(__file__).with_name("graph6_corpus.jsonl").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
