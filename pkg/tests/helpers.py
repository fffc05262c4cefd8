from __future__ import annotations

import random

from blowuplab import Graph, make_graph


def random_graph(rng: random.Random, n: int, density: float | None = None) -> Graph:
    if density is None:
        density = rng.random()
    edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < density]
    return make_graph(n, edges)
