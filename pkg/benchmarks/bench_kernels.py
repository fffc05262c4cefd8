"""Time the compiled and pure-Python kernels on the same workloads.

Usage: python benchmarks/bench_kernels.py [--repeat R] [--quick]
"""

from __future__ import annotations

import argparse
import random
import time

from blowuplab import StarForestSpec, extremal_family_member, spectral_radius, turan
from blowuplab import _kernels
from blowuplab.search import SearchConfig, enumerate_free, turan_number_bruteforce
from blowuplab.freeness import find_blowup_star_forest


def _random_hosts(count: int, seed: int = 1):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(8, 16)
        d = rng.uniform(0.3, 0.9)
        adj = [0] * n
        for j in range(n):
            for i in range(j):
                if rng.random() < d:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        out.append(adj)
    return out


def workloads(quick: bool):
    hosts = _random_hosts(200 if quick else 1000)
    tri = StarForestSpec(2, (1,))
    bowtie = StarForestSpec(2, (2,))
    member = extremal_family_member(24, StarForestSpec(3, (2, 2)))
    n_count = 6 if quick else 7
    return [
        ("witness search, random hosts", lambda: [_kernels.find_witness(a, 2, (2, 1)) for a in hosts]),
        ("freeness proof, member n=24 p=3 ks=2,2",
         lambda: find_blowup_star_forest(member, StarForestSpec(3, (2, 2)))),
        (f"count triangle-free graphs n={n_count}", lambda: enumerate_free(n_count, tri)),
        (f"ex(n, bowtie) n={n_count}", lambda: turan_number_bruteforce(n_count, bowtie, SearchConfig())),
        ("spectral radius T3(60) x50", lambda: [spectral_radius(turan(3, 60)) for _ in range(50)]),
    ]


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args(argv)
    backends = _kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is timed")
    print(f"{'workload':42s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in workloads(args.quick):
        times = []
        for b in backends:
            prev = _kernels.use_backend(b)
            try:
                best = min(_timed(fn) for _ in range(args.repeat))
            finally:
                _kernels.use_backend(prev)
            times.append(best)
        row = f"{name:42s}" + "".join(f"{t:11.3f}s" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:11.1f}x"
        print(row)


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
