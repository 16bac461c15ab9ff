"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two kernel backends on the hot operations (ordered-triangle
enumeration and the candidate product filter) and on end-to-end decisions
over planted instances.  Run:

    python benchmarks/bench_kernels.py [--n 12] [--trials 200]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from triblock import kernels
from triblock.arrange import rearrange
from triblock.candidates import candidate_triples
from triblock.fuzz import planted_graph, random_relabeling, trial_rng
from triblock.pipeline import Options, decide


def best_of(fn, repeat: int = 5) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_backend(backend: str, n: int, trials: int) -> dict[str, float]:
    kernels.use_backend(backend)
    rng = trial_rng(2024, 0)
    dense = planted_graph(30, 0.3, rng)
    out: dict[str, float] = {}

    out["ordered_triangles(n=30,p=0.3)"] = best_of(
        lambda: kernels.ordered_triangles(dense.adj)
    )

    g = planted_graph(n, 0.25, trial_rng(2024, 1))
    h = random_relabeling(g, trial_rng(2024, 2))
    arrangement = rearrange(g)
    tri = np.ascontiguousarray(candidate_triples(h)[:, ::-1])
    cross = g.adj[
        np.ix_(
            np.asarray(arrangement.w[3:6], dtype=np.intp),
            np.asarray(arrangement.w[:3], dtype=np.intp),
        )
    ]
    out[f"product_filter(beta={tri.shape[0]})"] = best_of(
        lambda: kernels.product_filter(tri, tri, h.adj, cross)
    )

    pairs = []
    for i in range(trials):
        rng = trial_rng(7, i)
        base = planted_graph(n, 0.2, rng)
        pairs.append((base, random_relabeling(base, rng)))

    def run_decides():
        for a, b in pairs:
            decide(a, b, Options())

    out[f"decide x{trials}(n={n})"] = best_of(run_decides, repeat=3)
    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=12)
    parser.add_argument("--trials", type=int, default=200)
    args = parser.parse_args()

    results = {}
    order = [b for b in ("python", "cython") if b in kernels.available_backends()]
    for backend in order:
        results[backend] = bench_backend(backend, args.n, args.trials)

    names = sorted(next(iter(results.values())))
    width = max(len(s) for s in names) + 2
    header = f"{'operation':<{width}}" + "".join(
        f"{b:>14}" for b in results
    )
    if len(results) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for name in names:
        row = f"{name:<{width}}"
        times = [results[b][name] for b in results]
        for t in times:
            row += f"{t * 1e3:>12.2f}ms"
        if len(times) > 1:
            row += f"{times[0] / times[-1] if times[-1] else float('inf'):>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
