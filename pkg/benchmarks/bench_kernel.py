"""Benchmark the compiled ball kernel against the numpy fallback.

Both backends implement the same contract (build the packed levels
S^0..S^M of the standard Heisenberg walk support and answer
translate-inclusion queries); this script times them side by side so a
regression in either path is visible.  Run as

    python3 benchmarks/bench_kernel.py [--depth M] [--repeats N]
"""

from __future__ import annotations

import argparse
import time

from conewalk import kernel

QUERY_ELEMENTS = [
    (1, 0, 0), (-1, 0, 0), (2, 0, 0), (0, 2, 2), (3, 1, 1),
    (-4, 2, 1), (6, 2, 2), (12, 0, 0), (5, 3, 0), (-7, 1, 4),
]


def _time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_backend(backend: str, depth: int, repeats: int) -> dict:
    build = _time(lambda: kernel.build_heis_ball(depth, backend=backend),
                  repeats)
    ball = kernel.build_heis_ball(depth, backend=backend)

    def translates() -> None:
        for x in QUERY_ELEMENTS:
            for k in (1, 2, 3, 4):
                m = depth - k - 8
                ball.translate_subset(x, m, k)

    queries = _time(translates, repeats)
    return {
        "backend": backend,
        "size": int(ball.sizes[depth]),
        "build_s": build,
        "queries_s": queries,
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--depth", type=int, default=58)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    backends = ["numpy"]
    if kernel.BACKEND == "cython":
        backends.insert(0, "cython")
    else:
        print("compiled extension unavailable; timing the fallback only")

    rows = [bench_backend(b, args.depth, args.repeats) for b in backends]
    sizes = {row["size"] for row in rows}
    if len(sizes) != 1:
        raise SystemExit(f"backends disagree on |S^{args.depth}|: {sizes}")

    print(f"depth {args.depth}, |S^M| = {rows[0]['size']}, "
          f"best of {args.repeats}")
    print(f"{'backend':<8} {'build (s)':>10} {'queries (s)':>12}")
    for row in rows:
        print(f"{row['backend']:<8} {row['build_s']:>10.4f} "
              f"{row['queries_s']:>12.4f}")
    if len(rows) == 2:
        print(f"speedup: build x{rows[1]['build_s'] / rows[0]['build_s']:.1f}, "
              f"queries x{rows[1]['queries_s'] / rows[0]['queries_s']:.1f}")


if __name__ == "__main__":
    main()
