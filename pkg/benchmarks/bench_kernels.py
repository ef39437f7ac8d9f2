"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each row reports the best of ``--repeat`` runs per backend and the speedup.
Both backends are checked to return the same value before timing.
"""

from __future__ import annotations

import argparse
import random
import timeit

from recurkit import _kernels_py as py

try:
    from recurkit import _kernels as cy
except ImportError:  # extension not built
    cy = None


def cases(rng: random.Random) -> list:
    fib = ([1, 1], [0, 0], [0, 1], [0, 0])
    d = 5
    small = ([rng.randint(-3, 3) for _ in range(d - 1)] + [1], [0] * d,
             [rng.randint(-9, 9) for _ in range(d)], [0] * d)
    gauss = ([rng.randint(-3, 3) for _ in range(d)], [rng.randint(-3, 3) for _ in range(d)],
             [rng.randint(-9, 9) for _ in range(d)], [rng.randint(-9, 9) for _ in range(d)])
    n = 60
    a = [rng.randint(-99, 99) for _ in range(n)]
    b = [rng.randint(-99, 99) for _ in range(n)]
    m = 8
    mat = [[rng.randint(-20, 20) for _ in range(m)] for _ in range(m)]
    mat_im = [[rng.randint(-20, 20) for _ in range(m)] for _ in range(m)]
    return [
        ("linear_terms fib n=80 (int64 path)", "linear_terms", (*fib, 80)),
        ("linear_terms fib n=400 (bignum)", "linear_terms", (*fib, 400)),
        ("linear_terms d=5 real n=40", "linear_terms", (*small, 40)),
        ("linear_terms d=5 gaussian n=40", "linear_terms", (*gauss, 40)),
        ("linear_nth fib n=10^4", "linear_nth", (*fib, 10_000)),
        ("convolve 60x60 real", "convolve", (a, [0] * n, b, [0] * n)),
        ("convolve 60x60 gaussian", "convolve", (a, b, b, a)),
        ("bareiss_det 8x8 gaussian", "bareiss_det", (mat, mat_im)),
    ]


def best(fn, args, repeat: int) -> float:
    timer = timeit.Timer(lambda: fn(*args))
    loops, _ = timer.autorange()
    return min(timer.repeat(repeat, loops)) / loops


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args(argv)

    rows = cases(random.Random(args.seed))
    print(f"{'case':38} {'python':>12} {'cython':>12} {'speedup':>8}")
    for label, name, call in rows:
        t_py = best(getattr(py, name), call, args.repeat)
        if cy is None:
            print(f"{label:38} {t_py * 1e6:10.1f}us {'n/a':>12} {'':>8}")
            continue
        if getattr(cy, name)(*call) != getattr(py, name)(*call):
            raise SystemExit(f"backends disagree on {label}")
        t_cy = best(getattr(cy, name), call, args.repeat)
        print(f"{label:38} {t_py * 1e6:10.1f}us {t_cy * 1e6:10.1f}us {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
