"""Time the numba and numpy modular-rank backends on the same matrices.

    python3 benchmarks/bench_rank.py [--sizes 20,60,120] [--repeat 5]

Both backends must report the same rank; the numba timing excludes the first
(compiling) call.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from flagschur._kernels import HAVE_NUMBA, PRIME, rank_mod_p


def _matrix(rng: np.random.Generator, n: int, deficiency: int) -> np.ndarray:
    # product of n x r and r x n integer factors has rank r
    r = n - deficiency
    a = rng.integers(-5, 6, size=(n, r))
    b = rng.integers(-5, 6, size=(r, n))
    return a @ b


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="20,60,120,240")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    if HAVE_NUMBA:
        rank_mod_p(np.eye(2, dtype=np.int64), PRIME, backend="numba")
    print(f"{'n':>5} {'rank':>5} {'numpy [ms]':>11} {'numba [ms]':>11} {'speedup':>8}")
    for n in (int(s) for s in args.sizes.split(",")):
        m = _matrix(rng, n, max(1, n // 10))
        r_np = rank_mod_p(m, PRIME, backend="numpy")
        t_np = _time(lambda: rank_mod_p(m, PRIME, backend="numpy"), args.repeat)
        if HAVE_NUMBA:
            r_nb = rank_mod_p(m, PRIME, backend="numba")
            assert r_nb == r_np, (r_nb, r_np)
            t_nb = _time(lambda: rank_mod_p(m, PRIME, backend="numba"), args.repeat)
            print(f"{n:>5} {r_np:>5} {1e3 * t_np:>11.3f} {1e3 * t_nb:>11.3f} {t_np / t_nb:>7.1f}x")
        else:
            print(f"{n:>5} {r_np:>5} {1e3 * t_np:>11.3f} {'n/a':>11} {'':>8}")


if __name__ == "__main__":
    main()
