"""Compare the compiled and numpy row-reduction backends.

    python benchmarks/bench_fp.py [--repeat 3]

Times raw RREF on random matrices and a full oracle run, once per backend.
"""

import argparse
import time

import numpy as np

from mackext import fp
from mackext.group import make_context
from mackext.oracle import YoshidaAlgebra, ext_dims


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    cases = [
        ("rref 200x300 mod 3", lambda: fp.rref(m1, 3)),
        ("rref 400x500 mod 3", lambda: fp.rref(m2, 3)),
        ("rref 300x300 mod 7", lambda: fp.rref(m3, 7)),
        ("oracle (3,2) n<=5", lambda: ext_dims(make_context(3, 2), 5, algebra=YoshidaAlgebra(make_context(3, 2)))),
        ("oracle (5,2) n<=4", lambda: ext_dims(make_context(5, 2), 4, algebra=YoshidaAlgebra(make_context(5, 2)))),
    ]
    m1 = rng.integers(0, 3, (200, 300))
    m2 = rng.integers(0, 3, (400, 500))
    m3 = rng.integers(0, 7, (300, 300))

    backends = fp.available_backends()
    print(f"{'case':<24}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, fn in cases:
        row = {}
        for b in backends:
            old = fp.set_backend(b)
            try:
                row[b] = best_of(fn, args.repeat)
            finally:
                fp.set_backend(old)
        speed = row["python"] / row["compiled"] if "compiled" in row else float("nan")
        print(f"{name:<24}" + "".join(f"{row[b]:>11.3f}s" for b in backends) + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
