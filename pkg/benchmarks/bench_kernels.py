"""Compare the numba kernels with the pure-numpy fallback.

Run:  python3 benchmarks/bench_kernels.py [--quick] [--repeat 5]

Both modules are imported directly, so ROBUST_SCALE_DISABLE_NUMBA does not
matter here.  Times are the best of ``--repeat`` runs after one warm-up
call (which also triggers JIT compilation).
"""

import argparse
import time

import numpy as np

from robust_scale import _kernels_numba, _kernels_numpy

BACKENDS = {"numba": _kernels_numba, "numpy": _kernels_numpy}


def best_of(fn, repeat):
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(quick):
    rng = np.random.default_rng(0)
    sizes = (10_000, 100_000) if quick else (10_000, 100_000, 1_000_000)
    for n in sizes:
        y = np.sort(rng.normal(size=n))
        yield f"qn_sorted n={n}", lambda k, y=y: k.qn_sorted(y)
        yield f"sn_sorted n={n}", lambda k, y=y: k.sn_sorted(y)
    reps = 2_000 if quick else 20_000
    for n in (10, 100):
        block = rng.normal(size=(reps, n))
        yield f"batch_raw {reps}x{n}", lambda k, b=block: k.batch_raw(b, True, True, True)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--quick", action="store_true", help="smaller sizes")
    args = parser.parse_args(argv)

    print(f"{'case':<26}{'numba s':>12}{'numpy s':>12}{'speedup':>10}")
    for name, run in cases(args.quick):
        times = {b: best_of(lambda m=m: run(m), args.repeat) for b, m in BACKENDS.items()}
        print(f"{name:<26}{times['numba']:>12.4f}{times['numpy']:>12.4f}{times['numpy'] / times['numba']:>10.1f}")


if __name__ == "__main__":
    main()
