"""Compiled kernels versus the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints one line per kernel with the best wall time of each backend, the
speedup, and the largest absolute difference between their outputs.
"""

import argparse
import time

import numpy as np

from coslab import _kernels_py

try:
    from coslab import _kernels
except ImportError:
    _kernels = None


def _cases(rng):
    coeffs = rng.integers(-2, 3, 401).astype(float)
    ts = np.linspace(0.0, np.pi, 20_000)
    ns = np.sort(rng.choice(np.arange(1, 65_537), 4096, replace=False)).astype(float)
    xs = np.linspace(0.0, np.pi, 4096)
    return {
        "cos_sum": (coeffs, ts),
        "cos_antiderivative": (coeffs, ts),
        "si": (np.linspace(0.0, 2e4, 200_000),),
        "window_sums": (ns, xs),
        "dirichlet_integral": (1024, np.linspace(0.0, 0.5, 512)),
    }


def _best(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, np.asarray(out, dtype=float)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; only the fallback is available")
    print(f"{'kernel':<20} {'python (s)':>11} {'compiled (s)':>13} {'speedup':>8} {'max |diff|':>11}")
    for name, call_args in _cases(np.random.default_rng(args.seed)).items():
        t_py, out_py = _best(getattr(_kernels_py, name), call_args, args.repeat)
        if _kernels is None:
            print(f"{name:<20} {t_py:>11.4f} {'-':>13} {'-':>8} {'-':>11}")
            continue
        t_c, out_c = _best(getattr(_kernels, name), call_args, args.repeat)
        diff = float(np.max(np.abs(out_py - out_c)))
        print(f"{name:<20} {t_py:>11.4f} {t_c:>13.4f} {t_py / t_c:>8.1f} {diff:>11.2e}")


if __name__ == "__main__":
    main()
