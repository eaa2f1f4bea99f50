"""Compiled vs pure-Python kernel timings.

    python benchmarks/bench_kernels.py [--repeat N]

Each row times one kernel call (best of ``repeat`` runs) on both backends and
prints the speed-up.  The last rows time end-to-end ``hyp1f1`` in each regime,
which includes the Python-level dispatch shared by both backends.
"""

import argparse
import timeit

from nonelem import _backend, _pykernels
from nonelem.hyper_core import HyperParams, hyp1f1

try:
    from nonelem import _kernels
except ImportError:
    raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

KERNEL_CASES = [
    ("series_1f1  z=-1", "series_1f1", (0.5, 1.5, -1.0, 1e-13, 10_000)),
    ("series_1f1  z=25", "series_1f1", (0.25, 1.25, 25.0, 1e-13, 10_000)),
    ("series_1f1  z=3+28j", "series_1f1", (1 / 3, 4 / 3, 3 + 28j, 1e-13, 10_000)),
    ("series_1f2  z=-40", "series_1f2", (0.25, 0.5, 1.25, -40.0, 1e-13, 10_000)),
    ("asymptotic_sum  |w|=1/40", "asymptotic_sum", (0.5, 0.0, 1 / 40, 40)),
    ("taylor_continue  3j->29j", "taylor_continue", (0.5, 1.5, 3j, 1 + 0.5j, 0.1 + 0.2j, 29j, 18, 1e-17)),
]

HYP_CASES = [
    ("hyp1f1 series  z=2", 2.0),
    ("hyp1f1 kummer  z=-20", -20.0),
    ("hyp1f1 continuation  z=25j", 25j),
    ("hyp1f1 asymptotic  z=-45", -45.0),
]


def best(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=200)
    args = ap.parse_args()

    print(f"{'case':<32}{'python us':>12}{'cython us':>12}{'speed-up':>10}")
    for label, name, call_args in KERNEL_CASES:
        py = best(lambda: getattr(_pykernels, name)(*call_args), args.repeat, args.number)
        cy = best(lambda: getattr(_kernels, name)(*call_args), args.repeat, args.number)
        print(f"{label:<32}{py * 1e6:>12.2f}{cy * 1e6:>12.2f}{py / cy:>9.1f}x")

    p = HyperParams(0.5, 1.5)
    saved = _backend.kernels
    try:
        for label, z in HYP_CASES:
            _backend.kernels = _pykernels
            py = best(lambda: hyp1f1(p, z), args.repeat, args.number)
            _backend.kernels = _kernels
            cy = best(lambda: hyp1f1(p, z), args.repeat, args.number)
            print(f"{label:<32}{py * 1e6:>12.2f}{cy * 1e6:>12.2f}{py / cy:>9.1f}x")
    finally:
        _backend.kernels = saved


if __name__ == "__main__":
    main()
