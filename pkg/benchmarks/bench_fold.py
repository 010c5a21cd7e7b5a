"""Compare the compiled and pure-Python QSP product folds.

    python benchmarks/bench_fold.py [--repeat 5] [--degrees 15 31 51 61]

Both backends must produce identical tensors; the script checks that before
timing. The final reduction to canonical Z[w] form is timed separately since
it is shared by both paths.
"""

import argparse
import statistics
import timeit

from monoqsp import _fold_py
from monoqsp.polymat import _fold_kernel

try:
    from monoqsp import _fold
except ImportError:
    _fold = None


def best(fn, repeat):
    times = timeit.repeat(fn, number=1, repeat=repeat)
    return min(times), statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--degrees", type=int, nargs="+", default=[15, 31, 51, 61])
    args = ap.parse_args()

    if _fold is None:
        print("compiled extension not built; timing the pure-Python fold only")
    print(f"{'n':>4} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8} {'reduce+wrap (ms)':>17}")
    for n in args.degrees:
        py_best, _ = best(lambda: _fold_py.fold_cyclic(n), args.repeat)
        line = f"{n:>4} {py_best * 1e3:>12.3f}"
        if _fold is not None and n <= _fold.MAX_ORDER:
            assert _fold.fold_cyclic(n) == _fold_py.fold_cyclic(n), n
            cy_best, _ = best(lambda: _fold.fold_cyclic(n), args.repeat)
            line += f" {cy_best * 1e3:>12.3f} {py_best / cy_best:>7.1f}x"
        else:
            line += f" {'-':>12} {'-':>8}"
        wrap_best, _ = best(lambda: _fold_kernel(n), args.repeat)
        line += f" {wrap_best * 1e3:>17.3f}"
        print(line)


if __name__ == "__main__":
    main()
