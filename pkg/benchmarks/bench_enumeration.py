"""Benchmark: semigroup enumeration with the compiled kernel vs pure Python.

Run with:  python3 benchmarks/bench_enumeration.py [max_order]

The compiled path is selected by default; IDEALGRAPH_NO_NUMBA=1 selects
the pure-Python fallback. Both are timed here in one process by calling
the underlying implementations directly.
"""

import sys
import time

import numpy as np

from idealgraph.enumeration import KNOWN_COUNTS, _enumerate_numba, _enumerate_py


def bench(order: int) -> None:
    t0 = time.perf_counter()
    compiled = _enumerate_numba(order)
    t_compiled = time.perf_counter() - t0

    t0 = time.perf_counter()
    pure = np.array(list(_enumerate_py(order)), dtype=np.int8).reshape(-1, order * order)
    t_pure = time.perf_counter() - t0

    assert compiled.shape == pure.shape and (compiled == pure).all(), order
    assert len(compiled) == KNOWN_COUNTS[order], (order, len(compiled))
    speedup = t_pure / t_compiled if t_compiled > 0 else float("inf")
    print(
        f"order {order}: {len(compiled):>7d} semigroups | "
        f"numba {t_compiled * 1000:9.1f} ms | "
        f"python {t_pure * 1000:9.1f} ms | speedup {speedup:5.1f}x"
    )


def main() -> None:
    max_order = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    _enumerate_numba(2)  # warm up JIT compilation outside the timed region
    for order in range(2, max_order + 1):
        bench(order)


if __name__ == "__main__":
    main()
