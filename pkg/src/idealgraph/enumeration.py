"""Exhaustive enumeration of labeled associative tables.

Tables are filled cell by cell in row-major order; a partial table is
rejected as soon as any fully-determined associativity triple fails, so
the search tree stays small.  The hot kernel is numba-compiled; set
IDEALGRAPH_NO_NUMBA=1 to force the pure-Python path (same traversal,
same output order).
"""

from __future__ import annotations

import os
from typing import Iterator

import numpy as np

from .semigroup import CayleyTable

MAX_ENUM_ORDER = 5

# OEIS A023814: labeled associative binary operations on n elements.
KNOWN_COUNTS = {1: 1, 2: 8, 3: 113, 4: 3492, 5: 183732}


def _use_numba() -> bool:
    return os.environ.get("IDEALGRAPH_NO_NUMBA", "") not in ("1", "true", "yes")


def _triple_ok(t, n, f, i, j):
    """Check every associativity triple that cell f = i*n+j just completed."""
    for a in range(n):
        an = a * n
        for b in range(n):
            ab_idx = an + b
            if ab_idx > f:
                continue
            bn = b * n
            ab = t[ab_idx]
            for c in range(n):
                bc_idx = bn + c
                if bc_idx > f:
                    continue
                bc = t[bc_idx]
                l_idx = ab * n + c
                r_idx = an + bc
                if l_idx > f or r_idx > f:
                    continue
                # only triples whose last dependency is the new cell
                if ab_idx != f and bc_idx != f and l_idx != f and r_idx != f:
                    continue
                if t[l_idx] != t[r_idx]:
                    return False
    return True


def _enumerate_py(n: int):
    """Yield flat tables (lists of length n*n) in lexicographic order."""
    cells = n * n
    t = [0] * cells
    pos = 0
    t[0] = -1
    while pos >= 0:
        t[pos] += 1
        if t[pos] >= n:
            t[pos] = -1
            pos -= 1
            continue
        if not _triple_ok(t, n, pos, pos // n, pos % n):
            continue
        if pos == cells - 1:
            yield list(t)
        else:
            pos += 1
            t[pos] = -1


def _enumerate_numba(n: int) -> np.ndarray:
    from ._kernels import enumerate_tables_kernel

    return enumerate_tables_kernel(n)


def enumerate_tables(order: int) -> np.ndarray:
    """All associative tables of the given order, one flat row each."""
    if not 1 <= order <= MAX_ENUM_ORDER:
        raise ValueError(
            f"enumeration supports orders 1..{MAX_ENUM_ORDER}, got {order}"
        )
    if _use_numba():
        return _enumerate_numba(order)
    rows = list(_enumerate_py(order))
    out = np.array(rows, dtype=np.int8)
    return out.reshape(len(rows), order * order)


def enumerate_semigroups(order: int) -> Iterator[CayleyTable]:
    """Stream every labeled semigroup of the given order, lexicographically."""
    flat = enumerate_tables(order)
    n = order
    for idx in range(flat.shape[0]):
        row = flat[idx]
        rows = tuple(
            tuple(int(row[i * n + j]) for j in range(n)) for i in range(n)
        )
        yield CayleyTable(order=n, rows=rows, name=f"enum{n}-{idx}")


def count_semigroups(order: int) -> int:
    return int(enumerate_tables(order).shape[0])
