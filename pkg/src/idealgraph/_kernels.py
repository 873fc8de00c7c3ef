"""Numba-compiled enumeration kernel.

Same iterative backtracking as enumeration._enumerate_py, with a
capacity-doubling output buffer.  Import of this module is deferred so
the pure-Python path never pays numba's compile cost.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _triple_ok_nb(t, n, f):
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
                if ab_idx != f and bc_idx != f and l_idx != f and r_idx != f:
                    continue
                if t[l_idx] != t[r_idx]:
                    return False
    return True


@njit(cache=True)
def enumerate_tables_kernel(n):
    cells = n * n
    t = np.zeros(cells, dtype=np.int8)
    cap = 1024
    out = np.empty((cap, cells), dtype=np.int8)
    count = 0
    pos = 0
    t[0] = -1
    while pos >= 0:
        t[pos] += 1
        if t[pos] >= n:
            t[pos] = -1
            pos -= 1
            continue
        if not _triple_ok_nb(t, n, pos):
            continue
        if pos == cells - 1:
            if count == cap:
                cap *= 2
                grown = np.empty((cap, cells), dtype=np.int8)
                grown[:count] = out[:count]
                out = grown
            out[count] = t
            count += 1
        else:
            pos += 1
            t[pos] = -1
    return out[:count].copy()
