"""Hot numeric kernels: harmony search and brute-force enumeration.

Each kernel is written once as a plain Python function over numpy arrays
and compiled with numba's @njit when available. Setting the environment
variable SPECTRUMCOLOR_DISABLE_NUMBA=1 forces the interpreted fallback.

All interference arithmetic is integer (matrix entries pre-scaled by the
common denominator), so both paths are exact and bit-identical. When the
scaled values could overflow int64 the callers pass object-dtype arrays
and force the Python path, which then runs on arbitrary-precision ints.

Randomness inside kernels is a MINSTD stream (x <- x*48271 mod 2^31-1):
identical sequences under numba int64 and Python ints, since no
intermediate exceeds 2^47.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_MOD = 2147483647
_INV = 1.0 / 2147483647.0

# Conservative per-sum magnitude cap for the int64 fast path.
INT64_SAFE = 2**62


def numba_enabled() -> bool:
    if numba is None:
        return False
    flag = os.environ.get("SPECTRUMCOLOR_DISABLE_NUMBA", "").strip().lower()
    return flag not in ("1", "true", "yes", "on")


class Kernel:
    """Dispatches between the njit-compiled and interpreted implementations."""

    def __init__(self, fn):
        self.py = fn
        self.__name__ = fn.__name__
        self._jit = None

    def jit(self):
        if self._jit is None and numba is not None:
            self._jit = numba.njit(self.py)
        return self._jit

    def __call__(self, *args, backend=None):
        if backend is None:
            backend = "numba" if numba_enabled() else "python"
        if backend == "numba":
            jitted = self.jit()
            if jitted is None:
                raise RuntimeError("numba backend requested but numba is unavailable")
            return jitted(*args)
        return self.py(*args)


def prepare_matrix(mat, n: int):
    """numpy view of a scaled integer matrix plus the backend it needs.

    Returns (array, backend) where backend is None (dispatch normally)
    when every possible interference sum fits comfortably in int64, and
    "python" (object dtype, arbitrary precision) otherwise.
    """
    top = max((max(row) for row in mat), default=0)
    # sum objective accumulates up to n*(n-1) entries
    if top * n * n < INT64_SAFE:
        return np.array(mat, dtype=np.int64), None
    arr = np.empty((len(mat), len(mat)), dtype=object)
    for i, row in enumerate(mat):
        for j, x in enumerate(row):
            arr[i, j] = x
    return arr, "python"


def _harmony_search(indptr, indices, W, k, hms, hmcr, par, max_evals, tcap, seed, mem, obj, cand, out):
    """Harmony search over k-colorings minimizing the interference sum.

    tcap < 0 runs the full budget (TSC mode); tcap >= 0 stops as soon as
    a candidate's maximum scaled vertex interference is <= tcap.
    Returns (found, evals).
    """
    n = indptr.shape[0] - 1
    state = seed
    evals = 0
    for h in range(hms):
        for v in range(n):
            state = state * 48271 % 2147483647
            mem[h, v] = 1 + state % k
        tot = 0
        mx = 0
        for v in range(n):
            cv = mem[h, v] - 1
            acc = 0
            for ptr in range(indptr[v], indptr[v + 1]):
                acc = acc + W[mem[h, indices[ptr]] - 1, cv]
            tot = tot + acc
            if acc > mx:
                mx = acc
        obj[h] = tot
        evals += 1
        if tcap >= 0 and mx <= tcap:
            for v in range(n):
                out[v] = mem[h, v]
            return 1, evals
    while evals < max_evals:
        for v in range(n):
            state = state * 48271 % 2147483647
            if state * _INV < hmcr:
                state = state * 48271 % 2147483647
                col = mem[state % hms, v]
                state = state * 48271 % 2147483647
                if state * _INV < par:
                    state = state * 48271 % 2147483647
                    if state % 2 == 0:
                        if col < k:
                            col = col + 1
                    else:
                        if col > 1:
                            col = col - 1
            else:
                state = state * 48271 % 2147483647
                col = 1 + state % k
            cand[v] = col
        tot = 0
        mx = 0
        for v in range(n):
            cv = cand[v] - 1
            acc = 0
            for ptr in range(indptr[v], indptr[v + 1]):
                acc = acc + W[cand[indices[ptr]] - 1, cv]
            tot = tot + acc
            if acc > mx:
                mx = acc
        evals += 1
        if tcap >= 0 and mx <= tcap:
            for v in range(n):
                out[v] = cand[v]
            return 1, evals
        worst = 0
        for h in range(1, hms):
            if obj[h] > obj[worst]:
                worst = h
        if tot < obj[worst]:
            for v in range(n):
                mem[worst, v] = cand[v]
            obj[worst] = tot
    best = 0
    for h in range(1, hms):
        if obj[h] < obj[best]:
            best = h
    for v in range(n):
        out[v] = mem[best, v]
    if tcap >= 0:
        return 0, evals
    return 1, evals


def _exact_tsc_enum(indptr, indices, W, k, ibuf, witness):
    """Minimum over all k^n colorings of the max scaled vertex interference.

    Mixed-radix odometer with incremental neighbor updates; writes the
    optimal coloring into witness. Returns (best, count).
    """
    n = indptr.shape[0] - 1
    colors = np.ones(n, dtype=np.int64)
    for v in range(n):
        acc = 0
        for ptr in range(indptr[v], indptr[v + 1]):
            acc = acc + W[0, 0]
        ibuf[v] = acc
    best = ibuf[0]
    for v in range(1, n):
        if ibuf[v] > best:
            best = ibuf[v]
    for v in range(n):
        witness[v] = 1
    count = 1
    while True:
        pos = 0
        while pos < n and colors[pos] == k:
            old = colors[pos]
            for ptr in range(indptr[pos], indptr[pos + 1]):
                u = indices[ptr]
                cu = colors[u] - 1
                ibuf[u] = ibuf[u] + W[0, cu] - W[old - 1, cu]
            colors[pos] = 1
            acc = 0
            for ptr in range(indptr[pos], indptr[pos + 1]):
                acc = acc + W[colors[indices[ptr]] - 1, 0]
            ibuf[pos] = acc
            pos += 1
        if pos == n:
            break
        old = colors[pos]
        new = old + 1
        for ptr in range(indptr[pos], indptr[pos + 1]):
            u = indices[ptr]
            cu = colors[u] - 1
            ibuf[u] = ibuf[u] + W[new - 1, cu] - W[old - 1, cu]
        colors[pos] = new
        acc = 0
        for ptr in range(indptr[pos], indptr[pos + 1]):
            acc = acc + W[colors[indices[ptr]] - 1, new - 1]
        ibuf[pos] = acc
        count += 1
        mx = ibuf[0]
        for v in range(1, n):
            if ibuf[v] > mx:
                mx = ibuf[v]
        if mx < best:
            best = mx
            for v in range(n):
                witness[v] = colors[v]
    return best, count


def _exact_csc_enum(indptr, indices, W, s, tcap, acc, base, witness):
    """Fewest distinct colors over colorings whose max interference <= tcap.

    Depth-first over vertices in index order. Prunes on the partial
    interference (entries are non-negative, so partial sums only grow)
    and on the distinct-color count of the prefix. Returns
    (best_distinct, examined) with best_distinct = -1 when infeasible.
    """
    n = indptr.shape[0] - 1
    colors = np.zeros(n, dtype=np.int64)
    used = np.zeros(s + 1, dtype=np.int64)
    distinct = 0
    best = s + 1
    examined = 0
    v = 0
    while v >= 0:
        prev = colors[v]
        if prev > 0:
            for ptr in range(indptr[v], indptr[v + 1]):
                u = indices[ptr]
                if u < v:
                    acc[u] = acc[u] - W[prev - 1, colors[u] - 1]
            used[prev] -= 1
            if used[prev] == 0:
                distinct -= 1
        if prev == s:
            colors[v] = 0
            v -= 1
            continue
        col = prev + 1
        colors[v] = col
        used[col] += 1
        if used[col] == 1:
            distinct += 1
        examined += 1
        own = 0
        for ptr in range(indptr[v], indptr[v + 1]):
            u = indices[ptr]
            if u < v:
                w = W[col - 1, colors[u] - 1]
                own = own + w
                acc[u] = acc[u] + w
        base[v] = own
        acc[v] = 0
        ok = own <= tcap and distinct < best
        if ok:
            for ptr in range(indptr[v], indptr[v + 1]):
                u = indices[ptr]
                if u < v and base[u] + acc[u] > tcap:
                    ok = False
                    break
        if not ok:
            continue
        if v == n - 1:
            best = distinct
            for i in range(n):
                witness[i] = colors[i]
            continue
        v += 1
    if best == s + 1:
        return -1, examined
    return best, examined


harmony_search = Kernel(_harmony_search)
exact_tsc_enum = Kernel(_exact_tsc_enum)
exact_csc_enum = Kernel(_exact_csc_enum)
