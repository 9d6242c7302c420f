"""Brute-force exact optima for small instances.

Ground truth for the property tests: the exact optimal max interference
for a fixed color count, and the exact minimal color count for a fixed
threshold. Enumeration is capped; both searches run through the shared
kernels (numba or interpreted, exact either way).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from . import _kernels
from .core import (
    Coloring,
    Graph,
    InstanceTooLargeError,
    InvalidParameterError,
    Spectrum,
)

DEFAULT_CAP = 10**8


@dataclass(frozen=True)
class OracleResult:
    optimum: Union[Fraction, int]
    witness: Coloring
    enumerated: int
    feasible: bool = True


def exact_tsc(graph: Graph, spectrum: Spectrum, k: int, cap: int = DEFAULT_CAP) -> OracleResult:
    """Minimum over all k^n colorings of the maximum vertex interference."""
    if not (1 <= k <= spectrum.size):
        raise InvalidParameterError(f"k={k} out of range 1..{spectrum.size}")
    n = graph.n
    if k**n > cap:
        raise InstanceTooLargeError(f"{k}^{n} colorings exceed cap {cap}")
    if n == 0:
        return OracleResult(Fraction(0), [], 0)
    mat, d = spectrum.scaled(k)
    warr, backend = _kernels.prepare_matrix(mat, n)
    ibuf = np.empty(n, dtype=object if backend == "python" else np.int64)
    witness = np.empty(n, dtype=np.int64)
    indptr, indices = graph.csr()
    best, count = _kernels.exact_tsc_enum(indptr, indices, warr, k, ibuf, witness, backend=backend)
    return OracleResult(Fraction(int(best), d), [int(c) for c in witness], int(count))


def exact_csc(graph: Graph, spectrum: Spectrum, t, cap: int = DEFAULT_CAP) -> OracleResult:
    """Minimum number of distinct colors over colorings with max
    interference <= t; infeasible runs return optimum 0, feasible=False."""
    t = Fraction(t)
    if t < 0:
        raise InvalidParameterError("threshold must be non-negative")
    n = graph.n
    s = spectrum.size
    if s < n:
        raise InvalidParameterError(f"CSC needs spectrum size >= n ({s} < {n})")
    if s**n > cap:
        raise InstanceTooLargeError(f"{s}^{n} colorings exceed cap {cap}")
    if n == 0:
        return OracleResult(0, [], 0)
    mat, d = spectrum.scaled(s)
    warr, backend = _kernels.prepare_matrix(mat, n)
    tcap = (t.numerator * d) // t.denominator
    dtype = object if backend == "python" else np.int64
    acc = np.zeros(n, dtype=dtype)
    base = np.zeros(n, dtype=dtype)
    witness = np.zeros(n, dtype=np.int64)
    indptr, indices = graph.csr()
    best, examined = _kernels.exact_csc_enum(
        indptr, indices, warr, s, tcap, acc, base, witness, backend=backend
    )
    if best < 0:
        return OracleResult(0, [None] * n, int(examined), feasible=False)
    return OracleResult(int(best), [int(c) for c in witness], int(examined))
