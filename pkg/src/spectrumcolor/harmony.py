"""Harmony-search baseline over discrete color assignments.

Plain harmony search: a memory of complete colorings, new candidates
built per-vertex by memory consideration (with +-1 pitch adjustment,
clamped to the color range) or uniform redraw, elitist replacement of
the worst member. The objective is the sum of vertex interferences;
reports also carry the maximum, which is what the benchmarks compare.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import _kernels, _rng
from .core import Graph, InvalidParameterError, SolveReport, Spectrum
from .solvers import iterative_csc


@dataclass(frozen=True)
class HarmonyParams:
    memory_size: int = 10
    memory_consider_rate: float = 0.9
    pitch_adjust_rate: float = 0.3
    max_evaluations: int = 50_000

    def __post_init__(self):
        if self.memory_size < 2:
            raise InvalidParameterError("memory_size must be >= 2")
        if not (0.0 <= self.memory_consider_rate <= 1.0):
            raise InvalidParameterError("memory_consider_rate must be in [0, 1]")
        if not (0.0 <= self.pitch_adjust_rate <= 1.0):
            raise InvalidParameterError("pitch_adjust_rate must be in [0, 1]")
        if self.max_evaluations < self.memory_size:
            raise InvalidParameterError("max_evaluations must cover the initial memory")


def _run_search(
    graph: Graph,
    spectrum: Spectrum,
    k: int,
    params: HarmonyParams,
    seed: int,
    tcap_fraction: Optional[Fraction],
) -> tuple[list[int], bool, int]:
    """Run the kernel; returns (coloring, met_threshold, evals)."""
    n = graph.n
    if n == 0:
        return [], True, 0
    if k == 1:
        colors = [1] * n
        return colors, True, 1
    mat, d = spectrum.scaled(k)
    warr, backend = _kernels.prepare_matrix(mat, n)
    if tcap_fraction is None:
        tcap = -1
    else:
        # interference <= t  <=>  scaled value <= floor(t * d)
        tcap = (tcap_fraction.numerator * d) // tcap_fraction.denominator
    hms = params.memory_size
    if backend == "python":
        obj = np.empty(hms, dtype=object)
    else:
        obj = np.empty(hms, dtype=np.int64)
    indptr, indices = graph.csr()
    mem = np.empty((hms, n), dtype=np.int64)
    cand = np.empty(n, dtype=np.int64)
    out = np.empty(n, dtype=np.int64)
    found, evals = _kernels.harmony_search(
        indptr,
        indices,
        warr,
        k,
        hms,
        params.memory_consider_rate,
        params.pitch_adjust_rate,
        params.max_evaluations,
        tcap,
        _rng.minstd_state(seed),
        mem,
        obj,
        cand,
        out,
        backend=backend,
    )
    return [int(c) for c in out], bool(found), int(evals)


def harmony_tsc(
    graph: Graph,
    spectrum: Spectrum,
    k: int,
    params: HarmonyParams,
    seed: int,
) -> SolveReport:
    """Best-found k-coloring by total interference, full budget."""
    if not (2 <= k <= spectrum.size):
        raise InvalidParameterError(f"k={k} out of range 2..{spectrum.size}")
    colors, _, _ = _run_search(graph, spectrum, k, params, seed, None)
    return SolveReport.from_coloring(graph, spectrum, colors, "harmony", seed)


def harmony_csc(
    graph: Graph,
    spectrum: Spectrum,
    t,
    params: HarmonyParams,
    seed: int,
    retries: int = 20,
) -> SolveReport:
    """Iteratively growing color count until the threshold is met.

    Delegates to the iterative driver with a harmony inner solver; the
    kernel stops early as soon as any evaluated coloring meets the
    threshold, the driver re-verifies the threshold exactly.
    """
    t = Fraction(t)
    if t < 0:
        raise InvalidParameterError("threshold must be non-negative")

    def inner(g: Graph, s: Spectrum, k: int, inner_seed: int) -> SolveReport:
        colors, _, _ = _run_search(g, s, k, params, inner_seed, t)
        return SolveReport.from_coloring(g, s, colors, "harmony", inner_seed)

    return iterative_csc(graph, spectrum, t, inner, seed, retries=retries)
