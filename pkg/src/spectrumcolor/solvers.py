"""Constructive and greedy colorers.

Internally every solver works on an integer-scaled copy of the
interference matrix and keeps a per-vertex potential table P[v][j] =
scaled interference v would have with color j+1 given the neighbors
colored so far, updated incrementally. Comparisons against rational
thresholds are done by cross-multiplication, so everything stays exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional

from . import _rng
from .core import (
    Coloring,
    Graph,
    InvalidParameterError,
    SolveReport,
    Spectrum,
)


def _scaled(spectrum: Spectrum, k: int):
    mat, d = spectrum.scaled(k)
    return mat, d


def _potential_table(graph: Graph, mat, k: int, coloring) -> list[list[int]]:
    table = [[0] * k for _ in range(graph.n)]
    for v in range(graph.n):
        cv = coloring[v]
        if cv is None:
            continue
        row = mat[cv - 1]
        for u in graph.neighbors[v]:
            pu = table[u]
            for j in range(k):
                pu[j] += row[j]
    return table


def balanced_coloring(graph: Graph, spectrum: Spectrum, k: int, seed: int) -> SolveReport:
    """Local search to a coloring where no single recolor helps its vertex.

    Starts from a uniformly random k-coloring and repeatedly applies the
    first strictly improving recolor move (round-robin vertex scan,
    ascending color scan, scan restarted after every move). Terminates
    because the total edge interference strictly decreases.
    """
    if not (2 <= k <= spectrum.size):
        raise InvalidParameterError(f"k={k} out of range 2..{spectrum.size}")
    rng = _rng.generator(seed)
    colors = [1 + int(c) for c in rng.integers(0, k, graph.n)]
    mat, _ = _scaled(spectrum, k)
    table = _potential_table(graph, mat, k, colors)
    moved = True
    while moved:
        moved = False
        for v in range(graph.n):
            pv = table[v]
            cur = pv[colors[v] - 1]
            for j in range(k):
                if pv[j] < cur:
                    old = colors[v]
                    colors[v] = j + 1
                    orow = mat[old - 1]
                    nrow = mat[j]
                    for u in graph.neighbors[v]:
                        pu = table[u]
                        for x in range(k):
                            pu[x] += nrow[x] - orow[x]
                    moved = True
                    break
            if moved:
                break
    return SolveReport.from_coloring(graph, spectrum, colors, "balanced", seed)


def _pick_vertex(graph: Graph, sat, uncolored, rng, deterministic: bool) -> int:
    """Highest saturation count, tie -> highest degree, double tie ->
    seeded uniform pick (or lowest index in deterministic mode)."""
    best_sat = max(sat[v] for v in uncolored)
    pool = [v for v in uncolored if sat[v] == best_sat]
    if len(pool) > 1:
        best_deg = max(graph.degree(v) for v in pool)
        pool = [v for v in pool if graph.degree(v) == best_deg]
    if len(pool) == 1 or deterministic:
        return pool[0]
    return pool[int(rng.integers(0, len(pool)))]


def tsc_dsatur(
    graph: Graph,
    spectrum: Spectrum,
    k: int,
    seed: int,
    deterministic: bool = False,
) -> SolveReport:
    """Saturation-ordered greedy coloring minimizing interference locally.

    Each step colors the selected vertex with the index-lowest color in
    1..k minimizing its interference against already-colored neighbors.
    """
    if not (2 <= k <= spectrum.size):
        raise InvalidParameterError(f"k={k} out of range 2..{spectrum.size}")
    rng = _rng.generator(seed)
    mat, _ = _scaled(spectrum, k)
    n = graph.n
    colors: Coloring = [None] * n
    sat = [0] * n
    table = [[0] * k for _ in range(n)]
    uncolored = set(range(n))
    while uncolored:
        v = _pick_vertex(graph, sat, uncolored, rng, deterministic)
        pv = table[v]
        best = 0
        for j in range(1, k):
            if pv[j] < pv[best]:
                best = j
        colors[v] = best + 1
        uncolored.discard(v)
        row = mat[best]
        for u in graph.neighbors[v]:
            sat[u] += 1
            pu = table[u]
            for x in range(k):
                pu[x] += row[x]
    return SolveReport.from_coloring(graph, spectrum, colors, "dsatur", seed)


def csc_dsatur(
    graph: Graph,
    spectrum: Spectrum,
    t,
    seed: int = 0,
    deterministic: bool = False,
) -> SolveReport:
    """Conservative saturation-ordered coloring for a fixed threshold.

    A color is accepted for v only if the interference at v, and at every
    already-colored neighbor, stays within t scaled by that vertex's
    proportion of colored neighbors. Colors are scanned in spectrum
    order; if no color fits at some vertex the coloring is cleared and
    the run is reported infeasible.
    """
    t = Fraction(t)
    if t < 0:
        raise InvalidParameterError("threshold must be non-negative")
    rng = _rng.generator(seed)
    s = spectrum.size
    mat, d = _scaled(spectrum, s)
    n = graph.n
    colors: Coloring = [None] * n
    sat = [0] * n
    table = [[0] * s for _ in range(n)]
    uncolored = set(range(n))
    tn, td = t.numerator, t.denominator

    def within(value: int, colored: int, deg: int) -> bool:
        # value/d <= t * colored/deg, cross-multiplied; isolated vertices
        # (deg 0) are always feasible
        if deg == 0:
            return True
        return value * td * deg <= tn * colored * d

    while uncolored:
        v = _pick_vertex(graph, sat, uncolored, rng, deterministic)
        deg_v = graph.degree(v)
        chosen = None
        for j in range(s):
            if not within(table[v][j], sat[v], deg_v):
                continue
            ok = True
            for u in graph.neighbors[v]:
                cu = colors[u]
                if cu is None:
                    continue
                # u's interference once v takes color j+1; v now counts
                # toward u's colored-neighbor proportion
                if not within(table[u][cu - 1] + mat[j][cu - 1], sat[u] + 1, graph.degree(u)):
                    ok = False
                    break
            if ok:
                chosen = j
                break
        if chosen is None:
            return SolveReport(
                coloring=[None] * n,
                max_interference=None,
                sum_interference=None,
                distinct_colors=0,
                strategy="csc-dsatur",
                seed=seed,
                feasible=False,
            )
        colors[v] = chosen + 1
        uncolored.discard(v)
        row = mat[chosen]
        for u in graph.neighbors[v]:
            sat[u] += 1
            pu = table[u]
            for x in range(s):
                pu[x] += row[x]
    return SolveReport.from_coloring(graph, spectrum, colors, "csc-dsatur", seed)


def random_coloring(graph: Graph, spectrum: Spectrum, k: int, seed: int) -> SolveReport:
    """Each vertex independently uniform over colors 1..k."""
    if not (1 <= k <= spectrum.size):
        raise InvalidParameterError(f"k={k} out of range 1..{spectrum.size}")
    rng = _rng.generator(seed)
    colors = [1 + int(c) for c in rng.integers(0, k, graph.n)]
    return SolveReport.from_coloring(graph, spectrum, colors, "random", seed)


InnerSolver = Callable[[Graph, Spectrum, int, int], SolveReport]


def iterative_csc(
    graph: Graph,
    spectrum: Spectrum,
    t,
    inner: InnerSolver,
    seed: int,
    retries: int = 20,
) -> SolveReport:
    """Drive a k-parameterized solver up from k=1 until the threshold holds.

    Stochastic inner solvers get `retries` fresh seeds per k before k is
    advanced. The reported color count is the k that first succeeded.
    """
    t = Fraction(t)
    if t < 0:
        raise InvalidParameterError("threshold must be non-negative")
    last: Optional[SolveReport] = None
    for k in range(1, min(graph.n, spectrum.size) + 1):
        for attempt in range(retries):
            report = inner(graph, spectrum, k, _rng.derive_seed(seed, k, attempt))
            last = report
            if report.max_interference is not None and report.max_interference <= t:
                report.distinct_colors = k
                report.strategy = f"iterative({report.strategy})"
                report.seed = seed
                return report
    if last is None:  # n == 0
        return SolveReport([], Fraction(0), Fraction(0), 0, "iterative", seed, True)
    return SolveReport(
        coloring=[None] * graph.n,
        max_interference=None,
        sum_interference=None,
        distinct_colors=0,
        strategy=f"iterative({last.strategy})",
        seed=seed,
        feasible=False,
    )
