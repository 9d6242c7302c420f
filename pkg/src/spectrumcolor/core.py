"""Graph / spectrum data model and exact interference evaluation.

All interference values are exact rationals (``fractions.Fraction``).
Vertices are dense 0-based indices; color indices are 1-based (1..s).
Hot loops elsewhere work on integer-scaled copies of the interference
matrix, see :meth:`Spectrum.scaled`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

Coloring = list  # per-vertex Optional[int], color indices 1..s


class SpectrumColoringError(Exception):
    """Base class for errors raised by this package."""


class InvalidParameterError(SpectrumColoringError, ValueError):
    """A parameter is outside its documented range."""


class InvalidStateError(SpectrumColoringError):
    """An operation was applied to a coloring in the wrong state."""


class UndefinedGcdError(SpectrumColoringError):
    """The generalized gcd of an all-zero matrix is undefined."""


class InstanceTooLargeError(SpectrumColoringError):
    """Brute-force enumeration would exceed the configured cap."""


class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise InvalidParameterError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((min(u, v), max(u, v)))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.neighbors: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)
        self._csr: Optional[tuple[np.ndarray, np.ndarray]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.neighbors), default=0)

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (indptr, indices) for the kernels."""
        if self._csr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self.neighbors[v])
            indices = np.fromiter(
                (u for a in self.neighbors for u in a), dtype=np.int64, count=int(indptr[-1])
            )
            self._csr = (indptr, indices)
        return self._csr

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Spectrum:
    """Ordered color set of size s with a symmetric s x s interference matrix."""

    def __init__(self, w: Sequence[Sequence[Fraction]]):
        s = len(w)
        if s == 0:
            raise InvalidParameterError("spectrum must have at least one color")
        rows = []
        for i, row in enumerate(w):
            if len(row) != s:
                raise InvalidParameterError("interference matrix must be square")
            rows.append(tuple(Fraction(x) for x in row))
        for i in range(s):
            for j in range(s):
                if rows[i][j] < 0:
                    raise InvalidParameterError("interference entries must be non-negative")
                if rows[i][j] != rows[j][i]:
                    raise InvalidParameterError("interference matrix must be symmetric")
        self.size = s
        self.w: tuple[tuple[Fraction, ...], ...] = tuple(rows)
        self._scaled: dict[int, tuple[list[list[int]], int]] = {}

    def scaled(self, k: Optional[int] = None) -> tuple[list[list[int]], int]:
        """Integer-scaled prefix submatrix: (M, D) with W[i][j] = M[i][j] / D.

        D is the lcm of the denominators over the k x k prefix, so all
        interference sums become exact integers once multiplied by D.
        """
        k = self.size if k is None else k
        if not (1 <= k <= self.size):
            raise InvalidParameterError(f"prefix size {k} out of range 1..{self.size}")
        if k not in self._scaled:
            d = 1
            for i in range(k):
                for j in range(k):
                    d = math.lcm(d, self.w[i][j].denominator)
            mat = [[int(self.w[i][j] * d) for j in range(k)] for i in range(k)]
            self._scaled[k] = (mat, d)
        return self._scaled[k]

    def __repr__(self) -> str:
        return f"Spectrum(size={self.size})"


def make_exp_decay_spectrum(s: int, base) -> Spectrum:
    """Spectrum whose entries decay exponentially with color distance.

    W[i][j] = base**(-|i-j|), exact rationals.
    """
    base = Fraction(base)
    if s < 1:
        raise InvalidParameterError("spectrum size must be positive")
    if base <= 1:
        raise InvalidParameterError("decay base must exceed 1")
    w = [[base ** (-abs(i - j)) for j in range(s)] for i in range(s)]
    return Spectrum(w)


def _check_color(s: int, i: int) -> None:
    if not (1 <= i <= s):
        raise InvalidParameterError(f"color {i} out of range 1..{s}")


def check_coloring(graph: Graph, spectrum: Spectrum, coloring: Coloring) -> None:
    if len(coloring) != graph.n:
        raise InvalidParameterError("coloring length does not match vertex count")
    for c in coloring:
        if c is not None:
            _check_color(spectrum.size, c)


def is_complete(coloring: Coloring) -> bool:
    return all(c is not None for c in coloring)


def vertex_interference(graph: Graph, spectrum: Spectrum, coloring: Coloring, v: int) -> Fraction:
    """Interference at v: sum of W(c(u), c(v)) over colored neighbors u.

    Uncolored neighbors contribute 0 (partial-coloring convention).
    """
    cv = coloring[v]
    if cv is None:
        raise InvalidStateError(f"vertex {v} is uncolored")
    return potential_interference(graph, spectrum, coloring, v, cv)


def potential_interference(
    graph: Graph, spectrum: Spectrum, coloring: Coloring, v: int, i: int
) -> Fraction:
    """Interference v would have with color i, neighbor colors fixed."""
    _check_color(spectrum.size, i)
    total = Fraction(0)
    w = spectrum.w
    for u in graph.neighbors[v]:
        cu = coloring[u]
        if cu is not None:
            total += w[cu - 1][i - 1]
    return total


def interference_profile(graph: Graph, spectrum: Spectrum, coloring: Coloring) -> list[Fraction]:
    """Per-vertex interference of a complete coloring, exact."""
    if not is_complete(coloring):
        raise InvalidStateError("coloring is not complete")
    mat, d = spectrum.scaled()
    out = []
    for v in range(graph.n):
        cv = coloring[v] - 1
        acc = 0
        for u in graph.neighbors[v]:
            acc += mat[coloring[u] - 1][cv]
        out.append(Fraction(acc, d))
    return out


def max_interference(graph: Graph, spectrum: Spectrum, coloring: Coloring) -> Fraction:
    prof = interference_profile(graph, spectrum, coloring)
    return max(prof, default=Fraction(0))


def sum_edge_interference(graph: Graph, spectrum: Spectrum, coloring: Coloring) -> Fraction:
    if not is_complete(coloring):
        raise InvalidStateError("coloring is not complete")
    mat, d = spectrum.scaled()
    acc = 0
    for u, v in graph.edges:
        acc += mat[coloring[u] - 1][coloring[v] - 1]
    return Fraction(acc, d)


@dataclass
class SolveReport:
    """Outcome of one solver invocation.

    ``sum_interference`` is the sum over vertices (twice the edge sum).
    On an infeasible CSC run the coloring is cleared and the interference
    fields are None.
    """

    coloring: Coloring
    max_interference: Optional[Fraction]
    sum_interference: Optional[Fraction]
    distinct_colors: int
    strategy: str
    seed: int
    feasible: bool = True

    @classmethod
    def from_coloring(
        cls,
        graph: Graph,
        spectrum: Spectrum,
        coloring: Coloring,
        strategy: str,
        seed: int,
        feasible: bool = True,
        distinct_colors: Optional[int] = None,
    ) -> "SolveReport":
        prof = interference_profile(graph, spectrum, coloring)
        if distinct_colors is None:
            distinct_colors = len(set(coloring))
        return cls(
            coloring=list(coloring),
            max_interference=max(prof, default=Fraction(0)),
            sum_interference=sum(prof, Fraction(0)),
            distinct_colors=distinct_colors,
            strategy=strategy,
            seed=seed,
            feasible=feasible,
        )


# ---------------------------------------------------------------------------
# File formats: DIMACS-like graph files and CSV interference matrices.

def parse_graph(text: str) -> Graph:
    """Parse a DIMACS-like graph: ``p edge <n> <m>`` then ``e <u> <v>`` (1-based)."""
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise InvalidParameterError(f"line {lineno}: malformed problem line")
            n, declared_m = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if n is None:
                raise InvalidParameterError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise InvalidParameterError(f"line {lineno}: malformed edge line")
            u, v = int(parts[1]), int(parts[2])
            edges.append((u - 1, v - 1))
        else:
            raise InvalidParameterError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise InvalidParameterError("missing problem line")
    graph = Graph(n, edges)
    if declared_m is not None and graph.m != declared_m:
        raise InvalidParameterError(
            f"problem line declares {declared_m} edges but {graph.m} were read"
        )
    return graph


def format_graph(graph: Graph) -> str:
    lines = [f"p edge {graph.n} {graph.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"


def parse_rational(token: str) -> Fraction:
    """Exact rational from an integer, decimal, or ``a/b`` string."""
    token = token.strip()
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"cannot parse rational {token!r}") from exc


def parse_matrix(text: str) -> Spectrum:
    """Parse a CSV interference matrix with exact rational entries."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        rows.append([parse_rational(tok) for tok in line.split(",")])
    if not rows:
        raise InvalidParameterError("empty matrix file")
    return Spectrum(rows)


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def load_matrix(path) -> Spectrum:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())
