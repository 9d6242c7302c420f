"""Exact combinatorial upper bounds for both coloring problems.

Everything here is pure rational arithmetic: matrix norm, generalized
gcd, the max-interference bound for a fixed color count and the
color-count bound for a fixed threshold, plus the solvability
precondition for the latter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Graph,
    InvalidParameterError,
    Spectrum,
    UndefinedGcdError,
)


def inf_norm(spectrum: Spectrum) -> Fraction:
    """Maximum row sum of the interference matrix."""
    return max(sum(row, Fraction(0)) for row in spectrum.w)


def generalized_gcd(spectrum: Spectrum) -> Fraction:
    """Largest rational dividing every nonzero matrix entry.

    x divides y iff y/x is an integer; zeros are ignored (they divide
    everything trivially), so the identity matrix yields 1.
    """
    nonzero = [x for row in spectrum.w for x in row if x != 0]
    if not nonzero:
        raise UndefinedGcdError("gcd of an all-zero matrix is undefined")
    num = 0
    den = 1
    for x in nonzero:
        num = math.gcd(num, x.numerator)
        den = math.lcm(den, x.denominator)
    return Fraction(num, den)


def tsc_bound(graph: Graph, spectrum: Spectrum, k: int) -> Fraction:
    """Upper bound max_degree * norm / k on the optimal max interference."""
    if not (2 <= k <= spectrum.size):
        raise InvalidParameterError(f"k={k} out of range 2..{spectrum.size}")
    return Fraction(graph.max_degree()) * inf_norm(spectrum) / k


def csc_precondition(graph: Graph, spectrum: Spectrum, t) -> bool:
    """True iff t is large enough for the color-count bound to certify
    solvability within the spectrum: t >= (D*norm - gcd*(s-1)) / s."""
    t = Fraction(t)
    s = spectrum.size
    g = generalized_gcd(spectrum)
    rhs = (Fraction(graph.max_degree()) * inf_norm(spectrum) - g * (s - 1)) / s
    return t >= rhs


def csc_bound(graph: Graph, spectrum: Spectrum, t) -> int:
    """Upper bound ceil((D*norm + g) / (t' + g)) on the optimal color count.

    t' is t itself when t is a multiple of g = generalized gcd, otherwise
    the nearest multiple of g below t. Exact rational ceiling.
    """
    t = Fraction(t)
    if spectrum.size < 2:
        raise InvalidParameterError("spectrum must have at least 2 colors")
    if t < 0:
        raise InvalidParameterError("threshold must be non-negative")
    g = generalized_gcd(spectrum)
    if (t / g).denominator != 1:
        t = g * (t // g)
    value = (Fraction(graph.max_degree()) * inf_norm(spectrum) + g) / (t + g)
    return math.ceil(value)


@dataclass(frozen=True)
class BoundReport:
    """Bound value plus the quantities it was computed from."""

    value: Fraction
    precondition_holds: bool
    norm: Fraction
    gcd: Fraction
    max_degree: int


def tsc_report(graph: Graph, spectrum: Spectrum, k: int) -> BoundReport:
    return BoundReport(
        value=tsc_bound(graph, spectrum, k),
        precondition_holds=True,
        norm=inf_norm(spectrum),
        gcd=generalized_gcd(spectrum),
        max_degree=graph.max_degree(),
    )


def csc_report(graph: Graph, spectrum: Spectrum, t) -> BoundReport:
    # the bound value is reported even when the precondition fails; the
    # flag tells callers whether it certifies solvability within |S|
    return BoundReport(
        value=Fraction(csc_bound(graph, spectrum, t)),
        precondition_holds=csc_precondition(graph, spectrum, t),
        norm=inf_norm(spectrum),
        gcd=generalized_gcd(spectrum),
        max_degree=graph.max_degree(),
    )
