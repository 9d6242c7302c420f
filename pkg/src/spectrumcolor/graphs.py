"""Graph generation: seeded Erdos-Renyi samples and small named graphs."""

from __future__ import annotations

import re

import numpy as np

from . import _rng
from .core import Graph, InvalidParameterError


def gen_er_graph(n: int, p, seed: int) -> Graph:
    """G(n, p): each of the n(n-1)/2 pairs kept independently with prob p."""
    p = float(p)
    if not (0.0 <= p <= 1.0):
        raise InvalidParameterError("edge probability must be in [0, 1]")
    rng = _rng.generator(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n, [])
    keep = rng.random(len(pairs)) < p
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


_PAREN = re.compile(r"^([a-z]+)\((\d+)\)$")


def named_graph(name: str) -> Graph:
    """paw, cycle(m), complete(m), star(m), path(m).

    The paw is a triangle with one pendant vertex: vertex 0 pendant,
    vertex 1 the center (degree 3), vertices 2 and 3 the other triangle
    corners.
    """
    name = name.strip().lower()
    if name == "paw":
        return Graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    m = _PAREN.match(name)
    if not m:
        raise InvalidParameterError(f"unknown graph name {name!r}")
    kind, size = m.group(1), int(m.group(2))
    if kind == "cycle":
        if size < 3:
            raise InvalidParameterError("cycle needs at least 3 vertices")
        return Graph(size, [(i, (i + 1) % size) for i in range(size)])
    if kind == "complete":
        return Graph(size, [(u, v) for u in range(size) for v in range(u + 1, size)])
    if kind == "star":
        # star(m) = one hub plus m leaves
        return Graph(size + 1, [(0, i) for i in range(1, size + 1)])
    if kind == "path":
        if size < 1:
            raise InvalidParameterError("path needs at least 1 vertex")
        return Graph(size, [(i, i + 1) for i in range(size - 1)])
    raise InvalidParameterError(f"unknown graph name {name!r}")
