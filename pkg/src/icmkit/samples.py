"""Seeded random complexes and graphs for property sweeps."""

from __future__ import annotations

import random

from .complex import SimplicialComplex, default_labels
from .graphs import Graph


def random_complex(rng: random.Random, nmax: int = 7, nmin: int = 1) -> SimplicialComplex:
    """A non-void complex on ``nmin..nmax`` vertices.

    Facet density varies per draw so that pure, non-pure, sparse and nearly
    full complexes all show up; some vertices may lie in no facet.
    """
    n = rng.randint(nmin, nmax)
    density = rng.uniform(0.25, 0.85)
    count = rng.randint(1, 2 * n)
    faces = []
    for _ in range(count):
        m = 0
        for v in range(n):
            if rng.random() < density:
                m |= 1 << v
        faces.append(m)
    return SimplicialComplex(default_labels(n), tuple(faces))


def random_complexes(seed: int, count: int, nmax: int = 7, nmin: int = 1) -> list[SimplicialComplex]:
    rng = random.Random(seed)
    return [random_complex(rng, nmax, nmin) for _ in range(count)]


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(default_labels(n), frozenset(edges))
