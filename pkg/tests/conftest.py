from __future__ import annotations

import pytest
from hypothesis import strategies as st

from icmkit.complex import SimplicialComplex, default_labels

ACCEPTANCE_LINES: list[str] = []


def cx(n: int, *facets: str) -> SimplicialComplex:
    """Complex on x1..xn from facet strings like ``"13"`` (= {x1, x3}); ``""`` is the empty face."""
    masks = []
    for f in facets:
        m = 0
        for ch in f:
            m |= 1 << (int(ch) - 1)
        masks.append(m)
    return SimplicialComplex(default_labels(n), tuple(masks))


def brute_faces(c: SimplicialComplex) -> set[int]:
    return {s for s in range(1 << c.n) if any(s & ~g == 0 for g in c.facets)}


def brute_facets(n: int, faces: set[int]) -> set[int]:
    return {f for f in faces if not any(f != g and f & ~g == 0 for g in faces)}


@st.composite
def complexes(draw, nmax: int = 6, nmin: int = 1, allow_void: bool = False):
    n = draw(st.integers(nmin, nmax))
    masks = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=0 if allow_void else 1, max_size=8))
    return SimplicialComplex(default_labels(n), tuple(masks))


def record_criterion(line: str) -> None:
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def c7_independence():
    from icmkit.graphs import cycle_graph, independence_complex

    return independence_complex(cycle_graph(7))
