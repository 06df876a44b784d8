"""Plain-text facet files and edge lists.

Facet file::

    #vertices a b c d      optional; required when some vertex is in no facet
    a b                    one facet per line, labels separated by whitespace
    c d
    empty-face             the complex {∅}

``#`` starts a comment.  A file with no facet lines is the void complex.
Edge lists share the header and comment rules and carry two labels per line.
"""

from __future__ import annotations

import re
from typing import Iterator

from .complex import SimplicialComplex
from .errors import ParseError
from .graphs import Graph

HEADER = "#vertices"
EMPTY_FACE = "empty-face"
_TOKEN = re.compile(r"\S+")


def _tokens(line: str) -> list[tuple[int, str]]:
    """Whitespace tokens with their 1-based columns."""
    return [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]


def _scan(text: str, source: str) -> Iterator[tuple[int, str, list[tuple[int, str]]]]:
    """Yield (line number, kind, tokens) with kind 'header' or 'body'."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith(HEADER) and (len(stripped) == len(HEADER) or stripped[len(HEADER)].isspace()):
            offset = raw.index(HEADER) + len(HEADER)
            toks = [(c + offset, t) for c, t in _tokens(raw[offset:])]
            yield lineno, "header", toks
            continue
        body = raw.split("#", 1)[0]
        toks = _tokens(body)
        if toks:
            yield lineno, "body", toks


class _Labels:
    def __init__(self, source: str):
        self.source = source
        self.order: list[str] = []
        self.index: dict[str, int] = {}
        self.fixed = False

    def declare(self, lineno: int, toks: list[tuple[int, str]]) -> None:
        if self.fixed or self.order:
            raise ParseError("#vertices header must come first and only once", lineno, 1, self.source)
        for col, tok in toks:
            if tok in self.index:
                raise ParseError(f"duplicate vertex {tok!r} in header", lineno, col, self.source)
            self.index[tok] = len(self.order)
            self.order.append(tok)
        self.fixed = True

    def lookup(self, lineno: int, col: int, tok: str) -> int:
        if tok == EMPTY_FACE:
            raise ParseError(f"{EMPTY_FACE!r} must stand alone on its line", lineno, col, self.source)
        if tok not in self.index:
            if self.fixed:
                raise ParseError(f"vertex {tok!r} is not declared in the header", lineno, col, self.source)
            self.index[tok] = len(self.order)
            self.order.append(tok)
        return self.index[tok]


def parse_facets(text: str, source: str = "<input>") -> SimplicialComplex:
    labels = _Labels(source)
    masks: list[int] = []
    for lineno, kind, toks in _scan(text, source):
        if kind == "header":
            labels.declare(lineno, toks)
            continue
        if len(toks) == 1 and toks[0][1] == EMPTY_FACE:
            masks.append(0)
            continue
        m = 0
        for col, tok in toks:
            bit = 1 << labels.lookup(lineno, col, tok)
            if m & bit:
                raise ParseError(f"vertex {tok!r} repeated within a facet", lineno, col, source)
            m |= bit
        masks.append(m)
    return SimplicialComplex(tuple(labels.order), tuple(masks))


def format_facets(cx: SimplicialComplex) -> str:
    lines = [" ".join([HEADER, *cx.vertices])]
    for f in cx.facets:
        lines.append(" ".join(cx.labels(f)) if f else EMPTY_FACE)
    return "\n".join(lines) + "\n"


def parse_edges(text: str, source: str = "<input>") -> Graph:
    labels = _Labels(source)
    edges = []
    for lineno, kind, toks in _scan(text, source):
        if kind == "header":
            labels.declare(lineno, toks)
            continue
        if len(toks) != 2:
            col = toks[2][0] if len(toks) > 2 else toks[-1][0]
            raise ParseError(f"an edge line needs exactly two labels, got {len(toks)}", lineno, col, source)
        (c1, a), (c2, b) = toks
        if a == b:
            raise ParseError(f"loop at {a!r}", lineno, c2, source)
        edges.append((labels.lookup(lineno, c1, a), labels.lookup(lineno, c2, b)))
    return Graph(tuple(labels.order), frozenset(edges))


def format_edges(g: Graph) -> str:
    lines = [" ".join([HEADER, *g.vertices])]
    for i, j in g.sorted_edges():
        lines.append(f"{g.vertices[i]} {g.vertices[j]}")
    return "\n".join(lines) + "\n"
