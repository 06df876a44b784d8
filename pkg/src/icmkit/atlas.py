"""Isomorphism classes of small graphs and the per-class classification table.

A labeled graph on ``n`` vertices is encoded as a bitmask over the vertex
pairs ``(i, j)``, ``i < j``, in lexicographic order.  Its canonical code is
the minimum of that mask over all vertex permutations.  Classes on ``n``
vertices are grown from classes on ``n - 1`` vertices by adding one vertex
with every possible neighbourhood.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

import numpy as np

from .complex import default_labels
from .connectivity import is_stably_connected, is_strongly_connected, is_weakly_connected
from .errors import EnumerationLimitError
from .graphs import (
    Graph,
    clique_complex,
    has_free_vertex_in_minimum_facet,
    independence_complex,
    is_chordal,
    is_dtree,
    max_degree,
)
from .homology import QQ, FieldSpec
from .invariants import depth, is_bi_icm, is_sequentially_cm

ATLAS_LIMIT = 7

T = TypeVar("T")
R = TypeVar("R")


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(combinations(range(n), 2))}


def graph_code(g: Graph) -> int:
    idx = pair_index(g.n)
    return sum(1 << idx[e] for e in g.edges)


def graph_from_code(n: int, code: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph(default_labels(n), frozenset(p for k, p in enumerate(pairs) if code >> k & 1))


@lru_cache(maxsize=None)
def _permuted_bits(n: int) -> np.ndarray:
    """``table[s, k]`` is the bit value of pair ``k`` after applying permutation ``s``."""
    pairs = list(combinations(range(n), 2))
    idx = pair_index(n)
    perms = list(permutations(range(n)))
    table = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for s, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            table[s, k] = 1 << idx[(a, b) if a < b else (b, a)]
    return table


def canonical_code(n: int, code: int) -> int:
    if n < 2 or code == 0:
        return code
    cols = [k for k in range(n * (n - 1) // 2) if code >> k & 1]
    return int(_permuted_bits(n)[:, cols].sum(axis=1).min())


@lru_cache(maxsize=None)
def iso_class_codes(n: int) -> tuple[int, ...]:
    """Canonical codes of all graphs on ``n`` vertices up to isomorphism, sorted."""
    if n <= 1:
        return (0,)
    idx = pair_index(n)
    old_pairs = list(combinations(range(n - 1), 2))
    new_bits = [1 << idx[(v, n - 1)] for v in range(n - 1)]
    seen = set()
    for old in iso_class_codes(n - 1):
        base = sum(1 << idx[p] for k, p in enumerate(old_pairs) if old >> k & 1)
        for nb in range(1 << (n - 1)):
            code = base
            for v in range(n - 1):
                if nb >> v & 1:
                    code |= new_bits[v]
            seen.add(canonical_code(n, code))
    return tuple(sorted(seen))


def iso_classes(nmax: int, nmin: int = 1) -> Iterator[Graph]:
    for n in range(nmin, nmax + 1):
        for code in iso_class_codes(n):
            yield graph_from_code(n, code)


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices (``2^(n choose 2)`` of them)."""
    for code in range(1 << (n * (n - 1) // 2)):
        yield graph_from_code(n, code)


@dataclass(frozen=True)
class AtlasRow:
    n: int
    code: int
    edges: str
    chordal: bool
    dtree: bool
    maxdeg: int
    ind_icm: bool
    ind_scm: bool
    ind_cm: bool
    ind_weakly_connected: bool
    ind_stably_connected: bool
    ind_pdim: int
    ind_bight: int
    free_vertex_min_facet: bool
    bight_eq_maxdeg: bool
    pdim_eq_maxdeg: bool
    clq_icm: bool
    clq_scm: bool
    clq_cm: bool
    clq_strongly_connected: bool
    clq_weakly_connected: bool
    clq_stably_connected: bool
    clq_bi_icm: bool

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


COLUMNS = tuple(f.name for f in fields(AtlasRow))

COLUMN_HELP = """\
columns:
  n, code                 vertex count and canonical edge-mask code
  edges                   edges of the canonical representative, e.g. 0-1 1-2
  chordal, dtree          G is chordal / G is a (d_1,...,d_q)-tree
  maxdeg                  maximum vertex degree
  ind_*                   independence complex of G: icm, scm, cm,
                          weakly/stably connected, pdim, bight
  free_vertex_min_facet   some minimum facet of the independence complex
                          contains a free vertex
  bight_eq_maxdeg         bight I(G) = maxdeg
  pdim_eq_maxdeg          pdim K[independence complex] = maxdeg
  clq_*                   clique complex of G: icm, scm, cm,
                          strongly/weakly/stably connected, bi_icm"""


def atlas_row(g: Graph, field: FieldSpec = QQ) -> AtlasRow:
    n = g.n
    ind = independence_complex(g)
    clq = clique_complex(g)
    md = max_degree(g)
    ind_depth = depth(ind, field)
    ind_indim = int(ind.indim) + 1
    clq_depth = depth(clq, field)
    return AtlasRow(
        n=n,
        code=graph_code(g),
        edges=" ".join(f"{i}-{j}" for i, j in g.sorted_edges()),
        chordal=is_chordal(g),
        dtree=is_dtree(g),
        maxdeg=md,
        ind_icm=ind_depth == ind_indim,
        ind_scm=is_sequentially_cm(ind, field),
        ind_cm=ind_depth == int(ind.dim) + 1,
        ind_weakly_connected=is_weakly_connected(ind),
        ind_stably_connected=is_stably_connected(ind),
        ind_pdim=n - ind_depth,
        ind_bight=n - ind_indim,
        free_vertex_min_facet=has_free_vertex_in_minimum_facet(ind),
        bight_eq_maxdeg=n - ind_indim == md,
        pdim_eq_maxdeg=n - ind_depth == md,
        clq_icm=clq_depth == int(clq.indim) + 1,
        clq_scm=is_sequentially_cm(clq, field),
        clq_cm=clq_depth == int(clq.dim) + 1,
        clq_strongly_connected=is_strongly_connected(clq),
        clq_weakly_connected=is_weakly_connected(clq),
        clq_stably_connected=is_stably_connected(clq),
        clq_bi_icm=is_bi_icm(clq, field),
    )


def worker_count(requested: int | None = None) -> int:
    """Requested workers (default: CPU count), capped by ``ICMKIT_THREADS``."""
    cap = os.environ.get("ICMKIT_THREADS")
    n = requested or os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return max(1, n)


def ordered_map(func: Callable[[T], R], items: Sequence[T], workers: int = 1, chunksize: int = 16) -> list[R]:
    """``map`` whose results come back in input order regardless of worker count."""
    if workers <= 1 or len(items) < 2:
        return [func(x) for x in items]
    from multiprocessing import get_context

    with get_context("spawn" if os.name == "nt" else "fork").Pool(workers) as pool:
        return pool.map(func, items, chunksize=chunksize)


def _row_task(args: tuple[int, int, FieldSpec]) -> AtlasRow:
    n, code, field = args
    return atlas_row(graph_from_code(n, code), field)


def build_atlas(nmax: int, field: FieldSpec = QQ, workers: int = 1, limit: int = ATLAS_LIMIT, nmin: int = 1) -> list[AtlasRow]:
    if nmax > limit:
        raise EnumerationLimitError("atlas", nmax, limit)
    tasks = [(n, code, field) for n in range(nmin, nmax + 1) for code in iso_class_codes(n)]
    return ordered_map(_row_task, tasks, workers)


def rows_csv(rows: Iterable[AtlasRow]) -> str:
    def cell(v):
        if isinstance(v, bool):
            return "1" if v else "0"
        return str(v)

    lines = [",".join(COLUMNS)]
    for r in rows:
        lines.append(",".join(cell(getattr(r, c)) for c in COLUMNS))
    return "\n".join(lines) + "\n"
