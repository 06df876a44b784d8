"""Strong, weak and stable connectivity of simplicial complexes.

Two facets are adjacent when they share exactly ``dim Δ`` vertices.  For a
pure complex this is ridge adjacency.  For a non-pure complex the smaller
facets can never be adjacent to anything, so such a complex is strongly
connected only when it has a single facet.
"""

from __future__ import annotations

from .complex import SimplicialComplex, bits, pure_skeleton, skeleton


def is_strongly_connected(cx: SimplicialComplex) -> bool:
    if cx.is_void:
        return False
    facets = cx.facets
    if len(facets) == 1:
        return True
    top = int(cx.dim) + 1
    if any(f.bit_count() != top for f in facets):
        return False
    # top facets meet in dim Δ vertices exactly when they share a ridge
    parent = list(range(len(facets)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[int, int] = {}
    for i, f in enumerate(facets):
        for b in bits(f):
            ridge = f & ~(1 << b)
            j = owner.setdefault(ridge, i)
            if j != i:
                parent[find(i)] = find(j)
    root = find(0)
    return all(find(i) == root for i in range(len(facets)))


def is_weakly_connected(cx: SimplicialComplex) -> bool:
    if cx.is_void:
        return False
    return is_strongly_connected(skeleton(cx, int(cx.indim)))


def is_stably_connected(cx: SimplicialComplex) -> bool:
    if cx.is_void:
        return False
    return all(is_strongly_connected(pure_skeleton(cx, i)) for i in range(-1, int(cx.dim) + 1))
