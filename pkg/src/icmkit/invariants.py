"""Ring invariants of K[Δ] and the Cohen-Macaulay family of predicates.

Depth is computed from links:

    depth K[Δ] = min{ |F| + i + 1 : F ∈ Δ, H̃_i(lk F; K) ≠ 0 }

Everything else (ICM, CM, SCM, the resolution predicates) is reduced to
depth computations on skeleta, links or the Alexander dual.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from functools import lru_cache

from .complex import (
    SimplicialComplex,
    alexander_dual,
    face_key,
    generator_degrees,
    link_masks,
    minimal_nonfaces,
    pure_skeleton,
    skeleton,
    submasks,
)
from .connectivity import is_stably_connected, is_weakly_connected
from .errors import InternalConsistencyError, NoResolutionDataError, VoidComplexError
from .homology import QQ, FieldSpec, first_nonvanishing


def _require_nonvoid(cx: SimplicialComplex, what: str) -> None:
    if cx.is_void:
        raise VoidComplexError(f"{what} is undefined for the void complex")


def facet_intersections(facets: tuple[int, ...]) -> set[int]:
    """All intersections of nonempty families of facets.

    A face F outside this set sits strictly inside the intersection of the
    facets containing it, so lk F is a cone and is acyclic over every field.
    """
    closure = set(facets)
    frontier = list(facets)
    while frontier:
        nxt = []
        for a in frontier:
            for g in facets:
                m = a & g
                if m not in closure:
                    closure.add(m)
                    nxt.append(m)
        frontier = nxt
    return closure


def depth(cx: SimplicialComplex, field: FieldSpec = QQ) -> int:
    """Depth of the Stanley-Reisner ring K[Δ].

    Only intersections of facets can have a non-acyclic link.  They are
    visited by increasing cardinality; every facet contributes its own
    cardinality, so the search starts from the smallest facet size and stops
    once no remaining face can do better.
    """
    _require_nonvoid(cx, "depth")
    return _depth(cx.facets, field)


@lru_cache(maxsize=4096)
def _depth(facets: tuple[int, ...], field: FieldSpec) -> int:
    best = min(f.bit_count() for f in facets)
    facet_set = set(facets)
    for face in sorted(facet_intersections(facets), key=face_key):
        size = face.bit_count()
        if size >= best:
            break
        if face in facet_set:
            continue
        # H̃_{-1} of the link vanishes for non-facets; look at i = 0 .. best-size-2
        q = first_nonvanishing(link_masks(facets, face), field, best - size - 2)
        if q is not None:
            best = size + q + 1
    return best


def is_cohen_macaulay(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    _require_nonvoid(cx, "is_cohen_macaulay")
    return depth(cx, field) == cx.dim + 1


def is_icm_via_depth(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """depth K[Δ] equals the smallest facet size.  The void complex counts as ICM."""
    if cx.is_void:
        return True
    return depth(cx, field) == cx.indim + 1


def is_icm_via_skeleton(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """The skeleton at the initial dimension is Cohen-Macaulay."""
    _require_nonvoid(cx, "is_icm_via_skeleton")
    return is_cohen_macaulay(skeleton(cx, int(cx.indim)), field)


def is_icm_via_links(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Link vanishing: H̃_i(lk F) = 0 for all i < indim Δ - |F|, faces with |F| <= indim Δ."""
    _require_nonvoid(cx, "is_icm_via_links")
    indim = int(cx.indim)
    faces: set[int] = set()
    for g in cx.facets:
        faces.update(submasks(g))
    for face in faces:
        size = face.bit_count()
        if size > indim:
            continue
        lk = link_masks(cx.facets, face)
        if first_nonvanishing(lk, field, indim - size - 1) is not None:
            return False
    return True


is_icm = is_icm_via_depth


def is_sequentially_cm(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Every pure skeleton between the initial dimension and the dimension is CM."""
    _require_nonvoid(cx, "is_sequentially_cm")
    lo, hi = int(cx.indim), int(cx.dim)
    return all(is_cohen_macaulay(pure_skeleton(cx, i), field) for i in range(lo, hi + 1))


def _require_ideal(cx: SimplicialComplex) -> tuple[int, int]:
    _require_nonvoid(cx, "resolution data")
    degs = generator_degrees(cx)
    if degs is None:
        raise NoResolutionDataError("I_Δ = 0 for the full simplex")
    return degs


def regularity_of_ideal(cx: SimplicialComplex, field: FieldSpec = QQ) -> int:
    """reg I_Δ through Alexander duality: n - depth K[Δ^∨]."""
    _require_ideal(cx)
    return cx.n - depth(alexander_dual(cx), field)


def has_degree_resolution(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """reg I_Δ equals the largest generator degree."""
    _, top = _require_ideal(cx)
    return regularity_of_ideal(cx, field) == top


def has_linear_resolution(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    lo, top = _require_ideal(cx)
    return lo == top and is_cohen_macaulay(alexander_dual(cx), field)


def is_bi_icm(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Both Δ and its Alexander dual are ICM; a void dual counts as ICM."""
    _require_nonvoid(cx, "is_bi_icm")
    return is_icm(cx, field) and is_icm(alexander_dual(cx), field)


@dataclass(frozen=True)
class InvariantReport:
    n: int
    dim_ring: int
    indim_ring: int
    depth: int
    pdim: int
    ht: int
    bight: int
    deg_ideal: int | None
    reg_ideal: int | None
    field: str
    is_pure: bool
    is_cm: bool
    is_icm: bool
    is_scm: bool
    has_degree_resolution: bool | None
    has_linear_resolution: bool | None
    is_bi_icm: bool
    weakly_connected: bool
    stably_connected: bool

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise InternalConsistencyError(message)


def report(cx: SimplicialComplex, field: FieldSpec = QQ) -> InvariantReport:
    """Compute every invariant and flag, cross-checking the identities that tie them together."""
    _require_nonvoid(cx, "report")
    n = cx.n
    dim_ring = int(cx.dim) + 1
    indim_ring = int(cx.indim) + 1
    d = depth(cx, field)
    dual = alexander_dual(cx)
    degs = generator_degrees(cx)
    if degs is None:
        deg_ideal = reg_ideal = None
        degree_res = linear_res = None
    else:
        deg_ideal = degs[1]
        reg_ideal = n - depth(dual, field)
        degree_res = reg_ideal == deg_ideal
        linear_res = degs[0] == degs[1] and depth(dual, field) == dual.dim + 1
    icm = d == indim_ring
    cm = d == dim_ring
    scm = is_sequentially_cm(cx, field)
    dual_icm = True if dual.is_void else is_icm(dual, field)
    rep = InvariantReport(
        n=n,
        dim_ring=dim_ring,
        indim_ring=indim_ring,
        depth=d,
        pdim=n - d,
        ht=n - dim_ring,
        bight=n - indim_ring,
        deg_ideal=deg_ideal,
        reg_ideal=reg_ideal,
        field=str(field),
        is_pure=cx.is_pure,
        is_cm=cm,
        is_icm=icm,
        is_scm=scm,
        has_degree_resolution=degree_res,
        has_linear_resolution=linear_res,
        is_bi_icm=icm and dual_icm,
        weakly_connected=is_weakly_connected(cx),
        stably_connected=is_stably_connected(cx),
    )
    _check(rep.depth <= rep.indim_ring <= rep.dim_ring, "depth <= indim <= dim violated")
    _check(rep.pdim >= rep.bight and (rep.pdim == rep.bight) == icm, "pdim/bight relation violated")
    _check(rep.bight + rep.indim_ring == n and rep.ht + rep.dim_ring == n, "height identities violated")
    _check(
        (rep.dim_ring - rep.depth >= rep.bight - rep.ht)
        and ((rep.dim_ring - rep.depth == rep.bight - rep.ht) == icm),
        "dim - depth >= bight - ht violated",
    )
    _check(cm == (icm and rep.is_pure), "CM <=> ICM and pure violated")
    _check(not scm or icm, "SCM => ICM violated")
    _check(not icm or rep.weakly_connected, "ICM => weakly connected violated")
    _check(not scm or rep.stably_connected, "SCM => stably connected violated")
    if degree_res is not None and linear_res:
        _check(degree_res, "linear resolution without degree resolution")
    if not dual.is_void:
        # deg I_{Δ^∨} is the largest facet complement of Δ
        dual_top = max(m.bit_count() for m in minimal_nonfaces(dual))
        _check(dual_top == rep.bight, "deg of the dual ideal differs from bight")
    return rep
