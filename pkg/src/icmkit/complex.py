"""Simplicial complexes on a fixed ground set, stored as facet bitmasks.

A face is an ``int`` whose bit ``i`` marks the vertex ``vertices[i]``.  The
empty face is ``0``.  A complex with no facets at all is *void*; the complex
``{∅}`` has the single facet ``0``.  Vertices of the ground set that lie in no
facet are allowed and behave as degree-one generators of the Stanley-Reisner
ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence, Union

from .errors import MalformedInputError, NotAFaceError, PreconditionError, VoidComplexError

NEG_INF = float("-inf")

FaceLike = Union[int, Iterable[str]]


def popcount(mask: int) -> int:
    return mask.bit_count()


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def face_key(mask: int) -> tuple[int, int]:
    """Canonical face order: by cardinality, then by numeric value."""
    return (mask.bit_count(), mask)


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including ``mask`` itself and ``0``."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    for combo in combinations(bits(mask), k):
        s = 0
        for b in combo:
            s |= 1 << b
        yield s


def maximal_sets(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members of ``masks`` in canonical face order."""
    by_size: dict[int, list[int]] = {}
    for m in set(masks):
        by_size.setdefault(m.bit_count(), []).append(m)
    kept: list[int] = []
    for size in sorted(by_size, reverse=True):
        # distinct sets of equal size never contain one another
        layer = [m for m in by_size[size] if not any(m & ~k == 0 for k in kept)]
        kept.extend(layer)
    return tuple(sorted(kept, key=face_key))


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def _compress(mask: int, keep: int) -> int:
    """Reindex ``mask`` (a subset of ``keep``) onto the bits of ``keep`` in order."""
    out = 0
    for pos, b in enumerate(bits(keep)):
        if mask >> b & 1:
            out |= 1 << pos
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its ground labels and its facets.

    The facet tuple is normalized on construction: non-maximal members are
    dropped and the rest are sorted by ``face_key``.
    """

    vertices: tuple[str, ...]
    facets: tuple[int, ...]

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if len(set(vertices)) != len(vertices):
            raise MalformedInputError(f"duplicate vertex labels in {vertices!r}")
        limit = 1 << len(vertices)
        for f in self.facets:
            if not isinstance(f, int) or f < 0 or f >= limit:
                raise MalformedInputError(
                    f"face {f!r} references a vertex outside 0..{len(vertices) - 1}"
                )
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "facets", maximal_sets(self.facets))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def kind(self) -> str:
        return "Void" if self.is_void else "NonVoid"

    @property
    def is_irrelevant(self) -> bool:
        """True for the complex ``{∅}``."""
        return self.facets == (0,)

    @property
    def is_simplex(self) -> bool:
        return self.facets == (self.ground,)

    @property
    def dim(self) -> int | float:
        return dim_complex(self)

    @property
    def indim(self) -> int | float:
        return indim_complex(self)

    @property
    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    def has_face(self, face: int) -> bool:
        return any(face & ~g == 0 for g in self.facets)

    def faces(self) -> list[int]:
        """Every face, in canonical order."""
        seen: set[int] = set()
        for g in self.facets:
            seen.update(submasks(g))
        return sorted(seen, key=face_key)

    def mask(self, labels: Iterable[str]) -> int:
        index = {v: i for i, v in enumerate(self.vertices)}
        out = 0
        for lab in labels:
            if lab not in index:
                raise MalformedInputError(f"unknown vertex label {lab!r}")
            out |= 1 << index[lab]
        return out

    def labels(self, face: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in bits(face))

    def facet_labels(self) -> list[tuple[str, ...]]:
        return [self.labels(f) for f in self.facets]

    def __repr__(self) -> str:
        if self.is_void:
            body = "void"
        else:
            body = ", ".join("{" + ",".join(self.labels(f)) + "}" for f in self.facets)
        return f"SimplicialComplex([{' '.join(self.vertices)}]: {body})"


def from_facets(vertices: Sequence[str] | int, candidate_faces: Iterable[FaceLike]) -> SimplicialComplex:
    """Complex generated by ``candidate_faces`` on the ground set ``vertices``.

    ``vertices`` is a label sequence, or an integer ``n`` for the labels
    ``x1..xn``.  Each candidate is either a bitmask or a collection of labels.
    """
    labels = default_labels(vertices) if isinstance(vertices, int) else tuple(vertices)
    index = {v: i for i, v in enumerate(labels)}
    masks = []
    for face in candidate_faces:
        if isinstance(face, int):
            masks.append(face)
            continue
        if isinstance(face, str):
            raise MalformedInputError(f"face given as bare string {face!r}; use a collection")
        m = 0
        for lab in face:
            if lab not in index:
                raise MalformedInputError(f"face label {lab!r} is not in the ground set")
            m |= 1 << index[lab]
        masks.append(m)
    return SimplicialComplex(labels, tuple(masks))


def simplex(vertices: Sequence[str] | int) -> SimplicialComplex:
    labels = default_labels(vertices) if isinstance(vertices, int) else tuple(vertices)
    return SimplicialComplex(labels, ((1 << len(labels)) - 1,))


def void_complex(vertices: Sequence[str] | int) -> SimplicialComplex:
    labels = default_labels(vertices) if isinstance(vertices, int) else tuple(vertices)
    return SimplicialComplex(labels, ())


def dim_complex(cx: SimplicialComplex) -> int | float:
    if cx.is_void:
        return NEG_INF
    return max(f.bit_count() for f in cx.facets) - 1


def indim_complex(cx: SimplicialComplex) -> int | float:
    """Smallest facet dimension (the ring-level initial dimension minus one)."""
    if cx.is_void:
        return NEG_INF
    return min(f.bit_count() for f in cx.facets) - 1


def _require_nonvoid(cx: SimplicialComplex, what: str) -> None:
    if cx.is_void:
        raise VoidComplexError(f"{what} is undefined for the void complex")


def minimal_nonfaces(cx: SimplicialComplex) -> tuple[int, ...]:
    """Supports of the minimal monomial generators of the Stanley-Reisner ideal."""
    _require_nonvoid(cx, "minimal_nonfaces")
    faces = set(cx.faces())
    out = set()
    for f in faces:
        for v in bits(cx.ground & ~f):
            cand = f | (1 << v)
            if cand in faces:
                continue
            if all((cand & ~(1 << u)) in faces for u in bits(cand)):
                out.add(cand)
    return tuple(sorted(out, key=face_key))


def generator_degrees(cx: SimplicialComplex) -> tuple[int, int] | None:
    """(min, max) cardinality of minimal non-faces, or ``None`` if there are none."""
    nf = minimal_nonfaces(cx)
    if not nf:
        return None
    sizes = [m.bit_count() for m in nf]
    return min(sizes), max(sizes)


def alexander_dual(cx: SimplicialComplex) -> SimplicialComplex:
    """Facets are the complements of the minimal non-faces.

    The full simplex dualizes to the void complex and vice versa.
    """
    if cx.is_void:
        return simplex(cx.vertices)
    g = cx.ground
    return SimplicialComplex(cx.vertices, tuple(g & ~m for m in minimal_nonfaces(cx)))


def _skeleton_masks(facets: Iterable[int], i: int) -> tuple[int, ...]:
    size = i + 1
    out = []
    for f in facets:
        if f.bit_count() <= size:
            out.append(f)
        else:
            out.extend(subsets_of_size(f, size))
    return maximal_sets(out)


def skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """All faces of dimension at most ``i``."""
    if i < -1:
        raise PreconditionError(f"skeleton index must be >= -1, got {i}")
    if cx.is_void or i >= cx.dim:
        return cx
    return SimplicialComplex(cx.vertices, _skeleton_masks(cx.facets, i))


def pure_skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """Complex generated by the ``i``-dimensional faces; void if there are none."""
    if i < -1:
        raise PreconditionError(f"pure skeleton index must be >= -1, got {i}")
    size = i + 1
    out = set()
    for f in cx.facets:
        if f.bit_count() >= size:
            out.update(subsets_of_size(f, size))
    return SimplicialComplex(cx.vertices, tuple(out))


def link_masks(facets: Iterable[int], face: int) -> tuple[int, ...]:
    """Facets of the link of ``face``, left on the original bit positions."""
    return maximal_sets(g & ~face for g in facets if face & ~g == 0)


def link(cx: SimplicialComplex, face: int) -> SimplicialComplex:
    """Link of ``face`` as a complex on the ground set minus ``face``."""
    if not cx.has_face(face):
        raise NotAFaceError(f"{cx.labels(face)!r} is not a face of the complex")
    keep = cx.ground & ~face
    labels = tuple(cx.vertices[i] for i in bits(keep))
    return SimplicialComplex(labels, tuple(_compress(g, keep) for g in link_masks(cx.facets, face)))


def deletion(cx: SimplicialComplex, face: int) -> SimplicialComplex:
    """Faces disjoint from ``face``, on the same ground set."""
    if cx.is_void:
        return cx
    return SimplicialComplex(cx.vertices, tuple(g & ~face for g in cx.facets))


def induced_subcomplex(cx: SimplicialComplex, subset: int) -> SimplicialComplex:
    """Restriction to ``subset``, reindexed onto the ground set ``subset``."""
    if subset & ~cx.ground:
        raise MalformedInputError("restriction set is not contained in the ground set")
    labels = tuple(cx.vertices[i] for i in bits(subset))
    if cx.is_void:
        return SimplicialComplex(labels, ())
    return SimplicialComplex(labels, tuple(_compress(g & subset, subset) for g in cx.facets))


def truncated_complex(cx: SimplicialComplex, k: int) -> SimplicialComplex:
    """Complex of the ideal spanned by the squarefree monomials of degree >= k in I_Δ.

    Its faces are the faces of ``cx`` together with every subset of size
    below ``k``.  Valid for ``min generator degree <= k <= n``.
    """
    _require_nonvoid(cx, "truncated_complex")
    degs = generator_degrees(cx)
    if degs is None:
        raise PreconditionError("the full simplex has no non-faces to truncate")
    if k < degs[0] or k > cx.n:
        raise PreconditionError(
            f"truncation degree {k} outside the valid range {degs[0]}..{cx.n}"
        )
    extra = list(subsets_of_size(cx.ground, k - 1))
    return SimplicialComplex(cx.vertices, cx.facets + tuple(extra))


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    """``(f_{-1}, f_0, ..., f_{d-1})``: face counts by dimension."""
    _require_nonvoid(cx, "f_vector")
    d = int(cx.dim) + 1
    counts = [0] * (d + 1)
    for f in cx.faces():
        counts[f.bit_count()] += 1
    return tuple(counts)


def h_polynomial(cx: SimplicialComplex) -> tuple[int, ...]:
    """Coefficients ``(h_0, ..., h_d)`` of the h-polynomial."""
    return h_from_f(f_vector(cx))


def h_from_f(f: Sequence[int]) -> tuple[int, ...]:
    d = len(f) - 1
    h = []
    for k in range(d + 1):
        h.append(sum(f[i] * (-1) ** (k - i) * comb(d - i, k - i) for i in range(k + 1)))
    return tuple(h)


def h_degree(h: Sequence[int]) -> int:
    nonzero = [i for i, c in enumerate(h) if c != 0]
    return nonzero[-1] if nonzero else 0
