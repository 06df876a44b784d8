"""Reduced simplicial homology over Q or a prime field, via boundary ranks.

Boundary matrices are assembled column by column as sparse dicts and fed to
an incremental echelon reduction.  Over Q the reduction is fraction-free:
rows combine through integer multiples and are divided by their content, so
entries stay small for boundary matrices.  Over F_p arithmetic is modular.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterable, Sequence

from .complex import SimplicialComplex, bits, submasks, subsets_of_size
from .errors import MalformedInputError, VoidComplexError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: rationals when ``p`` is ``None``, else F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not (isinstance(self.p, int) and self.p < 2**31 and _is_prime(self.p)):
                raise MalformedInputError(f"field characteristic must be a prime below 2^31, got {self.p!r}")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts ``Q`` or ``Fp:<p>`` (also ``F<p>``)."""
        t = text.strip()
        if t in ("Q", "QQ"):
            return cls()
        if t.startswith("Fp:"):
            body = t[3:]
        elif t.startswith("F"):
            body = t[1:]
        else:
            raise MalformedInputError(f"unrecognized field {text!r}; use Q or Fp:<p>")
        try:
            return cls(int(body))
        except ValueError:
            raise MalformedInputError(f"unrecognized field {text!r}; use Q or Fp:<p>") from None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"


QQ = FieldSpec()


def _rank(columns: Iterable[dict[int, int]], p: int | None) -> int:
    """Rank of the matrix whose columns are the given sparse vectors."""
    pivots: dict[int, dict[int, int]] = {}
    for col in columns:
        v = dict(col)
        while v:
            lead = max(v)
            piv = pivots.get(lead)
            if piv is None:
                if p is not None:
                    inv = pow(v[lead], -1, p)
                    v = {k: x * inv % p for k, x in v.items()}
                pivots[lead] = v
                break
            a = v[lead]
            if p is not None:
                for k, x in piv.items():
                    y = (v.get(k, 0) - a * x) % p
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
            else:
                b = piv[lead]
                if b in (1, -1):
                    f = a * b
                    for k, x in piv.items():
                        y = v.get(k, 0) - f * x
                        if y:
                            v[k] = y
                        else:
                            v.pop(k, None)
                else:
                    g = gcd(a, b)
                    ma, mb = b // g, a // g
                    w = {}
                    for k in v.keys() | piv.keys():
                        y = ma * v.get(k, 0) - mb * piv.get(k, 0)
                        if y:
                            w[k] = y
                    c = 0
                    for y in w.values():
                        c = gcd(c, y)
                        if c == 1:
                            break
                    v = {k: y // c for k, y in w.items()} if c > 1 else w
    return len(pivots)


def faces_by_size(facets: Iterable[int], kmax: int | None = None) -> dict[int, list[int]]:
    """Faces grouped by cardinality, optionally only those with at most ``kmax`` vertices."""
    seen: set[int] = set()
    for g in facets:
        if kmax is None or g.bit_count() <= kmax:
            seen.update(submasks(g))
        else:
            for k in range(kmax + 1):
                seen.update(subsets_of_size(g, k))
    out: dict[int, list[int]] = {}
    for f in sorted(seen):
        out.setdefault(f.bit_count(), []).append(f)
    return out


def _boundary_columns(top: Sequence[int], bottom: Sequence[int]) -> Iterable[dict[int, int]]:
    row = {f: i for i, f in enumerate(bottom)}
    for face in top:
        col = {}
        for pos, b in enumerate(bits(face)):
            col[row[face ^ (1 << b)]] = -1 if pos & 1 else 1
        yield col


def _rank_between(layers: dict[int, list[int]], q: int, p: int | None) -> int:
    """Rank of the boundary map from q-faces to (q-1)-faces."""
    top = layers.get(q + 1)
    if q < 0 or not top:
        return 0
    if q == 0:
        return 1
    return _rank(_boundary_columns(top, layers[q]), p)


def boundary_rank(cx: SimplicialComplex, q: int, field: FieldSpec = QQ) -> int:
    """Rank of the q-th boundary map, with ``∂_0`` the augmentation to the empty face."""
    if cx.is_void:
        raise VoidComplexError("boundary maps are undefined for the void complex")
    return _rank_between(faces_by_size(cx.facets), q, field.p)


def homology_dims_from_facets(facets: Sequence[int], field: FieldSpec = QQ, qmax: int | None = None) -> list[int]:
    """Reduced Betti numbers ``[h_{-1}, h_0, ..., h_qmax]`` of a non-void facet list."""
    layers = faces_by_size(facets)
    top = max(layers)
    if qmax is None:
        qmax = top - 1
    ranks = [_rank_between(layers, q, field.p) for q in range(-1, qmax + 2)]
    out = []
    for q in range(-1, qmax + 1):
        fq = len(layers.get(q + 1, ()))
        out.append(fq - ranks[q + 1] - ranks[q + 2])
    return out


def first_nonvanishing(facets: Sequence[int], field: FieldSpec, qmax: int) -> int | None:
    """Smallest ``q <= qmax`` with nonzero reduced homology, or ``None``.

    Ranks are computed bottom-up and the scan stops at the first hit.
    """
    layers = faces_by_size(facets, qmax + 2)
    prev = _rank_between(layers, -1, field.p)
    for q in range(-1, qmax + 1):
        nxt = _rank_between(layers, q + 1, field.p)
        if len(layers.get(q + 1, ())) - prev - nxt:
            return q
        prev = nxt
    return None


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology dimensions indexed ``q = -1, 0, ..., dim``."""

    dims: tuple[int, ...]
    field: FieldSpec = QQ

    def __getitem__(self, q: int) -> int:
        if q < -1 or q + 1 >= len(self.dims):
            return 0
        return self.dims[q + 1]

    def as_dict(self) -> dict[int, int]:
        return {q - 1: d for q, d in enumerate(self.dims)}

    @property
    def is_acyclic(self) -> bool:
        return not any(self.dims)


def reduced_homology_dims(cx: SimplicialComplex, field: FieldSpec = QQ) -> HomologyProfile:
    if cx.is_void:
        raise VoidComplexError("reduced homology is undefined for the void complex")
    return HomologyProfile(tuple(homology_dims_from_facets(cx.facets, field)), field)
