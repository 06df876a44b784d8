"""Graded Betti tables of K[Δ] by Hochster's formula.

    β_{i,j}(K[Δ]) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ|_W; K)

The sum runs over all 2^n vertex subsets, so this is an oracle for small
complexes only.  Nothing here shares code with the depth search apart from
the homology kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .complex import SimplicialComplex, maximal_sets, submasks
from .errors import EnumerationLimitError, IcmkitError, VoidComplexError
from .homology import QQ, FieldSpec, homology_dims_from_facets

HOCHSTER_LIMIT = 20

QUOTIENT = "QuotientRing"
IDEAL = "Ideal"


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers keyed by (homological index i, degree j)."""

    entries: dict[tuple[int, int], int]
    n: int
    subject: str = QUOTIENT
    field: FieldSpec = dc_field(default=QQ)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def to_ideal(self) -> "BettiTable":
        """Shift a quotient-ring table to the ideal: β_{i,j}(I) = β_{i+1,j}(K[Δ])."""
        if self.subject != QUOTIENT:
            raise IcmkitError("table is already on the ideal side")
        shifted = {(i - 1, j): b for (i, j), b in self.entries.items() if i >= 1}
        return BettiTable(shifted, self.n, IDEAL, self.field)

    @property
    def pdim(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def total(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), b in self.entries.items():
            out[i] = out.get(i, 0) + b
        return dict(sorted(out.items()))

    def diagonals(self) -> set[int]:
        return {j - i for i, j in self.entries}

    def grid(self) -> list[list[int]]:
        """Rows are regularity diagonals ``j - i``, columns homological indices."""
        if not self.entries:
            return []
        lo = min(self.diagonals())
        rows = self.reg - lo + 1
        out = [[0] * (self.pdim + 1) for _ in range(rows)]
        for (i, j), b in self.entries.items():
            out[j - i - lo][i] = b
        return out

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "n": self.n,
            "field": str(self.field),
            "entries": [[i, j, b] for (i, j), b in sorted(self.entries.items())],
        }

    def render(self) -> str:
        """Macaulay2-style text grid."""
        if not self.entries:
            return "(empty table)"
        lo = min(self.diagonals())
        grid = self.grid()
        width = max(len(str(b)) for row in grid for b in row)
        width = max(width, len(str(self.pdim)))
        lines = ["      " + " ".join(f"{i:>{width}}" for i in range(self.pdim + 1))]
        tot = self.total
        lines.append("total:" + " ".join(f"{tot.get(i, 0):>{width}}" for i in range(self.pdim + 1)))
        for r, row in enumerate(grid):
            cells = " ".join(f"{b:>{width}}" if b else f"{'.':>{width}}" for b in row)
            lines.append(f"{r + lo:>5}:{cells}")
        return "\n".join(lines)


def _restricted_facets(facets: tuple[int, ...], w: int) -> tuple[int, ...]:
    return maximal_sets(g & w for g in facets)


def hochster_betti(cx: SimplicialComplex, field: FieldSpec = QQ, limit: int = HOCHSTER_LIMIT) -> BettiTable:
    if cx.is_void:
        raise VoidComplexError("K[Δ] = 0 for the void complex; no Betti table")
    if cx.n > limit:
        raise EnumerationLimitError("hochster_betti", cx.n, limit)
    entries: dict[tuple[int, int], int] = {}
    for w in submasks(cx.ground):
        j = w.bit_count()
        dims = homology_dims_from_facets(_restricted_facets(cx.facets, w), field)
        for q, h in enumerate(dims, start=-1):
            if h:
                key = (j - q - 1, j)
                entries[key] = entries.get(key, 0) + h
    return BettiTable(dict(sorted(entries.items())), cx.n, QUOTIENT, field)


def invariants_from_table(t: BettiTable) -> dict[str, int]:
    """pdim and reg for any table, plus deg for an ideal-side table."""
    if not t.entries:
        raise IcmkitError("empty Betti table")
    out = {"pdim": t.pdim, "reg": t.reg}
    if t.subject == IDEAL:
        out["deg"] = max(j for i, j in t.entries if i == 0)
    return out


def extremal_entries(t: BettiTable) -> list[tuple[int, int]]:
    """Nonzero entries not dominated by another in (index, diagonal) order."""
    keys = [k for k, b in t.entries.items() if b]
    out = []
    for i, j in keys:
        dominated = any(
            (i2, j2) != (i, j) and i2 >= i and j2 - i2 >= j - i for i2, j2 in keys
        )
        if not dominated:
            out.append((i, j))
    return sorted(out)


def extremal_betti_count(t: BettiTable) -> int:
    return len(extremal_entries(t))
