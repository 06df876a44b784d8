"""JSON report documents emitted by ``icmkit report``.

Schema 1, keys in this order::

    schema, tool, version, input, field,
    n, dim_ring, indim_ring, depth, pdim, ht, bight, deg_ideal, reg_ideal,
    pure, cm, icm, scm, degree_resolution, linear_resolution, bi_icm,
    weakly_connected, stably_connected,
    betti            (only with --betti)
    wall_time_s      (only with --timing)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields

from .betti import BettiTable
from .homology import FieldSpec
from .invariants import InvariantReport

SCHEMA = 1
TOOL = "icmkit"

# InvariantReport attribute -> JSON key
REPORT_KEYS = {
    "n": "n",
    "dim_ring": "dim_ring",
    "indim_ring": "indim_ring",
    "depth": "depth",
    "pdim": "pdim",
    "ht": "ht",
    "bight": "bight",
    "deg_ideal": "deg_ideal",
    "reg_ideal": "reg_ideal",
    "is_pure": "pure",
    "is_cm": "cm",
    "is_icm": "icm",
    "is_scm": "scm",
    "has_degree_resolution": "degree_resolution",
    "has_linear_resolution": "linear_resolution",
    "is_bi_icm": "bi_icm",
    "weakly_connected": "weakly_connected",
    "stably_connected": "stably_connected",
}
assert set(REPORT_KEYS) == {f.name for f in fields(InvariantReport)} - {"field"}


@dataclass(frozen=True)
class ReportDocument:
    input: str
    field: FieldSpec
    report: InvariantReport
    version: str
    betti: BettiTable | None = None
    wall_time_s: float | None = None

    def to_dict(self) -> dict:
        out = {
            "schema": SCHEMA,
            "tool": TOOL,
            "version": self.version,
            "input": self.input,
            "field": str(self.field),
        }
        for attr, key in REPORT_KEYS.items():
            out[key] = getattr(self.report, attr)
        if self.betti is not None:
            out["betti"] = self.betti.as_dict()
        if self.wall_time_s is not None:
            out["wall_time_s"] = self.wall_time_s
        return out

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "ReportDocument":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        field = FieldSpec.parse(d["field"])
        values = {attr: d[key] for attr, key in REPORT_KEYS.items()}
        report = InvariantReport(field=str(field), **values)
        betti = None
        if "betti" in d:
            b = d["betti"]
            entries = {(i, j): m for i, j, m in b["entries"]}
            betti = BettiTable(entries, b["n"], b["subject"], FieldSpec.parse(b["field"]))
        return cls(d["input"], field, report, d["version"], betti, d.get("wall_time_s"))

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        d = self.to_dict()
        betti = d.pop("betti", None)
        lines = [f"{k}: {_fmt(v)}" for k, v in d.items()]
        if betti is not None and self.betti is not None:
            lines.append("betti:")
            lines.extend("  " + ln for ln in self.betti.render().splitlines())
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)
