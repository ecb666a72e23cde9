"""Verification report records and their JSON / CSV serialisations."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Optional, Union

SCHEMA_VERSION = "1"
CSV_COLUMNS = ("id", "paper_anchor", "claimed", "computed", "abs_error",
               "tolerance", "passed", "seed")


@dataclass
class ReportEntry:
    id: str
    paper_anchor: str
    claimed: Union[float, str]
    computed: float
    abs_error: float
    tolerance: float
    passed: bool
    seed: Optional[int] = None
    runtime_ms: float = 0.0

    def __post_init__(self):
        self.passed = bool(self.passed)
        for name in ("computed", "abs_error", "tolerance", "runtime_ms"):
            v = getattr(self, name)
            if v is not None:
                setattr(self, name, float(v))
        if not isinstance(self.claimed, str) and self.claimed is not None:
            self.claimed = float(self.claimed)
        if self.seed is not None:
            self.seed = int(self.seed)

    @classmethod
    def numeric(cls, id, anchor, claimed, computed, tolerance, seed=None):
        err = abs(computed - claimed)
        return cls(id, anchor, claimed, computed, err, tolerance,
                   bool(err <= tolerance), seed)

    @classmethod
    def from_dict(cls, d: dict) -> "ReportEntry":
        return cls(**{k: d.get(k) for k in cls.__dataclass_fields__ if k in d})


def _clean(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


@dataclass
class VerificationReport:
    entries: list = field(default_factory=list)
    config: dict = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return bool(self.entries) and all(e.passed for e in self.entries)

    def extend(self, entries) -> None:
        self.entries.extend(entries)

    def validate(self) -> None:
        ids = [e.id for e in self.entries]
        dup = {i for i in ids if ids.count(i) > 1}
        if dup:
            raise ValueError(f"duplicate report ids: {sorted(dup)}")

    def to_dict(self, include_runtime: bool = True) -> dict:
        rows = []
        for e in self.entries:
            d = {k: _clean(v) for k, v in asdict(e).items()}
            if not include_runtime:
                d.pop("runtime_ms")
            rows.append(d)
        return {
            "schema_version": SCHEMA_VERSION,
            "config": self.config,
            "all_passed": self.all_passed,
            "entries": rows,
        }

    def to_json(self, include_runtime: bool = True) -> str:
        return json.dumps(self.to_dict(include_runtime), indent=2, ensure_ascii=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for e in self.entries:
            row = asdict(e)
            w.writerow(["" if row[c] is None else _clean(row[c]) for c in CSV_COLUMNS])
        return buf.getvalue()

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        d = json.loads(text)
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
        return cls([ReportEntry.from_dict(e) for e in d["entries"]], d.get("config", {}))
