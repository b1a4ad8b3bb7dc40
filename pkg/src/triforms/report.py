"""Verification records and their serializations.

One record per checked instance of an identity:
``{"identity": str, "triple": [a,b,c]|null, "n": int, "lhs": int,
"rhs": int, "pass": bool}``.  JSON output is one record per line; CSV uses
the same columns in the same order.  Record streams are always sorted by
(identity, triple, n) so output is byte-stable regardless of how the work
was scheduled.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

CSV_COLUMNS = ("identity", "triple", "n", "lhs", "rhs", "pass")


@dataclass(frozen=True)
class VerificationRecord:
    identity: str
    triple: tuple | None
    n: int
    lhs: int
    rhs: int
    passed: bool

    def sort_key(self):
        return (self.identity, self.triple or (), self.n)

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity,
            "triple": list(self.triple) if self.triple is not None else None,
            "n": self.n,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_obj())

    def to_csv_row(self):
        triple = ",".join(str(v) for v in self.triple) if self.triple else ""
        return [self.identity, triple, str(self.n), str(self.lhs),
                str(self.rhs), "true" if self.passed else "false"]

    def to_text_line(self) -> str:
        triple = ",".join(str(v) for v in self.triple) if self.triple else "-"
        status = "PASS" if self.passed else "FAIL"
        return (f"{self.identity} triple={triple} n={self.n} "
                f"lhs={self.lhs} rhs={self.rhs} {status}")


@dataclass
class VerificationReport:
    records: list

    def __post_init__(self):
        self.records = sorted(self.records, key=VerificationRecord.sort_key)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def extend(self, other) -> "VerificationReport":
        return VerificationReport(self.records + list(other))

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self):
        return [r for r in self.records if not r.passed]

    def summary_line(self, label: str = "") -> str:
        failed = len(self.failures())
        head = f"{label}: " if label else ""
        return f"{head}{len(self.records) - failed}/{len(self.records)} passed, {failed} failed"

    def render(self, fmt: str) -> str:
        """Record stream in the given format ('json', 'csv', or 'text')."""
        if fmt == "json":
            return "".join(r.to_json_line() + "\n" for r in self.records)
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for r in self.records:
                writer.writerow(r.to_csv_row())
            return buf.getvalue()
        if fmt == "text":
            return "".join(r.to_text_line() + "\n" for r in self.records)
        raise ValueError(f"unknown format {fmt!r}")
