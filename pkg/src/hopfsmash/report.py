"""Check records, report assembly and JSON emission for the verifier."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "inconclusive")

REPORT_SCHEMA = {
    "type": "object",
    "required": ["meta", "checks", "summary"],
    "properties": {
        "meta": {"type": "object"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["suite", "code", "instance", "status", "witness", "ms"],
                "properties": {
                    "suite": {"type": "string"},
                    "code": {"type": "string"},
                    "instance": {"type": "string"},
                    "status": {"enum": list(STATUSES)},
                    "witness": {
                        "oneOf": [
                            {"type": "null"},
                            {"type": "object",
                             "required": ["lhs", "rhs"],
                             "properties": {"lhs": {"type": "string"},
                                            "rhs": {"type": "string"}}},
                        ]
                    },
                    "ms": {"type": "number"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "inconclusive"],
            "properties": {s: {"type": "integer"} for s in STATUSES},
        },
    },
}


class _Timer:
    ms = 0.0


@contextmanager
def timed():
    t = _Timer()
    start = time.perf_counter()
    try:
        yield t
    finally:
        t.ms = (time.perf_counter() - start) * 1000.0


@dataclass
class CheckRecord:
    suite: str
    code: str
    instance: str
    status: str
    witness: tuple | None = None  # (lhs, rhs) rendered expressions on fail
    ms: float = 0.0

    def sort_key(self):
        return (self.suite, self.code, self.instance)

    def to_json(self):
        w = None
        if self.witness is not None:
            w = {"lhs": str(self.witness[0]), "rhs": str(self.witness[1])}
        return {"suite": self.suite, "code": self.code, "instance": self.instance,
                "status": self.status, "witness": w, "ms": round(self.ms, 3)}

    def human(self):
        line = f"[{self.status.upper():12s}] {self.suite}/{self.code}: {self.instance}"
        if self.witness is not None:
            line += f"\n    lhs: {self.witness[0]}\n    rhs: {self.witness[1]}"
        return line


@dataclass
class Report:
    meta: dict
    checks: list = field(default_factory=list)

    def extend(self, records):
        self.checks.extend(records)

    def summary(self):
        out = {s: 0 for s in STATUSES}
        for r in self.checks:
            out[r.status] += 1
        return out

    def sorted_checks(self):
        return sorted(self.checks, key=CheckRecord.sort_key)

    def to_json(self):
        return {"meta": self.meta,
                "checks": [r.to_json() for r in self.sorted_checks()],
                "summary": self.summary()}

    def dump_json(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")

    def human_lines(self, verbose=False):
        lines = []
        for r in self.sorted_checks():
            if verbose or r.status != "pass":
                lines.append(r.human())
        s = self.summary()
        lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, "
                     f"{s['inconclusive']} inconclusive")
        return lines

    def exit_code(self):
        """0 all pass, 1 any fail, 2 inconclusive only."""
        s = self.summary()
        if s["fail"]:
            return 1
        if s["inconclusive"]:
            return 2
        return 0
