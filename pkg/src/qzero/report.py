"""Structured pass/fail reports shared by every verification suite."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

SCHEMA_VERSION = 1
TOOL_VERSION = "0.1.0"


@dataclass
class Check:
    name: str
    status: str  # pass | fail | info
    witness: str | None = None
    detail: dict | None = None

    def as_dict(self):
        d = {"name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    command: str
    params: dict
    checks: list = field(default_factory=list)
    completeness: dict = field(default_factory=dict)
    started: float = field(default_factory=time.time)

    def add(self, name, ok, witness=None, detail=None):
        status = "pass" if ok else "fail"
        if witness is not None and ok:
            witness = None
        self.checks.append(Check(name, status, witness, detail))
        return ok

    def info(self, name, detail=None, witness=None):
        self.checks.append(Check(name, "info", witness, detail))

    def extend(self, checks):
        self.checks.extend(checks)

    @property
    def failed(self):
        return [c for c in self.checks if c.status == "fail"]

    def ok(self):
        return not self.failed

    def as_dict(self):
        return {
            "schema": SCHEMA_VERSION,
            "tool_version": TOOL_VERSION,
            "command": self.command,
            "params": self.params,
            "checks": [c.as_dict() for c in self.checks],
            "completeness": self.completeness,
            "duration": round(time.time() - self.started, 3),
        }

    def to_json(self, indent=2):
        return json.dumps(self.as_dict(), indent=indent, sort_keys=False)

    def summary_lines(self):
        lines = []
        for c in self.checks:
            line = f"[{c.status.upper():4s}] {c.name}"
            if c.witness:
                line += f"  witness: {c.witness}"
            if c.detail:
                line += "  " + json.dumps(c.detail, sort_keys=True)
            lines.append(line)
        return lines
