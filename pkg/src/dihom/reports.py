"""Machine-readable check reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

SCHEMA = 1


@dataclass
class CheckReport:
    check: str
    params: dict
    cases: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    _start: float = field(default_factory=time.perf_counter, repr=False)

    def add(self, name: str, passed: bool, diagnostic: bool = False,
            truncated: bool = False, data: dict | None = None, **extra: Any) -> dict:
        case = {"name": name, "passed": bool(passed), "diagnostic": diagnostic,
                "truncated": truncated, "data": {**(data or {}), **extra}}
        self.cases.append(case)
        return case

    @property
    def passed(self) -> bool:
        # diagnostics are informational and never decide the verdict
        return all(c["passed"] for c in self.cases if not c["diagnostic"])

    def finish(self) -> "CheckReport":
        self.wall_time = round(time.perf_counter() - self._start, 4)
        return self

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "check": self.check, "params": self.params,
                "verdict": "pass" if self.passed else "fail", "cases": self.cases,
                "wall_time": self.wall_time}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False, default=str)

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps() + "\n")

    def summary(self) -> str:
        lines = []
        for c in self.cases:
            tag = "diag" if c["diagnostic"] else ("ok" if c["passed"] else "FAIL")
            lines.append(f"  [{tag:>4}] {c['name']}")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"{self.check}: {verdict} ({len(self.cases)} cases, {self.wall_time:.2f}s)")
        return "\n".join(lines)
