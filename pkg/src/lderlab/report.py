"""Check results and the versioned report format shared by every command."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA = 1
STATUSES = ("pass", "fail", "flag", "skip")


@dataclass
class Check:
    """One verified claim. ``flag`` marks a documented disagreement with a published claim."""

    id: str
    status: str
    details: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    def as_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "details": self.details, "witnesses": self.witnesses}


def outcome(check_id: str, ok: bool, details=None, witnesses=None) -> Check:
    return Check(check_id, "pass" if ok else "fail", details or {}, witnesses or {})


@dataclass
class Report:
    command: list
    config: dict
    checks: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)
    result: dict = field(default_factory=dict)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    def counts(self) -> dict:
        return {s: sum(c.status == s for c in self.checks) for s in STATUSES}

    @property
    def ok(self) -> bool:
        return not any(c.status == "fail" for c in self.checks)

    def as_dict(self) -> dict:
        out = {
            "schema": SCHEMA,
            "command": self.command,
            "config": self.config,
            "summary": self.counts(),
        }
        if self.result:
            out["result"] = self.result
        out["checks"] = [c.as_dict() for c in self.checks]
        out["discrepancies"] = self.discrepancies
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"command: {' '.join(self.command)}"]
        lines.append("config: " + ", ".join(f"{k}={v}" for k, v in self.config.items()))
        if self.result:
            lines.append("result:")
            for key, value in self.result.items():
                lines.append(f"  {key}: {json.dumps(value, ensure_ascii=False)}")
        for c in self.checks:
            detail = "; ".join(f"{k}={json.dumps(v, ensure_ascii=False)}" for k, v in c.details.items())
            lines.append(f"[{c.status.upper():4}] {c.id}" + (f"  {detail}" if detail else ""))
        for d in self.discrepancies:
            lines.append(f"discrepancy {d['id']}: {d['claim']} -> {d['computed']}")
        counts = self.counts()
        lines.append("summary: " + ", ".join(f"{counts[s]} {s}" for s in STATUSES))
        return "\n".join(lines) + "\n"
