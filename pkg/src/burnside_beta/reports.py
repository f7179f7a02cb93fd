"""Structured pass/fail reports produced by the identity checkers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


def _encode(value):
    from .burnside import BurnsideElement

    if isinstance(value, BurnsideElement):
        return value.to_json()
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return str(value)


@dataclass
class Report:
    title: str
    notes: list[str] = field(default_factory=list)
    entries: list[dict[str, Any]] = field(default_factory=list)
    verdict: str | None = None

    def check(self, axiom: str, instance: dict, lhs, rhs) -> bool:
        ok = lhs == rhs
        self.entries.append({"axiom": axiom, "instance": instance, "status": "pass" if ok else "fail",
                             "lhs": lhs, "rhs": rhs})
        return ok

    def record(self, axiom: str, instance: dict, ok: bool, lhs=None, rhs=None):
        self.entries.append({"axiom": axiom, "instance": instance, "status": "pass" if ok else "fail",
                             "lhs": lhs, "rhs": rhs})

    def extend(self, other: "Report"):
        self.entries.extend(other.entries)
        self.notes.extend(n for n in other.notes if n not in self.notes)

    @property
    def failures(self) -> list[dict]:
        return [e for e in self.entries if e["status"] == "fail"]

    def failures_for(self, axiom: str) -> list[dict]:
        return [e for e in self.failures if e["axiom"] == axiom]

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, axiom: str | None = None) -> int:
        return sum(1 for e in self.entries if axiom is None or e["axiom"] == axiom)

    def axioms(self) -> list[str]:
        seen: list[str] = []
        for e in self.entries:
            if e["axiom"] not in seen:
                seen.append(e["axiom"])
        return seen

    def to_json(self) -> list[dict]:
        return [{"axiom": e["axiom"], "instance": _encode(e["instance"]), "status": e["status"],
                 "lhs": _encode(e["lhs"]), "rhs": _encode(e["rhs"])} for e in self.entries]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    def summary(self) -> str:
        lines = [self.title]
        lines.extend(f"  note: {n}" for n in self.notes)
        for ax in self.axioms():
            total = self.count(ax)
            bad = len(self.failures_for(ax))
            lines.append(f"  {ax}: {total - bad}/{total} pass")
        if self.verdict:
            lines.append(f"  verdict: {self.verdict}")
        return "\n".join(lines)

    def __str__(self):
        return self.summary()
