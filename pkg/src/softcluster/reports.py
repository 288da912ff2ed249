"""Small report objects with deterministic text and JSON renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    holds: bool
    witness: dict[str, Any] | None = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "holds": self.holds, "witness": self.witness}


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    values: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_text(self) -> str:
        lines = [self.title]
        for c in self.checks:
            status = "HOLDS" if c.holds else "FAILS"
            line = f"  {c.name}: {status}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        for k, v in self.values.items():
            lines.append(f"  {k} = {v}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "records": [c.to_dict() for c in self.checks],
            "values": self.values,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)
