"""Witness-reporting validation results.

Every validator in this package returns a Report rather than a bare
boolean: each named check carries the first few concrete witnesses of a
violation, so user-supplied structure constants can be debugged.
"""

from __future__ import annotations

from dataclasses import dataclass, field

WITNESS_CAP = 10


@dataclass
class Check:
    name: str
    witnesses: list[str] = field(default_factory=list)
    violations: int = 0

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def add(self, witness: str) -> None:
        self.violations += 1
        if len(self.witnesses) < WITNESS_CAP:
            self.witnesses.append(witness)


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def check(self, name: str) -> Check:
        c = Check(name)
        self.checks.append(c)
        return c

    def settle(self, name: str, ok: bool, witness: str = "") -> None:
        c = self.check(name)
        if not ok:
            c.add(witness or name)

    def merge(self, other: "Report") -> None:
        for c in other.checks:
            sub = Check(f"{other.title}: {c.name}", list(c.witnesses), c.violations)
            self.checks.append(sub)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def summary(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            status = "pass" if c.ok else f"fail ({c.violations} violations)"
            lines.append(f"  {c.name}: {status}")
            for w in c.witnesses:
                lines.append(f"    witness: {w}")
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "status": "pass" if c.ok else "fail",
                    "violations": c.violations,
                    "witnesses": list(c.witnesses),
                }
                for c in self.checks
            ],
        }
