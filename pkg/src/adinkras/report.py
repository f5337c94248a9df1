"""Pass/fail reports returned by the validators."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Any = None

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        if self.passed or self.witness is None:
            return f"{status} {self.name}"
        return f"{status} {self.name}: {self.witness}"


@dataclass
class ValidationReport:
    """Ordered list of named checks; failures carry a witness."""

    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: Any = None) -> None:
        self.checks.append(Check(name, bool(passed), None if passed else witness))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.checks)
