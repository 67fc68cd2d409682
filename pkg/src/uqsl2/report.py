"""Structured pass/fail reports for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckItem:
    name: str
    passed: bool
    witness: str = ""

    def to_json(self):
        out = {"name": self.name, "passed": self.passed}
        if self.witness:
            out["witness"] = self.witness
        return out


@dataclass
class CheckReport:
    suite: str
    items: list[CheckItem] = field(default_factory=list)

    def check(self, name: str, passed: bool, witness: str = ""):
        self.items.append(CheckItem(name, bool(passed), "" if passed else witness))

    def check_zero(self, name: str, diff):
        """Record an identity check where diff should be the zero element."""
        ok = not diff
        self.items.append(CheckItem(name, ok, "" if ok else f"nonzero difference: {diff!r}"))

    @property
    def ok(self) -> bool:
        return all(item.passed for item in self.items)

    def failures(self) -> list[CheckItem]:
        return [item for item in self.items if not item.passed]

    def to_json(self):
        return {"suite": self.suite, "passed": self.ok,
                "items": [item.to_json() for item in self.items]}
