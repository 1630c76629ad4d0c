from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Failure:
    check: str
    message: str
    witness: tuple = ()

    def to_dict(self) -> dict[str, Any]:
        return {"check": self.check, "message": self.message, "witness": [str(w) for w in self.witness]}


@dataclass
class ValidationReport:
    """Outcome of a batch of exact checks; truthy iff nothing failed."""

    subject: str = ""
    failures: list[Failure] = field(default_factory=list)
    checked: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, check: str, message: str, *witness: Any) -> None:
        self.failures.append(Failure(check, message, tuple(witness)))

    def passed(self, check: str) -> bool:
        return not any(f.check == check for f in self.failures)

    def merge(self, other: "ValidationReport", prefix: str = "") -> None:
        self.checked.extend(prefix + c for c in other.checked)
        for f in other.failures:
            self.failures.append(Failure(prefix + f.check, f.message, f.witness))

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checked": list(self.checked),
            "failures": [f.to_dict() for f in self.failures],
        }

    def __str__(self) -> str:
        head = f"{self.subject or 'report'}: {'valid' if self.ok else 'INVALID'}"
        lines = [head]
        for f in self.failures:
            w = f" at {f.witness}" if f.witness else ""
            lines.append(f"  [{f.check}] {f.message}{w}")
        return "\n".join(lines)
