"""Dataclasses for validation reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List


NOT_APPLICABLE = "not applicable"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    """Ordered results of the necessary-condition checks."""

    checks: List[CheckResult] = field(default_factory=list)
    divisor: int = 1

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def get(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "overall": self.overall,
            "divisor": self.divisor,
            "checks": [
                {"name": check.name, "passed": check.passed, "detail": check.detail}
                for check in self.checks
            ],
        }

    def render(self) -> str:
        lines = [f"effectiveness divisor: {self.divisor}"]
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            lines.append(f"[{status}] {check.name}: {check.detail}")
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines) + "\n"
