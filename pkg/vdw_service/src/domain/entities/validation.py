from dataclasses import dataclass, field
from typing import List, Optional


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    value: Optional[float] = None
    expected: Optional[float] = None


@dataclass
class ValidationReport:
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def add(self, check: CheckResult) -> None:
        self.checks.append(check)
