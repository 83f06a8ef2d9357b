from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .enums import CaseStatus
from .exceptions import TheoremViolationError


@dataclass(frozen=True)
class TheoremReport:
    """What a verifier checked when an identity held."""

    theorem: str
    n: int
    checks: int
    detail: str = ""

    def __str__(self) -> str:
        suffix = f": {self.detail}" if self.detail else ""
        return f"{self.theorem} n={self.n} ({self.checks} checks){suffix}"


@dataclass(frozen=True)
class CaseResult:
    id: str
    status: CaseStatus
    detail: str

    @property
    def passed(self) -> bool:
        return self.status is CaseStatus.PASS

    def to_json_obj(self) -> dict[str, Any]:
        return {"id": self.id, "status": self.status.value, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    def failures(self) -> list[CaseResult]:
        return [case for case in self.cases if not case.passed]

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "cases": [case.to_json_obj() for case in self.cases],
            "elapsed": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=2)

    def __repr__(self) -> str:
        failed = len(self.failures())
        return f"SuiteReport (suite={self.suite}, cases={len(self.cases)}, failed={failed})"


def check_identity(theorem: str, n: int, lhs: Any, rhs: Any, k: int | None = None) -> None:
    """Raises TheoremViolationError unless both sides are equal."""
    if lhs != rhs:
        raise TheoremViolationError(theorem, n, lhs, rhs, k)
