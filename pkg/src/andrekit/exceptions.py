from __future__ import annotations

from typing import Any


class NotDivisibleError(Exception):
    ...


class NotGammaExpressibleError(Exception):
    ...


class NotAValleyError(Exception):
    ...


class NotAndreError(Exception):
    ...


class NotASubsetError(Exception):
    ...


class NotInGError(Exception):
    ...


class MalformedPathError(Exception):
    ...


class MalformedDecompositionError(Exception):
    ...


class DomainError(Exception):
    ...


class EnumerationCapExceededError(Exception):
    ...


class TheoremViolationError(Exception):
    """Raised when two independently computed sides of an identity disagree."""

    def __init__(self, theorem: str, n: int, lhs: Any, rhs: Any, k: int | None = None) -> None:
        self.theorem = theorem
        self.n = n
        self.k = k
        self.lhs = lhs
        self.rhs = rhs
        where = f"n={n}" if k is None else f"n={n}, k={k}"
        super().__init__(f"{theorem} fails at {where}: {lhs} != {rhs}")
