"""Exception types shared across the package."""

from __future__ import annotations


class ValidationError(ValueError):
    """Input violates a structural contract (dimensions, ranges, sums).

    ``issues`` holds one human-readable string per violation so callers
    can report all problems at once instead of the first.
    """

    def __init__(self, message: str, issues: list[str] | None = None):
        super().__init__(message)
        self.issues = list(issues or [])


class DocumentError(ValidationError):
    """A document failed to parse or referenced an unknown schema."""


class DegenerateChainError(RuntimeError):
    """The joint chain is not ergodic, so the determinant shortcut is
    undefined; use the stationary-score fallback instead."""


class InfeasibleTargetError(ValueError):
    """No cooperation-probability vector in [0,1]^4 implements the
    requested forced score."""

    def __init__(self, message: str, target: float, lower: float, upper: float):
        super().__init__(message)
        self.target = target
        self.lower = lower
        self.upper = upper
