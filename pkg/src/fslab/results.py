from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    """Outcome of one theorem verifier on one instance.

    ``hypothesis`` records whether the statement's premise held, so a pass can
    be told apart from a vacuous pass.  A failure is an outcome, not an error.
    """

    name: str
    passed: bool
    hypothesis: bool = True
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "hypothesis": self.hypothesis,
            "details": self.details,
        }
