"""Verification report records shared by the checker modules.

Claim identifiers are stable strings intended for CI consumption:
"missing-subsets", "missing-covering", "thm-g", "thm-f-2n-minus-n",
"monotonicity", "fg-duality".
"""

from __future__ import annotations

from dataclasses import dataclass, field

VERIFIED = "verified"
VIOLATED = "violated"
SKIPPED = "skipped"


@dataclass
class VerificationReport:
    claim: str
    scope: dict
    status: str
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.status not in (VERIFIED, VIOLATED, SKIPPED):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == VIOLATED) != bool(self.violations):
            raise ValueError("status is 'violated' iff violations is nonempty")

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "scope": self.scope,
            "status": self.status,
            "violations": self.violations,
            "notes": self.notes,
        }


def report(claim: str, scope: dict, violations: list, notes: list | None = None,
           skipped: bool = False) -> VerificationReport:
    """Build a report with the status derived from the violation list."""
    if violations:
        status = VIOLATED
    elif skipped:
        status = SKIPPED
    else:
        status = VERIFIED
    return VerificationReport(claim, scope, status, violations, notes or [])
