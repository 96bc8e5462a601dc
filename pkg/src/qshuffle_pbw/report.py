"""
Structured results of identity checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .freealg import Element


@dataclass
class IdentityCheck:
    id: str
    degree: int
    status: str  # "pass" or "fail"
    witness: Element | None = None
    detail: str = ""
    elapsed: float = 0.0
    description: str = ""

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and (self.witness is None or self.witness.is_zero()):
            raise ValueError(f"{self.id}: a failing check needs a nonzero witness")

    @property
    def passed(self):
        return self.status == "pass"

    def to_json(self, timing=True):
        from .textio import element_to_json
        d = {"id": self.id, "status": self.status, "degree": self.degree,
             "witness": None if self.witness is None else element_to_json(self.witness)}
        if self.detail:
            d["detail"] = self.detail
        if timing:
            d["elapsed"] = round(self.elapsed, 4)
        return d


@dataclass
class VerificationReport:
    N: int
    q0: Fraction
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def summary(self):
        n_pass = sum(c.passed for c in self.checks)
        return {"total": len(self.checks), "pass": n_pass,
                "fail": len(self.checks) - n_pass}

    def get(self, check_id):
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def merge(self, other):
        ids = {c.id for c in self.checks}
        dup = ids & {c.id for c in other.checks}
        if dup:
            raise ValueError(f"duplicate checks: {sorted(dup)}")
        merged = VerificationReport(self.N, self.q0, self.checks + other.checks)
        merged.checks.sort(key=lambda c: c.id)
        return merged

    def to_json(self, timing=True):
        return {"params": {"N": self.N, "q0": str(self.q0)},
                "checks": [c.to_json(timing) for c in self.checks],
                "summary": self.summary()}
