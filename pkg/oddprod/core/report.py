"""
Validation reports shared by every validator and verifier
"""

import json
from dataclasses import dataclass, field
from typing import Iterable, List, Tuple


@dataclass(frozen=True)
class Violation:
    """A single failed rule: machine-readable id, offending indices, message"""

    rule_id: str
    indices: Tuple
    message: str

    def to_dict(self) -> dict:
        return {"rule": self.rule_id, "indices": _jsonable(self.indices), "message": self.message}


def _jsonable(value):
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    return value


@dataclass
class ValidationReport:
    """Outcome of a validation pass; ``ok`` holds exactly when there are no violations"""

    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, rule_id: str, indices: Iterable, message: str) -> None:
        self.violations.append(Violation(rule_id, tuple(indices), message))

    def extend(self, other: "ValidationReport") -> "ValidationReport":
        self.violations.extend(other.violations)
        return self

    def rules(self) -> List[str]:
        """Distinct rule ids in first-seen order"""
        seen: List[str] = []
        for violation in self.violations:
            if violation.rule_id not in seen:
                seen.append(violation.rule_id)
        return seen

    def to_json_lines(self) -> str:
        """One JSON object per violation, newline separated"""
        return "".join(json.dumps(v.to_dict(), sort_keys=True) + "\n" for v in self.violations)

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        lines = [f"{len(self.violations)} violation(s):"]
        lines.extend(f"  - [{v.rule_id}] {v.message}" for v in self.violations)
        return "\n".join(lines)
