"""Result records for the verification runner and their JSON form."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

STATUSES = ("pass", "fail", "skip", "error")


@dataclass
class CheckResult:
    check_id: str
    paper_anchor: str
    status: str
    computed: str
    expected: str
    elapsed_ms: int
    notes: str

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")


@dataclass
class VerificationReport:
    version: str
    seed: int
    results: list[CheckResult] = field(default_factory=list)

    def all_passed(self) -> bool:
        return all(r.status == "pass" for r in self.results)

    def has_failures(self) -> bool:
        return any(r.status in ("fail", "error") for r in self.results)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, ensure_ascii=False) + "\n"


def strip_timing(json_text: str) -> str:
    """The report with every elapsed_ms zeroed, for run-to-run comparison."""
    data = json.loads(json_text)
    for row in data.get("results", []):
        row["elapsed_ms"] = 0
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
