"""Check reports as emitted by the command line tool (text and JSON lines)."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Any

__all__ = ["CheckReport", "VERDICTS", "MODES"]

VERDICTS = ("pass", "fail", "inconclusive")
MODES = ("exact", "sampled")


def _plain(value: Any) -> Any:
    """Coerce to JSON-native values so a report survives a round trip unchanged."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in value]
        return sorted(items, key=repr) if isinstance(value, (set, frozenset)) else items
    if hasattr(value, "item"):  # numpy scalars
        return value.item()
    return str(value)


@dataclass
class CheckReport:
    check_name: str
    claim: str
    mode: str
    verdict: str
    measured: Any = None
    expected: Any = None
    witness: Any = None
    runtime_ms: float = 0.0

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}")
        self.measured = _plain(self.measured)
        self.expected = _plain(self.expected)
        self.witness = _plain(self.witness)
        self.runtime_ms = round(float(self.runtime_ms), 3)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "CheckReport":
        return cls(**json.loads(line))

    def to_text(self) -> str:
        mark = {"pass": "PASS", "fail": "FAIL", "inconclusive": "----"}[self.verdict]
        text = (
            f"[{mark}] {self.check_name} ({self.mode}): {self.claim}; "
            f"measured={self.measured} expected={self.expected} [{self.runtime_ms:.1f} ms]"
        )
        if self.witness is not None and self.verdict == "fail":
            text += f"\n       witness: {self.witness}"
        return text
