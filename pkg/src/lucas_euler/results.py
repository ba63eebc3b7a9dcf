"""Check verdicts and the report container shared by all checkers."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Optional

from . import __version__

__all__ = ["CheckResult", "Report", "render"]


def render(value) -> str:
    """Lossless string form of an exact value (never a float)."""
    if isinstance(value, tuple):
        return "(" + ", ".join(render(v) for v in value) + ")"
    return str(value)


@dataclass
class CheckResult:
    id: str
    grid: dict
    status: str  # "pass" | "fail"
    counterexample: Optional[dict] = None
    millis: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = asdict(self)
        if self.counterexample is None:
            del out["counterexample"]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> CheckResult:
        return cls(
            id=data["id"],
            grid=data["grid"],
            status=data["status"],
            counterexample=data.get("counterexample"),
            millis=data.get("millis", 0.0),
        )


@dataclass
class Report:
    results: list = field(default_factory=list)
    version: str = __version__
    timestamp: str = field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds")
    )

    @property
    def summary(self) -> dict:
        passed = sum(r.passed for r in self.results)
        return {"pass": passed, "fail": len(self.results) - passed}

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "timestamp": self.timestamp,
            "results": [r.to_dict() for r in self.results],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> Report:
        report = cls(
            results=[CheckResult.from_dict(r) for r in data["results"]],
            version=data["version"],
            timestamp=data["timestamp"],
        )
        if data.get("summary", report.summary) != report.summary:
            raise ValueError("report summary does not match its results")
        return report

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "status", "counterexample"])
        for r in self.results:
            ce = "" if r.counterexample is None else json.dumps(r.counterexample, sort_keys=True)
            w.writerow([r.id, r.status, ce])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            grid = " ".join(f"{k}={v}" for k, v in r.grid.items())
            line = f"{r.status.upper():4}  {r.id:16} {grid}"
            if r.counterexample is not None:
                line += f"\n      counterexample: {json.dumps(r.counterexample, sort_keys=True)}"
            lines.append(line)
        s = self.summary
        lines.append(f"{s['pass']} passed, {s['fail']} failed")
        return "\n".join(lines) + "\n"
