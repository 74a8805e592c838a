"""Check outcomes and the serialized report format."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass


@dataclass
class CheckOutcome:
    """Result of one check before it is tied to a suite and an anchor."""

    check_id: str
    passed: bool
    witness: dict | None = None
    detail: str = ""


def outcome(check_id: str, diff, detail: str = "") -> CheckOutcome:
    """Passing outcome when ``diff`` is ``None``, otherwise a failure carrying it as witness."""
    if diff is None:
        return CheckOutcome(check_id, True, None, detail)
    w = diff.as_dict() if hasattr(diff, "as_dict") else dict(diff)
    return CheckOutcome(check_id, False, w, detail)


@dataclass
class CheckReport:
    check_id: str
    paper_anchor: str
    status: str
    witness: dict | None
    elapsed: float | None

    def as_dict(self) -> dict:
        return asdict(self)


def render_json(config: dict, reports: list[CheckReport]) -> str:
    return json.dumps({"config": config, "checks": [r.as_dict() for r in reports]},
                      indent=2, sort_keys=False) + "\n"


def render_text(config: dict, reports: list[CheckReport]) -> str:
    lines = ["config: " + ", ".join("%s=%s" % kv for kv in config.items())]
    for r in reports:
        line = "%-4s %-40s [%s]" % (r.status.upper(), r.check_id, r.paper_anchor)
        if r.elapsed is not None:
            line += " %.3fs" % r.elapsed
        lines.append(line)
        if r.witness:
            lines.append("     witness: " + json.dumps(r.witness, sort_keys=True))
    failed = sum(r.status == "fail" for r in reports)
    lines.append("%d checks, %d failed" % (len(reports), failed))
    return "\n".join(lines) + "\n"
