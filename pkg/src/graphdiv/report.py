"""Versioned run reports: assembly, serialization, and scrubbing.

Reports are deterministic given the same seed and inputs: records are
sorted by their graph6 string and serialization sorts keys. The only
volatile content is wall-clock data (the top-level timestamp and the
per-record timings), which ``scrub_volatile`` strips for comparisons.
"""

import json
import time

SCHEMA_VERSION = 1
VOLATILE_KEYS = frozenset({"timestamp", "elapsed_ms"})

STATUS_OK = "ok"
STATUS_VERIFY_FAILED = "verify-failed"
STATUS_CLASS_VIOLATION = "class-violation"
STATUS_THEOREM_VIOLATION = "theorem-violation"
STATUS_BUDGET_EXCEEDED = "budget-exceeded"
STATUS_PARSE_ERROR = "parse-error"

_ALL_STATUSES = (
    STATUS_OK,
    STATUS_VERIFY_FAILED,
    STATUS_CLASS_VIOLATION,
    STATUS_THEOREM_VIOLATION,
    STATUS_BUDGET_EXCEEDED,
    STATUS_PARSE_ERROR,
)


def build_report(command: str, records, *, seed=None, options=None) -> dict:
    """Assemble the versioned report envelope around ``records``."""
    ordered = sorted(records, key=lambda r: r.get("graph6", ""))
    summary = {"total": len(ordered)}
    for status in _ALL_STATUSES:
        count = sum(1 for r in ordered if r.get("status") == status)
        if count:
            summary[status] = count
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "seed": seed,
        "options": options or {},
        "records": ordered,
        "summary": summary,
        "timestamp": time.time(),
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def scrub_volatile(value):
    """Copy of ``value`` with every volatile key removed, recursively."""
    if isinstance(value, dict):
        return {k: scrub_volatile(v) for k, v in value.items() if k not in VOLATILE_KEYS}
    if isinstance(value, list):
        return [scrub_volatile(v) for v in value]
    return value
