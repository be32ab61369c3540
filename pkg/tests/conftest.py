"""Shared pytest configuration.

Acceptance tests are named ``test_cNN_...``; after the run one summary line
per criterion is printed, failing if any of its parametrizations failed.
"""
from __future__ import annotations

import re
from collections import OrderedDict

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_CRITERION = re.compile(r"test_acceptance\.py::test_c(\d+)_(\w+?)(\[(.*)\])?$")


def pytest_terminal_summary(terminalreporter):
    rows = OrderedDict()
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call" and outcome == "passed":
                continue
            m = _CRITERION.search(rep.nodeid)
            if not m:
                continue
            num = int(m.group(1))
            row = rows.setdefault(num, {"failed": [], "passed": 0})
            if outcome == "passed":
                row["passed"] += 1
            else:
                row["failed"].append(f"{m.group(2)}[{m.group(4)}]" if m.group(4) else m.group(2))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(rows):
        row = rows[num]
        status = "FAIL" if row["failed"] else "PASS"
        extra = f"  failing: {', '.join(row['failed'])}" if row["failed"] else ""
        terminalreporter.write_line(f"criterion {num:2d}: {status}{extra}")
