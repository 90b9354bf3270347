"""Stable text and JSON formatting for check reports.

Both formats are deterministic for a given report list: fixed field order,
shortest-repr numbers, and sorted JSON keys, so repeated runs with the same
seed compare byte-identical.
"""

from __future__ import annotations

import json

from .checks import CheckReport


def format_report_line(report: CheckReport) -> str:
    verdict = "pass" if report.passed else "fail"
    line = (
        f"check {report.name} {verdict} "
        f"residual={report.max_residual()!r} tol={report.tolerance!r}"
    )
    if report.trial_seed is not None:
        line += f" seed={report.trial_seed}"
    return line


def format_report_lines(reports: list[CheckReport]) -> str:
    return "".join(format_report_line(r) + "\n" for r in reports)


def report_to_jsonable(report: CheckReport) -> dict:
    return {
        "name": report.name,
        "passed": report.passed,
        "residuals": [[label, value] for label, value in report.residuals],
        "measured": [[label, value] for label, value in report.measured],
        "tolerance": report.tolerance,
        "trial_seed": report.trial_seed,
    }


def reports_to_json(reports: list[CheckReport]) -> str:
    payload = {
        "schema": 1,
        "reports": [report_to_jsonable(r) for r in reports],
        "all_passed": all(r.passed for r in reports),
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=1)
