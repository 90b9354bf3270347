"""Report line and JSON formatting."""

import json

from trigonlab.checks import CheckReport
from trigonlab.reportfmt import format_report_line, format_report_lines, reports_to_json

PASSING = CheckReport(
    name="euler_line",
    passed=True,
    residuals=(("collinear", 1.5e-12), ("ratio", 3e-13)),
    measured=(("distance_go", 0.8),),
    tolerance=1e-9,
    trial_seed=42,
)
FAILING = CheckReport(
    name="spiral",
    passed=False,
    residuals=(("scale_ratio_spread", 0.25),),
    measured=(),
    tolerance=1e-9,
)


class TestLineFormat:
    def test_pass_line(self):
        assert (
            format_report_line(PASSING)
            == "check euler_line pass residual=1.5e-12 tol=1e-09 seed=42"
        )

    def test_fail_line_without_seed(self):
        assert format_report_line(FAILING) == "check spiral fail residual=0.25 tol=1e-09"

    def test_lines_join_with_trailing_newline(self):
        text = format_report_lines([PASSING, FAILING])
        assert text.endswith("\n")
        assert len(text.splitlines()) == 2


class TestJsonFormat:
    def test_round_trips_and_sorts_keys(self):
        text = reports_to_json([PASSING, FAILING])
        payload = json.loads(text)
        assert payload["schema"] == 1
        assert payload["all_passed"] is False
        names = [r["name"] for r in payload["reports"]]
        assert names == ["euler_line", "spiral"]
        assert payload["reports"][0]["residuals"][0] == ["collinear", 1.5e-12]
        assert payload["reports"][1]["trial_seed"] is None

    def test_byte_stable(self):
        assert reports_to_json([PASSING]) == reports_to_json([PASSING])
