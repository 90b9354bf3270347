"""The bundled .geo programs: clean evaluation, golden SVG stability."""

import math
import xml.dom.minidom
from pathlib import Path

import pytest

from trigonlab.constructions import brocard_point
from trigonlab.corpus import corpus_names, corpus_source
from trigonlab.dsl import format_program, parse_source, run
from trigonlab.kernel import Point, Triangle
from trigonlab.render import fit_viewport, render_svg

GOLDEN_DIR = Path(__file__).parent / "golden"
ALL_NAMES = corpus_names()


def _render(name: str) -> str:
    evaluation = run(parse_source(corpus_source(name)))
    assert evaluation.ok, evaluation.diagnostics
    return render_svg(evaluation.scene, fit_viewport(evaluation.scene))


class TestCorpusInventory:
    def test_one_program_per_figure(self):
        assert ALL_NAMES == (
            "fig1",
            "fig2",
            "fig3",
            "fig4",
            "fig5",
            "fig6",
            "fig7",
            "fig8",
            "fig10",
            "fig11",
        )

    def test_unknown_name_rejected(self):
        with pytest.raises(KeyError, match="fig9"):
            corpus_source("fig9")


@pytest.mark.parametrize("name", ALL_NAMES)
class TestEveryProgram:
    def test_evaluates_without_diagnostics(self, name):
        evaluation = run(parse_source(corpus_source(name)))
        assert evaluation.ok, evaluation.diagnostics
        assert len(evaluation.scene) > 0

    def test_renders_well_formed_svg(self, name):
        xml.dom.minidom.parseString(_render(name))

    def test_golden_svg_is_byte_stable(self, name):
        golden = (GOLDEN_DIR / f"{name}.svg").read_text(encoding="utf-8")
        assert _render(name) == golden
        assert _render(name) == golden  # and once more for determinism

    def test_formatting_is_idempotent(self, name):
        once = format_program(parse_source(corpus_source(name)))
        assert format_program(parse_source(once)) == once


class TestFigureContent:
    def test_fig1_draws_two_polygons(self):
        evaluation = run(parse_source(corpus_source("fig1")))
        polygons = [p for p in evaluation.scene if type(p).__name__ == "PolygonMark"]
        assert len(polygons) == 2
        assert [f[0] for f in evaluation.free_points] == ["A", "B", "C"]

    def test_fig2_draws_exactly_nine_polygons(self):
        svg = _render("fig2")
        assert svg.count("<polygon") == 9

    def test_fig7_sets_spiral_center_at_base_fixed_point(self):
        evaluation = run(parse_source(corpus_source("fig7")))
        center = evaluation.scene.spiral_center
        assert center is not None
        base = Triangle(Point(0.0, 0.0), Point(4.0, 0.0), Point(1.0, 2.0))
        expected = brocard_point(base)
        assert math.hypot(center[0] - expected.x, center[1] - expected.y) < 1e-6

    def test_fig11_draws_center_lines(self):
        svg = _render("fig11")
        assert svg.count("<polygon") == 4  # original plus three midpoint steps
        assert sum(1 for line in svg.splitlines() if line.startswith("<line")) == 4
