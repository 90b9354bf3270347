"""Iterated circumscription: one similarity repeated, spiraling to a point.

Shows that every step applies the same rotation and scale, that the fixed
point does not depend on the angle, and renders a zoom sequence centered on
that point so the frames read as travel through a tunnel.
"""

import math
from pathlib import Path

from trigonlab.constructions import (
    Orientation,
    brocard_point,
    chain_step_similarity,
    iterate_circumscribe,
)
from trigonlab.corpus import corpus_source
from trigonlab.dsl import parse_source, run
from trigonlab.kernel import Point, Triangle, similarity_fixed_point
from trigonlab.render import RenderStyle, fit_viewport, render_frames

t = Triangle(Point(0.0, 0.0), Point(4.0, 0.0), Point(1.0, 2.0))

for degrees in (10.0, 25.0):
    chain = iterate_circumscribe(t, math.radians(degrees), Orientation.CLOCKWISE, 8)
    step = chain_step_similarity(chain)
    fixed = similarity_fixed_point(step)
    print(
        f"theta = {degrees:>4.1f} deg:"
        f"  step scale {step.scale:.6f}, step rotation {math.degrees(step.rotation):.6f} deg,"
        f"  fixed point ({fixed.x:.9f}, {fixed.y:.9f})"
    )

x = brocard_point(t)
print(f"common point of the side circles: ({x.x:.9f}, {x.y:.9f})  <- same point")

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
evaluation = run(parse_source(corpus_source("fig7")))
viewport = fit_viewport(evaluation.scene)
style = RenderStyle(hue_step=24.0)
for k, svg in enumerate(render_frames(evaluation.scene, viewport, 1.5, 8, style)):
    (out / f"tunnel-{k}.svg").write_text(svg, encoding="utf-8")
print(f"wrote 8 zoom frames to {out}")
