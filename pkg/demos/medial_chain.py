"""Walk the medial chain: each step joins the side midpoints.

Prints the side lengths down the chain (each exactly half the last) and the
centers that the steps leave behind, then renders the nested picture.
"""

from pathlib import Path

from trigonlab.constructions import euler_iteration_chain, iterate_medial
from trigonlab.corpus import corpus_source
from trigonlab.dsl import parse_source, run
from trigonlab.kernel import Point, Triangle
from trigonlab.render import fit_viewport, render_svg

t = Triangle(Point(0.0, 0.0), Point(6.0, 0.0), Point(1.0, 4.0))
chain = iterate_medial(t, 6)

print("side lengths down the chain:")
for k, tri in enumerate(chain.triangles):
    sides = ", ".join(f"{tri.side(i).length():.6f}" for i in range(3))
    print(f"  step {k}: {sides}")

print("\ncenters stay on one line; distances halve:")
for k, data in enumerate(euler_iteration_chain(t, 4)):
    o, h = data.circumcenter, data.orthocenter
    print(
        f"  step {k}: circumcenter ({o.x:+.6f}, {o.y:+.6f})"
        f"  orthocenter ({h.x:+.6f}, {h.y:+.6f})"
        f"  |OH| = {o.distance_to(h):.6f}"
    )

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
evaluation = run(parse_source(corpus_source("fig2")))
svg = render_svg(evaluation.scene, fit_viewport(evaluation.scene))
(out / "medial_chain.svg").write_text(svg, encoding="utf-8")
print(f"\nwrote {out / 'medial_chain.svg'}")
