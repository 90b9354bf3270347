"""The three side circles meet at one point that sees every side equally.

Each circle passes through a side's endpoints and the matching vertex of a
circumscribed copy; the circle does not care which angle built the copy,
and all three meet where the equal-angle condition holds.
"""

import math

from trigonlab.constructions import brocard_angle, brocard_point, equal_angle_triple, vertex_circle
from trigonlab.kernel import Point, Triangle

t = Triangle(Point(0.0, 0.0), Point(4.0, 0.0), Point(1.0, 2.0))

print("side circles for three different construction angles:")
for k in range(3):
    for degrees in (10.0, 20.0, 35.0):
        c = vertex_circle(t, k, math.radians(degrees))
        print(
            f"  side {k}, theta {degrees:>4.1f} deg:"
            f"  center ({c.center.x:.9f}, {c.center.y:.9f})  radius {c.radius:.9f}"
        )
    print()

x = brocard_point(t)
angles = equal_angle_triple(t, x)
print(f"common point: ({x.x:.9f}, {x.y:.9f})")
print("angles against the three sides:", ", ".join(f"{math.degrees(a):.9f} deg" for a in angles))

a, b, c = t.angles()
oracle = math.atan(1.0 / sum(1.0 / math.tan(v) for v in (a, b, c)))
print(f"arccot of the cotangent sum:    {math.degrees(oracle):.9f} deg")
print(f"brocard_angle(t):               {math.degrees(brocard_angle(t)):.9f} deg")
