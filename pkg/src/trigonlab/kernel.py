"""Planar geometry kernel: primitives, intersections, angles, similarities, triangle centers.

All values are immutable and all operations are pure functions over IEEE-754
binary64 coordinates.  Degeneracy tests are dimensionless (scale-invariant)
and tolerance-based; there is no exact arithmetic.  Angles are radians
everywhere; signed angles are counterclockwise-positive in math orientation
(y axis up).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    CoincidentPoints,
    CollinearPoints,
    DegenerateSegment,
    DegenerateTriangle,
    IdenticalCircles,
    NoFixedPoint,
    NonFinitePoint,
    ParallelLines,
)

# Dimensionless degeneracy threshold shared by segment/triangle/parallel tests.
DEGENERACY_EPS = 1e-12
# |cross| of unit directions below this means parallel.
PARALLEL_EPS = 1e-12
# Floor for the scene scale so tolerances never become vacuous near the origin.
SCALE_FLOOR = 1.0


@dataclass(frozen=True)
class Point:
    """A point of the plane; both coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFinitePoint(f"non-finite point ({self.x}, {self.y})")

    def as_complex(self) -> complex:
        return complex(self.x, self.y)

    @staticmethod
    def from_complex(z: complex) -> "Point":
        return Point(z.real, z.imag)

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Line:
    """A line given by an anchor point and a unit direction vector."""

    anchor: Point
    dx: float
    dy: float

    def __post_init__(self):
        n2 = self.dx * self.dx + self.dy * self.dy
        if abs(n2 - 1.0) > 1e-12:
            raise ValueError(f"line direction not unit length: |d|^2 = {n2}")

    def point_at(self, t: float) -> Point:
        return Point(self.anchor.x + t * self.dx, self.anchor.y + t * self.dy)

    def distance_to(self, p: Point) -> float:
        """Perpendicular distance from p to the line."""
        rx, ry = p.x - self.anchor.x, p.y - self.anchor.y
        return abs(rx * self.dy - ry * self.dx)


@dataclass(frozen=True)
class Segment:
    """A segment between two points; zero length is allowed for drawing."""

    p: Point
    q: Point

    def length(self) -> float:
        return self.p.distance_to(self.q)


@dataclass(frozen=True)
class Circle:
    """A circle with positive radius."""

    center: Point
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"circle radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class Triangle:
    """A non-degenerate triangle.

    Degeneracy test: |twice signed area| must exceed DEGENERACY_EPS times the
    squared longest side, a dimensionless sliver criterion.
    """

    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        two_area = _twice_signed_area(self.a, self.b, self.c)
        longest = max(
            self.a.distance_to(self.b),
            self.b.distance_to(self.c),
            self.c.distance_to(self.a),
        )
        if not abs(two_area) > DEGENERACY_EPS * longest * longest:
            raise DegenerateTriangle(
                f"degenerate triangle {self.a}, {self.b}, {self.c}"
            )

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    def vertex(self, k: int) -> Point:
        return self.vertices[k % 3]

    def side(self, k: int) -> Segment:
        """Side k is opposite vertex k, oriented vertex k+1 -> vertex k+2."""
        return Segment(self.vertex(k + 1), self.vertex(k + 2))

    def longest_side(self) -> float:
        return max(self.side(k).length() for k in range(3))

    def signed_area(self) -> float:
        return 0.5 * _twice_signed_area(self.a, self.b, self.c)

    def angles(self) -> tuple[float, float, float]:
        """Interior angles at vertices a, b, c."""
        return tuple(
            angle_at(self.vertex(k), self.vertex(k + 1), self.vertex(k + 2))
            for k in range(3)
        )


@dataclass(frozen=True)
class Similarity:
    """A direct plane similarity z -> a*z + b with a = scale * e^(i*rotation).

    rotation is signed in (-pi, pi]; scale is positive.  Composition
    multiplies scales and adds rotations.
    """

    rotation: float
    scale: float
    tx: float
    ty: float

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0.0):
            raise ValueError(f"similarity scale must be positive, got {self.scale}")

    @property
    def a(self) -> complex:
        return self.scale * cmath.exp(1j * self.rotation)

    @property
    def b(self) -> complex:
        return complex(self.tx, self.ty)

    def apply(self, p: Point) -> Point:
        return Point.from_complex(self.a * p.as_complex() + self.b)

    def apply_triangle(self, t: Triangle) -> Triangle:
        return Triangle(self.apply(t.a), self.apply(t.b), self.apply(t.c))


def _twice_signed_area(a: Point, b: Point, c: Point) -> float:
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def scene_scale(*points: Point) -> float:
    """Largest pairwise distance among the given points, floored at 1.0."""
    best = 0.0
    pts = list(points)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            best = max(best, pts[i].distance_to(pts[j]))
    return max(best, SCALE_FLOOR)


def normalize_angle(theta: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    wrapped = math.remainder(theta, math.tau)
    if wrapped <= -math.pi:
        wrapped = math.pi
    return wrapped


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2.0, (p.y + q.y) / 2.0)


def line_through(p: Point, q: Point) -> Line:
    """Line anchored at p, directed toward q."""
    d = p.distance_to(q)
    if d < DEGENERACY_EPS * scene_scale(p, q):
        raise CoincidentPoints(f"cannot direct a line through coincident points {p}, {q}")
    return Line(p, (q.x - p.x) / d, (q.y - p.y) / d)


def line_with_direction(p: Point, dx: float, dy: float) -> Line:
    """Line through p with the given (not necessarily unit) direction."""
    n = math.hypot(dx, dy)
    if n < DEGENERACY_EPS:
        raise CoincidentPoints("zero direction vector")
    return Line(p, dx / n, dy / n)


def intersect_lines(l1: Line, l2: Line) -> Point:
    """The unique common point of two non-parallel lines."""
    cross = l1.dx * l2.dy - l1.dy * l2.dx
    if abs(cross) < PARALLEL_EPS:
        raise ParallelLines(f"lines are parallel within {PARALLEL_EPS}")
    rx = l2.anchor.x - l1.anchor.x
    ry = l2.anchor.y - l1.anchor.y
    t = (rx * l2.dy - ry * l2.dx) / cross
    return l1.point_at(t)


def perpendicular_bisector(p: Point, q: Point) -> Line:
    """Line through midpoint(p, q) perpendicular to pq."""
    d = p.distance_to(q)
    if d < DEGENERACY_EPS * scene_scale(p, q):
        raise CoincidentPoints(f"no bisector for coincident points {p}, {q}")
    return Line(midpoint(p, q), -(q.y - p.y) / d, (q.x - p.x) / d)


def perpendicular_through(p: Point, l: Line) -> Line:
    """Line through p perpendicular to l."""
    return Line(p, -l.dy, l.dx)


def circle_through(p: Point, q: Point, r: Point) -> Circle:
    """The circle through three non-collinear points."""
    two_area = _twice_signed_area(p, q, r)
    longest = max(p.distance_to(q), q.distance_to(r), r.distance_to(p))
    if abs(two_area) <= DEGENERACY_EPS * longest * longest:
        raise CollinearPoints(f"collinear points {p}, {q}, {r}")
    d = 2.0 * two_area
    np_, nq, nr = (
        p.x * p.x + p.y * p.y,
        q.x * q.x + q.y * q.y,
        r.x * r.x + r.y * r.y,
    )
    ux = (np_ * (q.y - r.y) + nq * (r.y - p.y) + nr * (p.y - q.y)) / d
    uy = (np_ * (r.x - q.x) + nq * (p.x - r.x) + nr * (q.x - p.x)) / d
    center = Point(ux, uy)
    return Circle(center, center.distance_to(p))


def intersect_circles(c1: Circle, c2: Circle) -> list[Point]:
    """Common points of two distinct circles: 0, 1, or 2 of them.

    Two-point results are ordered deterministically: the point on the
    positive (left) side of the oriented center-to-center line comes first.
    """
    rmax = max(c1.radius, c2.radius)
    d = c1.center.distance_to(c2.center)
    if d <= DEGENERACY_EPS * rmax and abs(c1.radius - c2.radius) <= DEGENERACY_EPS * rmax:
        raise IdenticalCircles("circles coincide within tolerance")
    if d <= DEGENERACY_EPS * rmax:
        return []  # concentric, distinct radii
    ux, uy = (c2.center.x - c1.center.x) / d, (c2.center.y - c1.center.y) / d
    a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d)
    h2 = c1.radius * c1.radius - a * a
    base = Point(c1.center.x + a * ux, c1.center.y + a * uy)
    tangent_tol = 1e-9 * rmax
    if h2 <= 0.0:
        if h2 > -(tangent_tol * tangent_tol):
            return [base]
        return []
    h = math.sqrt(h2)
    if h <= tangent_tol:
        return [base]
    # (-uy, ux) is the left normal of the oriented center line.
    return [
        Point(base.x - h * uy, base.y + h * ux),
        Point(base.x + h * uy, base.y - h * ux),
    ]


def angle_at(vertex: Point, p: Point, q: Point) -> float:
    """Unsigned angle in [0, pi] between rays vertex->p and vertex->q."""
    scale = scene_scale(vertex, p, q)
    if (
        vertex.distance_to(p) < DEGENERACY_EPS * scale
        or vertex.distance_to(q) < DEGENERACY_EPS * scale
    ):
        raise CoincidentPoints("angle vertex coincides with a ray point")
    ux, uy = p.x - vertex.x, p.y - vertex.y
    wx, wy = q.x - vertex.x, q.y - vertex.y
    return math.atan2(abs(ux * wy - uy * wx), ux * wx + uy * wy)


def signed_angle(from_dir: tuple[float, float], to_dir: tuple[float, float]) -> float:
    """Counterclockwise angle in (-pi, pi] rotating from_dir onto to_dir."""
    (ax, ay), (bx, by) = from_dir, to_dir
    ang = math.atan2(ax * by - ay * bx, ax * bx + ay * by)
    if ang <= -math.pi:
        ang = math.pi
    return ang


def rotate_about(p: Point, center: Point, theta: float) -> Point:
    """Rotate p about center by theta (counterclockwise positive)."""
    z = (p.as_complex() - center.as_complex()) * cmath.exp(1j * theta)
    return Point.from_complex(z + center.as_complex())


def similarity_between(seg1: Segment, seg2: Segment) -> Similarity:
    """The unique direct similarity mapping seg1.p->seg2.p and seg1.q->seg2.q."""
    scale = scene_scale(seg1.p, seg1.q, seg2.p, seg2.q)
    if seg1.length() < DEGENERACY_EPS * scale or seg2.length() < DEGENERACY_EPS * scale:
        raise DegenerateSegment("similarity requires two non-degenerate segments")
    z1, w1 = seg1.p.as_complex(), seg1.q.as_complex()
    z2, w2 = seg2.p.as_complex(), seg2.q.as_complex()
    a = (w2 - z2) / (w1 - z1)
    b = z2 - a * z1
    rotation = cmath.phase(a)
    if rotation <= -math.pi:
        rotation = math.pi
    return Similarity(rotation=rotation, scale=abs(a), tx=b.real, ty=b.imag)


def similarity_fixed_point(s: Similarity) -> Point:
    """The unique point z with s(z) = z, i.e. z = b / (1 - a)."""
    a = s.a
    if abs(1.0 - a) <= 1e-12:
        raise NoFixedPoint("similarity is a near-pure translation")
    return Point.from_complex(s.b / (1.0 - a))


def centroid(t: Triangle) -> Point:
    return Point((t.a.x + t.b.x + t.c.x) / 3.0, (t.a.y + t.b.y + t.c.y) / 3.0)


def circumcenter(t: Triangle) -> Point:
    """Center of the circle through the three vertices."""
    return circle_through(t.a, t.b, t.c).center


def circumradius(t: Triangle) -> float:
    return circumcenter(t).distance_to(t.a)


def orthocenter(t: Triangle) -> Point:
    """Common point of the three altitudes, via two altitude intersections."""
    alt_a = perpendicular_through(t.a, line_through(t.b, t.c))
    alt_b = perpendicular_through(t.b, line_through(t.c, t.a))
    return intersect_lines(alt_a, alt_b)


def point_on_circle(c: Circle, p: Point, tol: float) -> bool:
    """True iff p is within tol * radius of the circle boundary."""
    return abs(p.distance_to(c.center) - c.radius) <= tol * c.radius
