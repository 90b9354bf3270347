"""Named triangle constructions: medial iteration, angle-parameterized
circumscription, vertex circles, Brocard point and angle, and Euler-line data.

Index conventions (held constant everywhere):

* vertices are indexed 0, 1, 2; side k is the side opposite vertex k,
  oriented from vertex k+1 to vertex k+2 (indices mod 3);
* for a positively oriented vertex labeling (counterclockwise in the y-up
  math frame) the circumscribing boundary line through vertex k is the
  incoming side direction (vertex k-1 -> vertex k) rotated by +theta for
  Orientation.CLOCKWISE, or the outgoing side direction (vertex k ->
  vertex k+1) rotated by -theta for Orientation.COUNTERCLOCKWISE.  The flag
  names the turning sense as it appears on a screen with the y axis pointing
  down; in the y-up math frame used here CLOCKWISE therefore corresponds to
  a positive (counterclockwise) rotation, and the similarity taking the
  input triangle onto its circumscribed image has signed rotation +theta
  (CLOCKWISE) or -theta (COUNTERCLOCKWISE);
* a negatively oriented labeling is normalized internally by the label swap
  (a, b, c) -> (a, c, b), computed in positive orientation, and mapped back,
  so the measured rotation and size ratio depend only on theta and the flag,
  never on which way the vertices happen to be listed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

from . import kernel
from .errors import (
    CollinearPoints,
    DegenerateCircumscription,
    DegenerateTriangle,
    EquilateralDegenerate,
    GeometryError,
    InvalidAngle,
    IterationCapExceeded,
)
from .kernel import Circle, Line, Point, Segment, Similarity, Triangle

# Hard cap on construction iteration depth; medial iteration underflows and
# circumscription overflows binary64 long before this for extreme angles.
ITERATION_CAP = 64

# Internal probe angle for locating the Brocard point via circle intersection.
# The vertex circles are probe-invariant, so any admissible angle works; 0.3 rad
# stays away from the collinear degeneracy at 0 and is halved on retry.
BROCARD_PROBE_ANGLE = 0.3
BROCARD_PROBE_RETRIES = 4

# Color tags for the three medians, assigned by vertex index.
MEDIAN_COLORS = ("red", "green", "blue")


class Orientation(enum.Enum):
    """Turning sense of the circumscription angle, in screen convention."""

    CLOCKWISE = "cw"
    COUNTERCLOCKWISE = "ccw"


@dataclass(frozen=True)
class MedialStep:
    """Chain step descriptor: each triangle is the midpoint triangle of the previous."""


@dataclass(frozen=True)
class CircumscribeStep:
    """Chain step descriptor: each triangle circumscribes the previous at a fixed angle."""

    theta: float
    orientation: Orientation


StepDescriptor = Union[MedialStep, CircumscribeStep]


@dataclass(frozen=True)
class TriangleChain:
    """An iterated construction: triangles[0] is the original."""

    triangles: tuple[Triangle, ...]
    step: StepDescriptor

    def __post_init__(self):
        if not self.triangles:
            raise ValueError("a triangle chain cannot be empty")

    def __len__(self) -> int:
        return len(self.triangles)

    def __getitem__(self, k: int) -> Triangle:
        return self.triangles[k]


@dataclass(frozen=True)
class EulerData:
    """The three classic centers of a triangle and the line through two of them."""

    centroid: Point
    circumcenter: Point
    orthocenter: Point
    line: Line


def medial_triangle(t: Triangle) -> Triangle:
    """Triangle joining the three side midpoints; similar to t at ratio 1/2.

    Vertex k of the result is the midpoint of side k (the side opposite
    vertex k of t).
    """
    return Triangle(
        kernel.midpoint(t.b, t.c),
        kernel.midpoint(t.c, t.a),
        kernel.midpoint(t.a, t.b),
    )


def median_segments(t: Triangle) -> tuple[Segment, Segment, Segment]:
    """The three medians, vertex k to the midpoint of the opposite side.

    Color tags follow MEDIAN_COLORS by vertex index.
    """
    return tuple(
        Segment(t.vertex(k), kernel.midpoint(t.vertex(k + 1), t.vertex(k + 2)))
        for k in range(3)
    )


def _positively_labeled(t: Triangle) -> Triangle | None:
    """None when the labeling is already positively oriented, else the swap."""
    if t.signed_area() > 0:
        return None
    return Triangle(t.a, t.c, t.b)


def _check_iteration_count(n: int) -> None:
    if n < 0:
        raise ValueError(f"iteration count must be non-negative, got {n}")
    if n > ITERATION_CAP:
        raise IterationCapExceeded(f"iteration count {n} exceeds cap {ITERATION_CAP}")


def iterate_medial(t: Triangle, n: int) -> TriangleChain:
    """Chain of n+1 triangles produced by repeated medial construction."""
    _check_iteration_count(n)
    triangles = [t]
    for _ in range(n):
        triangles.append(medial_triangle(triangles[-1]))
    return TriangleChain(tuple(triangles), MedialStep())


def circumscribe_similar(
    t: Triangle,
    theta: float,
    orient: Orientation = Orientation.CLOCKWISE,
) -> Triangle:
    """Circumscribe a similar triangle at relative rotation theta.

    Through each vertex of t a boundary line is drawn at angle theta to the
    adjacent side (see the module docstring for the exact adjacency and sign
    conventions); consecutive boundary lines intersect in the vertices of the
    result.  Each side of the result passes through one vertex of t, the
    result is similar to t, and vertex m of the result corresponds to vertex
    m of t, so theta = 0 reproduces t itself.

    Raises DegenerateCircumscription when the boundary lines concur or are
    parallel (at the angle where the construction collapses, the three lines
    meet in a single point and no triangle exists).
    """
    if not math.isfinite(theta) or not (-math.pi < theta <= math.pi):
        raise InvalidAngle(f"rotation angle must lie in (-pi, pi], got {theta}")
    if theta == 0.0:
        return t
    swapped = _positively_labeled(t)
    if swapped is not None:
        c = circumscribe_similar(swapped, theta, orient)
        return Triangle(c.a, c.c, c.b)
    lines = _boundary_lines(t, theta, orient)
    if orient is Orientation.CLOCKWISE:
        pairs = [(lines[m], lines[(m + 1) % 3]) for m in range(3)]
    else:
        pairs = [(lines[(m - 1) % 3], lines[m]) for m in range(3)]
    try:
        vertices = [kernel.intersect_lines(l1, l2) for l1, l2 in pairs]
        spread = max(
            vertices[0].distance_to(vertices[1]),
            vertices[1].distance_to(vertices[2]),
            vertices[2].distance_to(vertices[0]),
        )
        # At one angle per turning sense the three lines concur and the
        # output collapses to a point; detect that relative to the input.
        if spread <= kernel.DEGENERACY_EPS * t.longest_side():
            raise DegenerateTriangle("boundary lines concur")
        return Triangle(*vertices)
    except GeometryError as exc:
        raise DegenerateCircumscription(
            f"circumscription degenerates at theta={theta}: {exc}"
        ) from exc


def _boundary_lines(t: Triangle, theta: float, orient: Orientation) -> list[Line]:
    lines = []
    for k in range(3):
        if orient is Orientation.CLOCKWISE:
            tail, head = t.vertex(k - 1), t.vertex(k)
            turn = theta
        else:
            tail, head = t.vertex(k), t.vertex(k + 1)
            turn = -theta
        dx, dy = head.x - tail.x, head.y - tail.y
        cos_t, sin_t = math.cos(turn), math.sin(turn)
        lines.append(
            kernel.line_with_direction(
                t.vertex(k), dx * cos_t - dy * sin_t, dx * sin_t + dy * cos_t
            )
        )
    return lines


def iterate_circumscribe(
    t: Triangle,
    theta: float,
    orient: Orientation = Orientation.CLOCKWISE,
    n: int = 1,
) -> TriangleChain:
    """Chain of n+1 triangles, each circumscribing the previous at angle theta.

    Consecutive chain elements are related by one and the same similarity, so
    corresponding vertices trace logarithmic spirals about its fixed point.
    """
    _check_iteration_count(n)
    triangles = [t]
    for _ in range(n):
        triangles.append(circumscribe_similar(triangles[-1], theta, orient))
    return TriangleChain(tuple(triangles), CircumscribeStep(theta, orient))


def chain_step_similarity(chain: TriangleChain, k: int = 0) -> Similarity:
    """The similarity taking chain element k onto element k+1."""
    if len(chain) < 2:
        raise ValueError("chain has no step to measure")
    t0, t1 = chain[k], chain[k + 1]
    return kernel.similarity_between(Segment(t0.a, t0.b), Segment(t1.a, t1.b))


def vertex_circle(t: Triangle, side_index: int, theta: float) -> Circle:
    """Circle through the endpoints of side side_index and the image, under
    circumscription at angle theta, of the side's first endpoint.

    The circle does not depend on theta: circumscribed images for every
    admissible angle lie on the same circle.  theta = 0 puts the image on the
    side itself and raises CollinearPoints.
    """
    if side_index not in (0, 1, 2):
        raise ValueError(f"side index must be 0, 1, or 2, got {side_index}")
    swapped = _positively_labeled(t)
    if swapped is not None:
        return vertex_circle(swapped, (0, 2, 1)[side_index], theta)
    circ = circumscribe_similar(t, theta, Orientation.CLOCKWISE)
    first = t.vertex(side_index + 1)
    second = t.vertex(side_index + 2)
    image = circ.vertex(side_index + 1)
    return kernel.circle_through(first, second, image)


def _equal_angle_triple(t: Triangle, x: Point) -> tuple[float, float, float]:
    """The three angles that are equal at the Brocard point.

    For a positively oriented labeling (a, b, c) these are the angles at a
    between x and c, at c between x and b, and at b between x and a; a
    negative labeling is normalized first, mirroring the triple consistently
    with the circumscription normalization.
    """
    swapped = _positively_labeled(t)
    if swapped is not None:
        t = swapped
    return (
        kernel.angle_at(t.a, x, t.c),
        kernel.angle_at(t.c, x, t.b),
        kernel.angle_at(t.b, x, t.a),
    )


def _equal_angle_residual(t: Triangle, x: Point) -> float:
    angles = _equal_angle_triple(t, x)
    return max(angles) - min(angles)


def brocard_point(t: Triangle) -> Point:
    """The common point of the three vertex circles.

    Located as the intersection of two vertex circles that is not their
    shared triangle vertex.  The same point is the fixed point of iterated
    circumscription and makes equal angles with all three sides.
    """
    radius = kernel.circumradius(t)
    probe = BROCARD_PROBE_ANGLE
    last_error: GeometryError | None = None
    for _ in range(BROCARD_PROBE_RETRIES + 1):
        try:
            c0 = vertex_circle(t, 0, probe)
            c1 = vertex_circle(t, 1, probe)
        except (DegenerateCircumscription, CollinearPoints) as exc:
            last_error = exc
            probe /= 2.0
            continue
        shared = t.vertex(2)  # circles 0 and 1 both pass through it
        candidates = [
            p
            for p in kernel.intersect_circles(c0, c1)
            if p.distance_to(shared) > 1e-9 * radius
        ]
        if not candidates:
            last_error = DegenerateTriangle(
                "vertex circles meet only at the shared vertex"
            )
            probe /= 2.0
            continue
        if len(candidates) == 1:
            return candidates[0]
        return min(candidates, key=lambda p: _equal_angle_residual(t, p))
    raise DegenerateTriangle(f"could not locate Brocard point: {last_error}")


def brocard_angle(t: Triangle) -> float:
    """The common value of the three equal angles at the Brocard point."""
    angles = _equal_angle_triple(t, brocard_point(t))
    return sum(angles) / 3.0


def equal_angle_triple(t: Triangle, x: Point) -> tuple[float, float, float]:
    """Public access to the equal-angle triple measured at a candidate point."""
    return _equal_angle_triple(t, x)


def euler_data(t: Triangle) -> EulerData:
    """Centroid, circumcenter, orthocenter, and the line through the latter two.

    The centroid lies on the line and divides the circumcenter-orthocenter
    segment so that |centroid->orthocenter| = 2 |centroid->circumcenter|.
    Raises EquilateralDegenerate when circumcenter and orthocenter coincide
    (the exception still carries the three centers).
    """
    g = kernel.centroid(t)
    o = kernel.circumcenter(t)
    h = kernel.orthocenter(t)
    if o.distance_to(h) <= 1e-9 * kernel.circumradius(t):
        raise EquilateralDegenerate(
            "circumcenter and orthocenter coincide; Euler line undefined",
            centroid=g,
            circumcenter=o,
            orthocenter=h,
        )
    return EulerData(g, o, h, kernel.line_through(o, h))


def euler_iteration_chain(t: Triangle, n: int) -> list[EulerData]:
    """Euler data for each element of the medial iteration chain.

    The orthocenter of each medial triangle coincides with the circumcenter
    of its parent, all centers of all chain elements are collinear, and
    corresponding center distances halve at each step.
    """
    chain = iterate_medial(t, n)
    return [euler_data(tri) for tri in chain.triangles]
