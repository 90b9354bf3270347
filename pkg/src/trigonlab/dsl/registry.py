"""Built-in construction table: arities, binding shapes, implementations.

Implementations receive the evaluated argument list: NameRef args arrive as
their bound geometric values, literal args arrive as their AST nodes (so an
angle literal keeps its degree/radian flag).  They raise ArgError for a
misused argument; the evaluator converts that, and any kernel geometry
error, into a positioned EvalError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .. import constructions, kernel
from ..constructions import Orientation
from ..kernel import Circle, Line, Point, Segment, Triangle
from .nodes import NumberLit, OrientFlag, StringLit


class ArgError(Exception):
    """A built-in received an argument of the wrong type or range."""


@dataclass(frozen=True)
class LabelValue:
    x: float
    y: float
    text: str


@dataclass(frozen=True)
class MediansValue:
    """The three medians of a triangle, ordered by opposite-vertex index."""

    segments: tuple[Segment, Segment, Segment]


@dataclass(frozen=True)
class BuiltinSpec:
    arities: frozenset[int]
    target_counts: frozenset[int]  # legal assignment target counts
    impl: Callable


def _expect(value: object, types: tuple[type, ...], func: str, pos: int, want: str) -> object:
    if isinstance(value, (NumberLit, OrientFlag, StringLit)) or not isinstance(value, types):
        got = _describe(value)
        raise ArgError(f"{func}: argument {pos + 1} must be {want}, got {got}")
    return value


def _describe(value: object) -> str:
    if isinstance(value, NumberLit):
        return "a number"
    if isinstance(value, StringLit):
        return "a string"
    if isinstance(value, OrientFlag):
        return "an orientation flag"
    return type(value).__name__


def _point(values: list, func: str, pos: int) -> Point:
    return _expect(values[pos], (Point,), func, pos, "a point")


def _triangle(values: list, func: str, pos: int) -> Triangle:
    return _expect(values[pos], (Triangle,), func, pos, "a triangle")


def _carrier_line(values: list, func: str, pos: int) -> Line:
    value = _expect(values[pos], (Line, Segment), func, pos, "a line or segment")
    if isinstance(value, Segment):
        return kernel.line_through(value.p, value.q)
    return value


def _angle(values: list, func: str, pos: int) -> float:
    value = values[pos]
    if not isinstance(value, NumberLit):
        raise ArgError(f"{func}: argument {pos + 1} must be an angle literal")
    return value.value if value.radians else math.radians(value.value)


def _index(values: list, func: str, pos: int, lo: int, hi: int) -> int:
    value = values[pos]
    if not isinstance(value, NumberLit) or value.radians:
        raise ArgError(f"{func}: argument {pos + 1} must be an integer")
    if value.value != math.floor(value.value):
        raise ArgError(f"{func}: argument {pos + 1} must be an integer")
    index = int(value.value)
    if not lo <= index <= hi:
        raise ArgError(f"{func}: argument {pos + 1} must be between {lo} and {hi}")
    return index


def _string(values: list, func: str, pos: int) -> str:
    value = values[pos]
    if not isinstance(value, StringLit):
        raise ArgError(f"{func}: argument {pos + 1} must be a string")
    return value.value


def _orientation(values: list, func: str, pos: int) -> Orientation:
    value = values[pos]
    if not isinstance(value, OrientFlag):
        raise ArgError(f"{func}: argument {pos + 1} must be cw or ccw")
    return Orientation(value.value)


def _triangle_or_points(values: list, func: str) -> Triangle:
    """Accept either one triangle or three points."""
    if len(values) == 1:
        return _triangle(values, func, 0)
    return Triangle(
        _point(values, func, 0),
        _point(values, func, 1),
        _point(values, func, 2),
    )


def _impl_midpoint(values: list) -> Point:
    return kernel.midpoint(_point(values, "midpoint", 0), _point(values, "midpoint", 1))


def _impl_line(values: list) -> Line:
    return kernel.line_through(_point(values, "line", 0), _point(values, "line", 1))


def _impl_segment(values: list) -> Segment:
    return Segment(_point(values, "segment", 0), _point(values, "segment", 1))


def _impl_triangle(values: list) -> Triangle:
    return Triangle(
        _point(values, "triangle", 0),
        _point(values, "triangle", 1),
        _point(values, "triangle", 2),
    )


def _impl_intersect(values: list) -> Point:
    return kernel.intersect_lines(
        _carrier_line(values, "intersect", 0), _carrier_line(values, "intersect", 1)
    )


def _impl_circle3(values: list) -> Circle:
    return kernel.circle_through(
        _point(values, "circle3", 0),
        _point(values, "circle3", 1),
        _point(values, "circle3", 2),
    )


def _impl_midtri(values: list) -> Triangle:
    return constructions.medial_triangle(_triangle_or_points(values, "midtri"))


def _impl_medians(values: list) -> MediansValue:
    t = _triangle_or_points(values, "medians")
    return MediansValue(constructions.median_segments(t))


def _impl_circumscribe(values: list) -> Triangle:
    t = _triangle(values, "circumscribe", 0)
    theta = _angle(values, "circumscribe", 1)
    orient = Orientation.CLOCKWISE
    if len(values) == 3:
        orient = _orientation(values, "circumscribe", 2)
    return constructions.circumscribe_similar(t, theta, orient)


def _impl_vertexcircle(values: list) -> Circle:
    t = _triangle(values, "vertexcircle", 0)
    side = _index(values, "vertexcircle", 1, 0, 2)
    theta = _angle(values, "vertexcircle", 2)
    return constructions.vertex_circle(t, side, theta)


def _impl_brocard(values: list) -> Point:
    return constructions.brocard_point(_triangle(values, "brocard", 0))


def _impl_centroid(values: list) -> Point:
    return kernel.centroid(_triangle(values, "centroid", 0))


def _impl_circumcenter(values: list) -> Point:
    return kernel.circumcenter(_triangle(values, "circumcenter", 0))


def _impl_orthocenter(values: list) -> Point:
    return kernel.orthocenter(_triangle(values, "orthocenter", 0))


def _impl_eulerline(values: list) -> constructions.EulerData:
    return constructions.euler_data(_triangle(values, "eulerline", 0))


def _impl_label(values: list) -> LabelValue:
    anchor = _point(values, "label", 0)
    return LabelValue(anchor.x, anchor.y, _string(values, "label", 1))


BUILTINS: dict[str, BuiltinSpec] = {
    "midpoint": BuiltinSpec(frozenset({2}), frozenset({1}), _impl_midpoint),
    "line": BuiltinSpec(frozenset({2}), frozenset({1}), _impl_line),
    "segment": BuiltinSpec(frozenset({2}), frozenset({1}), _impl_segment),
    "triangle": BuiltinSpec(frozenset({3}), frozenset({1, 3}), _impl_triangle),
    "intersect": BuiltinSpec(frozenset({2}), frozenset({1}), _impl_intersect),
    "circle3": BuiltinSpec(frozenset({3}), frozenset({1}), _impl_circle3),
    "midtri": BuiltinSpec(frozenset({1, 3}), frozenset({1, 3}), _impl_midtri),
    "medians": BuiltinSpec(frozenset({1, 3}), frozenset({1, 3}), _impl_medians),
    "circumscribe": BuiltinSpec(frozenset({2, 3}), frozenset({1, 3}), _impl_circumscribe),
    "vertexcircle": BuiltinSpec(frozenset({3}), frozenset({1}), _impl_vertexcircle),
    "brocard": BuiltinSpec(frozenset({1}), frozenset({1}), _impl_brocard),
    "centroid": BuiltinSpec(frozenset({1}), frozenset({1}), _impl_centroid),
    "circumcenter": BuiltinSpec(frozenset({1}), frozenset({1}), _impl_circumcenter),
    "orthocenter": BuiltinSpec(frozenset({1}), frozenset({1}), _impl_orthocenter),
    "eulerline": BuiltinSpec(frozenset({1}), frozenset({1, 4}), _impl_eulerline),
    "label": BuiltinSpec(frozenset({2}), frozenset({1}), _impl_label),
}
