"""Drawable scene model shared by the DSL evaluator and the SVG renderer.

A Scene is an ordered tuple of styled primitives.  Order is the order in
which draw statements executed; the renderer additionally sorts by layer
(stable, ascending) so higher layers paint on top.

Primitives store plain floats rather than kernel types so a Scene can be
serialized without touching the geometry modules.  LineMark is an infinite
line; it carries two distinct carrier points and is clipped or extended by
the renderer, while its bounding box is just the carrier points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Union

from .errors import EmptyScene

DEFAULT_COLOR = "black"
DEFAULT_STROKE = 1.0
DEFAULT_LAYER = 0


def _require_finite(**values: float) -> None:
    for key, value in values.items():
        if not math.isfinite(value):
            raise ValueError(f"{key} must be finite, got {value!r}")


@dataclass(frozen=True)
class Style:
    """Stroke color, stroke width (user units), and paint layer."""

    color: str = DEFAULT_COLOR
    stroke: float = DEFAULT_STROKE
    layer: int = DEFAULT_LAYER

    def __post_init__(self) -> None:
        if not self.color:
            raise ValueError("color must be a non-empty string")
        if not (math.isfinite(self.stroke) and self.stroke > 0):
            raise ValueError(f"stroke width must be positive, got {self.stroke!r}")


DEFAULT_STYLE = Style()


@dataclass(frozen=True)
class PointMark:
    x: float
    y: float
    style: Style = DEFAULT_STYLE
    name: str | None = None

    def __post_init__(self) -> None:
        _require_finite(x=self.x, y=self.y)

    def bounds(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.x, self.y)


@dataclass(frozen=True)
class SegmentMark:
    x1: float
    y1: float
    x2: float
    y2: float
    style: Style = DEFAULT_STYLE
    name: str | None = None

    def __post_init__(self) -> None:
        _require_finite(x1=self.x1, y1=self.y1, x2=self.x2, y2=self.y2)

    def bounds(self) -> tuple[float, float, float, float]:
        return (
            min(self.x1, self.x2),
            min(self.y1, self.y2),
            max(self.x1, self.x2),
            max(self.y1, self.y2),
        )


@dataclass(frozen=True)
class LineMark:
    """Infinite line through two distinct carrier points."""

    x1: float
    y1: float
    x2: float
    y2: float
    style: Style = DEFAULT_STYLE
    name: str | None = None

    def __post_init__(self) -> None:
        _require_finite(x1=self.x1, y1=self.y1, x2=self.x2, y2=self.y2)
        if self.x1 == self.x2 and self.y1 == self.y2:
            raise ValueError("line carrier points must be distinct")

    def bounds(self) -> tuple[float, float, float, float]:
        return (
            min(self.x1, self.x2),
            min(self.y1, self.y2),
            max(self.x1, self.x2),
            max(self.y1, self.y2),
        )


@dataclass(frozen=True)
class CircleMark:
    cx: float
    cy: float
    r: float
    style: Style = DEFAULT_STYLE
    name: str | None = None

    def __post_init__(self) -> None:
        _require_finite(cx=self.cx, cy=self.cy, r=self.r)
        if self.r <= 0:
            raise ValueError(f"circle radius must be positive, got {self.r!r}")

    def bounds(self) -> tuple[float, float, float, float]:
        return (self.cx - self.r, self.cy - self.r, self.cx + self.r, self.cy + self.r)


@dataclass(frozen=True)
class PolygonMark:
    points: tuple[tuple[float, float], ...]
    style: Style = DEFAULT_STYLE
    name: str | None = None

    def __post_init__(self) -> None:
        if len(self.points) < 3:
            raise ValueError("polygon needs at least 3 points")
        for x, y in self.points:
            _require_finite(x=x, y=y)

    def bounds(self) -> tuple[float, float, float, float]:
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        return (min(xs), min(ys), max(xs), max(ys))


@dataclass(frozen=True)
class LabelMark:
    x: float
    y: float
    text: str
    style: Style = DEFAULT_STYLE
    name: str | None = None

    def __post_init__(self) -> None:
        _require_finite(x=self.x, y=self.y)
        if not self.text:
            raise ValueError("label text must be non-empty")

    def bounds(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.x, self.y)


Primitive = Union[PointMark, SegmentMark, LineMark, CircleMark, PolygonMark, LabelMark]

_KIND_NAMES = {
    PointMark: "point",
    SegmentMark: "segment",
    LineMark: "line",
    CircleMark: "circle",
    PolygonMark: "polygon",
    LabelMark: "label",
}


def kind_of(primitive: Primitive) -> str:
    return _KIND_NAMES[type(primitive)]


@dataclass(frozen=True)
class Scene:
    """Ordered styled primitives plus an optional spiral focus point.

    spiral_center is set by the evaluator when the program iterates a
    circumscription; zoom-frame rendering uses it as the fixed zoom center.
    """

    primitives: tuple[Primitive, ...] = ()
    spiral_center: tuple[float, float] | None = None

    def __len__(self) -> int:
        return len(self.primitives)

    def __iter__(self) -> Iterator[Primitive]:
        return iter(self.primitives)

    def in_layer_order(self) -> tuple[Primitive, ...]:
        return tuple(sorted(self.primitives, key=lambda p: p.style.layer))

    def bounds(self) -> tuple[float, float, float, float]:
        """Joint bounding box (xmin, ymin, xmax, ymax) of all primitives."""
        if not self.primitives:
            raise EmptyScene("cannot compute bounds of an empty scene")
        boxes = [p.bounds() for p in self.primitives]
        return (
            min(b[0] for b in boxes),
            min(b[1] for b in boxes),
            max(b[2] for b in boxes),
            max(b[3] for b in boxes),
        )


def primitive_to_jsonable(primitive: Primitive) -> dict:
    """Plain-dict form of one primitive, stable under equality of inputs."""
    out: dict = {"kind": kind_of(primitive)}
    if isinstance(primitive, PointMark):
        out.update(x=primitive.x, y=primitive.y)
    elif isinstance(primitive, (SegmentMark, LineMark)):
        out.update(x1=primitive.x1, y1=primitive.y1, x2=primitive.x2, y2=primitive.y2)
    elif isinstance(primitive, CircleMark):
        out.update(cx=primitive.cx, cy=primitive.cy, r=primitive.r)
    elif isinstance(primitive, PolygonMark):
        out["points"] = [[x, y] for x, y in primitive.points]
    elif isinstance(primitive, LabelMark):
        out.update(x=primitive.x, y=primitive.y, text=primitive.text)
    else:  # pragma: no cover - exhaustive above
        raise TypeError(f"not a primitive: {primitive!r}")
    out["style"] = {
        "color": primitive.style.color,
        "stroke": primitive.style.stroke,
        "layer": primitive.style.layer,
    }
    out["name"] = primitive.name
    return out


def scene_to_jsonable(scene: Scene) -> dict:
    """Plain-dict form of a scene, suitable for canonical JSON dumping."""
    return {
        "primitives": [primitive_to_jsonable(p) for p in scene.primitives],
        "spiral_center": list(scene.spiral_center) if scene.spiral_center else None,
    }
