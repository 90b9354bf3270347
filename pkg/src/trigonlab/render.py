"""Viewport fitting and SVG emission.

Coordinate convention: scene geometry is y-up; the emitted document wraps
all primitives in a scale(1 -1) group and sets the viewBox to the flipped
viewport box, so output displays with conventional orientation while every
emitted coordinate stays an exact geometry coordinate.  Labels carry a
counter-flip transform so text renders upright.

Units: the viewBox is in geometry units, so stroke widths are geometry
units too; a primitive's stroke value is a multiplier on
RenderStyle.stroke_width.  Point radius and label font size are fractions
of the viewport height, which keeps their apparent size constant across
zoom frames.

Output is deterministic: fixed element order (background first, then
primitives in ascending layer, stable within a layer), fixed attribute
order, and shortest-repr number formatting, so golden files are byte-exact.
"""

from __future__ import annotations

import colorsys
import math
from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from .dsl.formatter import format_number
from .kernel import Point
from .scene import (
    CircleMark,
    LabelMark,
    LineMark,
    PointMark,
    PolygonMark,
    Primitive,
    Scene,
    SegmentMark,
)

DEFAULT_WIDTH = 800.0
MIN_HALF_EXTENT = 1.0  # half-extent for a degenerate (single-point) bounding box

# colors every palette must name
_REQUIRED_COLORS = ("black", "blue", "green", "red")


@dataclass(frozen=True)
class Viewport:
    """Visible region: center, half of the height, and width/height ratio."""

    center: Point
    half_extent: float
    aspect: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.half_extent) and self.half_extent > 0):
            raise ValueError(f"half-extent must be positive, got {self.half_extent!r}")
        if not (math.isfinite(self.aspect) and self.aspect > 0):
            raise ValueError(f"aspect must be positive, got {self.aspect!r}")

    @property
    def half_width(self) -> float:
        return self.half_extent * self.aspect

    def x_min(self) -> float:
        return self.center.x - self.half_width

    def y_min(self) -> float:
        return self.center.y - self.half_extent

    def width(self) -> float:
        return 2.0 * self.half_width

    def height(self) -> float:
        return 2.0 * self.half_extent


@dataclass(frozen=True)
class RenderStyle:
    """Stroke, color, and sizing defaults for SVG emission.

    stroke_width: geometry-unit width drawn for a primitive of stroke 1.
    palette: name -> hex pairs; must cover red, green, blue, black.
    background: fill behind the scene, or None for no background rect.
    point_radius, label_font_size: fractions of the viewport height.
    hue_step: degrees of hue rotation applied cumulatively to successive
    primitives sharing a color name, for spiral art; 0 disables it.
    """

    stroke_width: float = 0.02
    palette: tuple[tuple[str, str], ...] = (
        ("black", "#1a1a1a"),
        ("blue", "#1f77b4"),
        ("green", "#2ca02c"),
        ("red", "#d62728"),
    )
    background: str | None = "white"
    point_radius: float = 0.008
    label_font_size: float = 0.03
    hue_step: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.stroke_width) and self.stroke_width > 0):
            raise ValueError("stroke_width must be positive")
        if not (math.isfinite(self.point_radius) and self.point_radius > 0):
            raise ValueError("point_radius must be positive")
        if not (math.isfinite(self.label_font_size) and self.label_font_size > 0):
            raise ValueError("label_font_size must be positive")
        if not math.isfinite(self.hue_step):
            raise ValueError("hue_step must be finite")
        names = {name for name, _ in self.palette}
        missing = [name for name in _REQUIRED_COLORS if name not in names]
        if missing:
            raise ValueError(f"palette must name {', '.join(_REQUIRED_COLORS)}")

    def color_of(self, name: str) -> str:
        for key, value in self.palette:
            if key == name:
                return value
        return name  # pass through hex values and other SVG color names


DEFAULT_RENDER_STYLE = RenderStyle()


def fit_viewport(scene: Scene, aspect: float = 1.0, padding: float = 0.05) -> Viewport:
    """Smallest viewport of the given aspect containing every primitive.

    The bounding box is expanded by the padding fraction on each side; a
    degenerate (single-point) box falls back to MIN_HALF_EXTENT.
    """
    if not (math.isfinite(aspect) and aspect > 0):
        raise ValueError(f"aspect must be positive, got {aspect!r}")
    if not (math.isfinite(padding) and padding >= 0):
        raise ValueError(f"padding must be nonnegative, got {padding!r}")
    x_min, y_min, x_max, y_max = scene.bounds()
    center = Point((x_min + x_max) / 2.0, (y_min + y_max) / 2.0)
    if x_min == x_max and y_min == y_max:
        return Viewport(center, MIN_HALF_EXTENT, aspect)
    half_w = (x_max - x_min) / 2.0 * (1.0 + padding)
    half_h = (y_max - y_min) / 2.0 * (1.0 + padding)
    return Viewport(center, max(half_h, half_w / aspect), aspect)


def document_size(viewport: Viewport, width: float = DEFAULT_WIDTH) -> tuple[float, float]:
    return (width, width / viewport.aspect)


def to_document(viewport: Viewport, x: float, y: float, width: float = DEFAULT_WIDTH) -> tuple[float, float]:
    """Map a geometry point to document pixels (the SVG engine's affine)."""
    doc_w, doc_h = document_size(viewport, width)
    px = (x - viewport.x_min()) / viewport.width() * doc_w
    py = (viewport.center.y + viewport.half_extent - y) / viewport.height() * doc_h
    return (px, py)


def render_svg(
    scene: Scene,
    viewport: Viewport,
    style: RenderStyle = DEFAULT_RENDER_STYLE,
    width: float = DEFAULT_WIDTH,
) -> str:
    """Emit the scene as a standalone SVG 1.1 document."""
    doc_w, doc_h = document_size(viewport, width)
    box_x = viewport.x_min()
    box_y = -(viewport.center.y + viewport.half_extent)  # y-flip
    box_w = viewport.width()
    box_h = viewport.height()
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{format_number(doc_w)}" height="{format_number(doc_h)}" '
        f'viewBox="{format_number(box_x)} {format_number(box_y)} '
        f'{format_number(box_w)} {format_number(box_h)}">'
    ]
    lines.append('<g transform="scale(1 -1)">')
    if style.background is not None:
        lines.append(
            f'<rect x="{format_number(box_x)}" y="{format_number(viewport.y_min())}" '
            f'width="{format_number(box_w)}" height="{format_number(box_h)}" '
            f'fill={quoteattr(style.color_of(style.background))} stroke="none"/>'
        )
    colors = _ColorState(style)
    for primitive in scene.in_layer_order():
        lines.append(_emit(primitive, viewport, style, colors))
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_frames(
    scene: Scene,
    viewport: Viewport,
    zoom_factor: float,
    frames: int,
    style: RenderStyle = DEFAULT_RENDER_STYLE,
    width: float = DEFAULT_WIDTH,
) -> list[str]:
    """Render a zoom sequence: frame k has half-extent x zoom_factor**k.

    The zoom is centered on the scene's spiral center when set (the Brocard
    point of an iterated circumscription base), else the viewport center,
    so the sequence reads as travel into or out of the spiral tunnel.
    """
    if not (math.isfinite(zoom_factor) and zoom_factor > 0 and zoom_factor != 1.0):
        raise ValueError(f"zoom factor must be positive and not 1, got {zoom_factor!r}")
    if frames < 1:
        raise ValueError(f"frame count must be at least 1, got {frames!r}")
    if scene.spiral_center is not None:
        fixed_x, fixed_y = scene.spiral_center
    else:
        fixed_x, fixed_y = viewport.center.x, viewport.center.y
    out = []
    for k in range(frames):
        if k == 0:
            frame_viewport = viewport
        else:
            factor = zoom_factor**k
            center = Point(
                fixed_x + (viewport.center.x - fixed_x) * factor,
                fixed_y + (viewport.center.y - fixed_y) * factor,
            )
            frame_viewport = Viewport(center, viewport.half_extent * factor, viewport.aspect)
        out.append(render_svg(scene, frame_viewport, style, width))
    return out


def parse_render_style(text: str) -> RenderStyle:
    """Parse the key-value style file format.

    Lines are `key = value`; a line whose first nonblank character is `#`
    is a comment (inline comments are not supported because hex color
    values contain `#`).  Keys: stroke_width, point_radius,
    label_font_size, hue_step, background (a color or `none`), and
    palette.<name> entries that add or replace palette colors.
    """
    values: dict[str, object] = {}
    palette = dict(DEFAULT_RENDER_STYLE.palette)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"style line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not value:
            raise ValueError(f"style line {lineno}: empty value for {key!r}")
        if key in ("stroke_width", "point_radius", "label_font_size", "hue_step"):
            try:
                values[key] = float(value)
            except ValueError:
                raise ValueError(f"style line {lineno}: {key} wants a number") from None
        elif key == "background":
            values[key] = None if value.lower() == "none" else value
        elif key.startswith("palette."):
            name = key[len("palette.") :]
            if not name:
                raise ValueError(f"style line {lineno}: palette entry needs a name")
            palette[name] = value
        else:
            raise ValueError(f"style line {lineno}: unknown key {key!r}")
    values["palette"] = tuple(sorted(palette.items()))
    return RenderStyle(**values)


# -- element emission ------------------------------------------------------


class _ColorState:
    """Resolves primitive colors, applying the optional hue rotation.

    With hue_step nonzero, the k-th primitive using a given color name gets
    that color rotated by k * hue_step degrees, so an iterated construction
    cycles through hues while distinct base colors stay distinguishable.
    """

    def __init__(self, style: RenderStyle):
        self.style = style
        self.seen: dict[str, int] = {}

    def quoted(self, name: str) -> str:
        resolved = self.style.color_of(name)
        if self.style.hue_step != 0.0:
            ordinal = self.seen.get(name, 0)
            self.seen[name] = ordinal + 1
            rotated = _rotate_hue(resolved, self.style.hue_step * ordinal)
            if rotated is not None:
                resolved = rotated
        return quoteattr(resolved)


def _rotate_hue(color: str, degrees: float) -> str | None:
    """Hue-rotate a #rrggbb color; None when the color is not parseable hex."""
    if not (color.startswith("#") and len(color) == 7):
        return None
    try:
        r, g, b = (int(color[i : i + 2], 16) / 255.0 for i in (1, 3, 5))
    except ValueError:
        return None
    h, l, s = colorsys.rgb_to_hls(r, g, b)
    r, g, b = colorsys.hls_to_rgb((h + degrees / 360.0) % 1.0, l, s)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def _emit(primitive: Primitive, viewport: Viewport, style: RenderStyle, colors: _ColorState) -> str:
    if isinstance(primitive, PointMark):
        return _emit_point(primitive, viewport, style, colors)
    if isinstance(primitive, SegmentMark):
        return _emit_segment(
            primitive.x1, primitive.y1, primitive.x2, primitive.y2, primitive, style, colors
        )
    if isinstance(primitive, LineMark):
        x1, y1, x2, y2 = _line_span(primitive, viewport)
        return _emit_segment(x1, y1, x2, y2, primitive, style, colors)
    if isinstance(primitive, CircleMark):
        return (
            f'<circle cx="{format_number(primitive.cx)}" cy="{format_number(primitive.cy)}" '
            f'r="{format_number(primitive.r)}" fill="none" '
            f"stroke={colors.quoted(primitive.style.color)} "
            f'stroke-width="{_stroke_width(primitive, style)}"/>'
        )
    if isinstance(primitive, PolygonMark):
        points = " ".join(
            f"{format_number(x)},{format_number(y)}" for x, y in primitive.points
        )
        return (
            f'<polygon points="{points}" fill="none" '
            f"stroke={colors.quoted(primitive.style.color)} "
            f'stroke-width="{_stroke_width(primitive, style)}"/>'
        )
    if isinstance(primitive, LabelMark):
        return _emit_label(primitive, viewport, style, colors)
    raise TypeError(f"not a primitive: {primitive!r}")  # pragma: no cover


def _stroke_width(primitive: Primitive, style: RenderStyle) -> str:
    return format_number(primitive.style.stroke * style.stroke_width)


def _emit_point(mark: PointMark, viewport: Viewport, style: RenderStyle, colors: _ColorState) -> str:
    radius = style.point_radius * viewport.height()
    return (
        f'<circle cx="{format_number(mark.x)}" cy="{format_number(mark.y)}" '
        f'r="{format_number(radius)}" fill={colors.quoted(mark.style.color)} stroke="none"/>'
    )


def _emit_segment(
    x1: float,
    y1: float,
    x2: float,
    y2: float,
    primitive: Primitive,
    style: RenderStyle,
    colors: _ColorState,
) -> str:
    return (
        f'<line x1="{format_number(x1)}" y1="{format_number(y1)}" '
        f'x2="{format_number(x2)}" y2="{format_number(y2)}" '
        f"stroke={colors.quoted(primitive.style.color)} "
        f'stroke-width="{_stroke_width(primitive, style)}"/>'
    )


def _line_span(mark: LineMark, viewport: Viewport) -> tuple[float, float, float, float]:
    """A finite span of an infinite line, long enough to cross the viewport.

    Centered on the projection of the viewport center onto the line and
    extended by three viewport diagonals each way, so the visible portion
    is always covered and the output stays deterministic.
    """
    dx = mark.x2 - mark.x1
    dy = mark.y2 - mark.y1
    length = math.hypot(dx, dy)
    ux, uy = dx / length, dy / length
    t_center = (viewport.center.x - mark.x1) * ux + (viewport.center.y - mark.y1) * uy
    reach = 3.0 * math.hypot(viewport.width(), viewport.height())
    return (
        mark.x1 + (t_center - reach) * ux,
        mark.y1 + (t_center - reach) * uy,
        mark.x1 + (t_center + reach) * ux,
        mark.y1 + (t_center + reach) * uy,
    )


def _emit_label(mark: LabelMark, viewport: Viewport, style: RenderStyle, colors: _ColorState) -> str:
    font = style.label_font_size * viewport.height()
    offset = style.point_radius * viewport.height() * 1.5
    return (
        f'<text transform="translate({format_number(mark.x)} {format_number(mark.y)}) '
        f'scale(1 -1)" x="{format_number(offset)}" y="{format_number(-offset)}" '
        f'font-family="sans-serif" font-size="{format_number(font)}" '
        f"fill={colors.quoted(mark.style.color)}>{escape(mark.text)}</text>"
    )
