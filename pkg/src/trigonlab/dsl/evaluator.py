"""Program execution: bindings, macro calls, iteration, and scene building.

Two entry points:

- evaluate(program, overrides) -> Scene.  Raises ResolveError, EvalError,
  or UnknownOverride; this is the strict API surface.
- run(program, overrides) -> Evaluation.  Never raises for program-level
  problems; failures become positioned diagnostics alongside the partial
  scene built so far.  This is what the serve endpoint uses.

Runtime scoping matches the resolver: macro frames are roots (bodies see
parameters and locals only); iterate bodies get a fresh frame per pass and
assignments to enclosing names rebind in the owning frame, which is how a
chain like (A, B, C) = midtri(A, B, C) advances.

Style is a sequential pen: a style statement updates the current color,
stroke, and layer for every later draw; per-draw attributes override the
pen for that one draw.  Drawing a medians value colors the three segments
red, green, blue by opposite-vertex index unless the draw itself sets a
color.

If the program circumscribes a triangle inside an iterate block, the scene
records the Brocard point of the first such input triangle as its spiral
center; frame rendering zooms toward it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .. import constructions
from ..constructions import EulerData, MEDIAN_COLORS
from ..errors import EvalError, GeometryError, SourceError, UnknownOverride
from ..kernel import Circle, Line, Point, Segment, Triangle
from ..scene import (
    DEFAULT_COLOR,
    DEFAULT_LAYER,
    DEFAULT_STROKE,
    CircleMark,
    LabelMark,
    LineMark,
    PointMark,
    PolygonMark,
    Primitive,
    Scene,
    SegmentMark,
    Style,
)
from .nodes import (
    Arg,
    Assign,
    Call,
    Draw,
    FreePoint,
    Iterate,
    MacroDef,
    NameRef,
    NumberLit,
    OrientFlag,
    Program,
    Statement,
    StringLit,
    StyleAttrs,
    StyleSet,
)
from .registry import ArgError, BUILTINS, LabelValue, MediansValue
from .resolver import resolve

_MISSING = object()


@dataclass(frozen=True)
class Diagnostic:
    line: int
    column: int
    message: str
    severity: str = "error"


@dataclass(frozen=True)
class Evaluation:
    scene: Scene
    free_points: tuple[tuple[str, float, float], ...]
    diagnostics: tuple[Diagnostic, ...]

    @property
    def ok(self) -> bool:
        return not any(d.severity == "error" for d in self.diagnostics)


def evaluate(program: Program, overrides: dict | None = None) -> Scene:
    """Execute a program and return its scene; raises on any failure."""
    resolve(program)
    cleaned = _validated_overrides(program, overrides)
    ev = _Evaluator(program, cleaned)
    ev.execute()
    return ev.scene()


def run(program: Program, overrides: dict | None = None) -> Evaluation:
    """Execute a program, folding failures into diagnostics."""
    raw = dict(overrides or {})
    free_points = _free_points(program, raw)
    try:
        resolve(program)
        cleaned = _validated_overrides(program, raw)
    except (UnknownOverride, ValueError) as exc:
        return Evaluation(Scene(), free_points, (Diagnostic(0, 0, str(exc)),))
    except SourceError as exc:
        return Evaluation(Scene(), free_points, (Diagnostic(exc.line, exc.column, exc.message),))
    ev = _Evaluator(program, cleaned)
    try:
        ev.execute()
    except EvalError as exc:
        return Evaluation(ev.scene(), free_points, (Diagnostic(exc.line, exc.column, exc.message),))
    return Evaluation(ev.scene(), free_points, ())


def _free_points(program: Program, overrides: dict) -> tuple[tuple[str, float, float], ...]:
    """Effective free-point coordinates, best effort under bad overrides."""
    out: list[tuple[str, float, float]] = []
    for statement in program:
        if not isinstance(statement, FreePoint):
            continue
        x, y = statement.x, statement.y
        value = overrides.get(statement.name)
        if value is not None:
            try:
                ox, oy = float(value[0]), float(value[1])
                x, y = ox, oy
            except (TypeError, ValueError, IndexError):
                pass
        out.append((statement.name, x, y))
    return tuple(out)


def _validated_overrides(program: Program, overrides: dict | None) -> dict[str, tuple[float, float]]:
    raw = dict(overrides or {})
    free_names = set(program.free_point_names())
    cleaned: dict[str, tuple[float, float]] = {}
    for name, value in raw.items():
        if name not in free_names:
            raise UnknownOverride(f"override target {name!r} is not a free point")
        try:
            x, y = float(value[0]), float(value[1])
        except (TypeError, ValueError, IndexError):
            raise ValueError(f"override for {name!r} must be an (x, y) pair") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"override for {name!r} must be finite")
        cleaned[name] = (x, y)
    return cleaned


class _Frame:
    """One binding scope; macro frames have no parent."""

    __slots__ = ("parent", "values")

    def __init__(self, parent: "_Frame | None") -> None:
        self.parent = parent
        self.values: dict[str, object] = {}

    def lookup(self, name: str) -> object:
        frame: _Frame | None = self
        while frame is not None:
            if name in frame.values:
                return frame.values[name]
            frame = frame.parent
        return _MISSING

    def bind(self, name: str, value: object) -> None:
        frame: _Frame | None = self.parent
        while frame is not None:
            if name in frame.values:
                frame.values[name] = value  # iterate rebind of an enclosing name
                return
            frame = frame.parent
        self.values[name] = value


class _Evaluator:
    def __init__(self, program: Program, overrides: dict[str, tuple[float, float]]) -> None:
        self.program = program
        self.overrides = overrides
        self.macros: dict[str, MacroDef] = {
            s.name: s for s in program if isinstance(s, MacroDef)
        }
        self.primitives: list[Primitive] = []
        self.pen: dict[str, object] = {}
        self.spiral_center: tuple[float, float] | None = None
        self.iterate_depth = 0

    def scene(self) -> Scene:
        return Scene(tuple(self.primitives), spiral_center=self.spiral_center)

    def execute(self) -> None:
        top = _Frame(None)
        for statement in self.program:
            self.statement(statement, top)

    # -- statements ------------------------------------------------------

    def statement(self, statement: Statement, frame: _Frame) -> None:
        if isinstance(statement, FreePoint):
            x, y = self.overrides.get(statement.name, (statement.x, statement.y))
            try:
                frame.bind(statement.name, Point(x, y))
            except GeometryError as exc:
                raise self.fail(statement, str(exc), exc)
        elif isinstance(statement, Assign):
            value = self.call(statement.call, frame)
            parts = self.destructure(value, len(statement.targets), statement)
            for target, part in zip(statement.targets, parts):
                frame.bind(target, part)
        elif isinstance(statement, MacroDef):
            pass  # collected up front
        elif isinstance(statement, Iterate):
            self.iterate_depth += 1
            try:
                for _ in range(statement.count):
                    body_frame = _Frame(frame)
                    for inner in statement.body:
                        self.statement(inner, body_frame)
            finally:
                self.iterate_depth -= 1
        elif isinstance(statement, Draw):
            self.draw(statement, frame)
        elif isinstance(statement, StyleSet):
            self.pen.update(dict(statement.attrs))
        else:  # pragma: no cover - parser emits no other kinds
            raise TypeError(f"unknown statement: {statement!r}")

    def fail(self, node, message: str, cause: Exception | None = None) -> EvalError:
        return EvalError(node.line, node.column, message, cause=cause)

    # -- calls -----------------------------------------------------------

    def arg_value(self, arg: Arg, frame: _Frame) -> object:
        if isinstance(arg, NameRef):
            value = frame.lookup(arg.name)
            if value is _MISSING:
                raise self.fail(arg, f"unknown name {arg.name!r}")
            return value
        return arg  # literals keep their nodes so angle flags survive

    def call(self, call: Call, frame: _Frame) -> object:
        values = [self.arg_value(arg, frame) for arg in call.args]
        if call.func in BUILTINS:
            if (
                call.func == "circumscribe"
                and self.iterate_depth > 0
                and self.spiral_center is None
                and values
                and isinstance(values[0], Triangle)
            ):
                self.note_spiral_center(values[0])
            try:
                return BUILTINS[call.func].impl(values)
            except (ArgError, GeometryError) as exc:
                message = str(exc) or type(exc).__name__
                raise self.fail(call, message, exc)
        if call.func in self.macros:
            return self.call_macro(self.macros[call.func], values)
        raise self.fail(call, f"unknown construction {call.func!r}")

    def note_spiral_center(self, base: Triangle) -> None:
        try:
            center = constructions.brocard_point(base)
        except GeometryError:
            return
        self.spiral_center = (center.x, center.y)

    def call_macro(self, macro: MacroDef, values: list) -> object:
        frame = _Frame(None)
        for param, value in zip(macro.params, values):
            frame.values[param] = value
        for statement in macro.body:
            self.statement(statement, frame)
        outputs = []
        for name in macro.outputs:
            value = frame.lookup(name)
            if value is _MISSING:  # pragma: no cover - resolver guarantees bound
                raise self.fail(macro, f"macro {macro.name!r} never bound {name!r}")
            outputs.append(value)
        if len(outputs) == 1:
            return outputs[0]
        return tuple(outputs)

    def destructure(self, value: object, count: int, statement: Assign) -> tuple:
        if count == 1:
            return (value,)
        if isinstance(value, Triangle):
            parts: tuple = (value.a, value.b, value.c)
        elif isinstance(value, EulerData):
            parts = (value.centroid, value.circumcenter, value.orthocenter, value.line)
        elif isinstance(value, MediansValue):
            parts = value.segments
        elif isinstance(value, tuple):
            parts = value
        else:
            raise self.fail(statement, f"cannot unpack {type(value).__name__} into {count} names")
        if len(parts) != count:
            raise self.fail(
                statement, f"cannot unpack {len(parts)} values into {count} names"
            )
        return parts

    # -- drawing ----------------------------------------------------------

    def draw(self, statement: Draw, frame: _Frame) -> None:
        if isinstance(statement.target, NameRef):
            value = self.arg_value(statement.target, frame)
            name: str | None = statement.target.name
        else:
            value = self.call(statement.target, frame)
            name = None
        style = self.effective_style(statement.attrs)
        explicit_color = any(key == "color" for key, _ in statement.attrs)
        marks = self.marks_for(value, style, name, explicit_color, statement)
        self.primitives.extend(marks)

    def effective_style(self, attrs: StyleAttrs) -> Style:
        merged: dict[str, object] = dict(self.pen)
        merged.update(dict(attrs))
        color = str(merged.get("color", DEFAULT_COLOR))
        stroke = float(merged.get("stroke", DEFAULT_STROKE))
        layer = int(merged.get("layer", DEFAULT_LAYER))
        return Style(color=color, stroke=stroke, layer=layer)

    def marks_for(
        self,
        value: object,
        style: Style,
        name: str | None,
        explicit_color: bool,
        statement: Draw,
    ) -> list[Primitive]:
        if isinstance(value, Point):
            return [PointMark(value.x, value.y, style, name)]
        if isinstance(value, Segment):
            return [SegmentMark(value.p.x, value.p.y, value.q.x, value.q.y, style, name)]
        if isinstance(value, Line):
            return [_line_mark(value, style, name)]
        if isinstance(value, Circle):
            return [CircleMark(value.center.x, value.center.y, value.radius, style, name)]
        if isinstance(value, Triangle):
            points = tuple((v.x, v.y) for v in value.vertices)
            return [PolygonMark(points, style, name)]
        if isinstance(value, MediansValue):
            marks: list[Primitive] = []
            for index, segment in enumerate(value.segments):
                color = style.color if explicit_color else MEDIAN_COLORS[index]
                per = Style(color=color, stroke=style.stroke, layer=style.layer)
                marks.append(SegmentMark(segment.p.x, segment.p.y, segment.q.x, segment.q.y, per))
            return marks
        if isinstance(value, EulerData):
            return [
                _line_mark(value.line, style, name),
                PointMark(value.centroid.x, value.centroid.y, style),
                PointMark(value.circumcenter.x, value.circumcenter.y, style),
                PointMark(value.orthocenter.x, value.orthocenter.y, style),
            ]
        if isinstance(value, LabelValue):
            return [LabelMark(value.x, value.y, value.text, style, name)]
        raise self.fail(statement, f"cannot draw a {_value_kind(value)}")


def _line_mark(line: Line, style: Style, name: str | None) -> LineMark:
    return LineMark(
        line.anchor.x,
        line.anchor.y,
        line.anchor.x + line.dx,
        line.anchor.y + line.dy,
        style,
        name,
    )


def _value_kind(value: object) -> str:
    if isinstance(value, NumberLit):
        return "number"
    if isinstance(value, StringLit):
        return "string"
    if isinstance(value, OrientFlag):
        return "orientation flag"
    return type(value).__name__
