"""AST for the construction language.

Nodes are frozen dataclasses.  Source positions ride along for diagnostics
but are excluded from equality, so a parsed program compares equal to the
parse of its canonical formatting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union


@dataclass(frozen=True)
class NumberLit:
    value: float
    radians: bool = False  # True when the literal carried a `rad` suffix
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class NameRef:
    name: str
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class StringLit:
    value: str
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class OrientFlag:
    value: str  # "cw" | "ccw"
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if self.value not in ("cw", "ccw"):
            raise ValueError(f"orientation flag must be cw or ccw, got {self.value!r}")


Arg = Union[NumberLit, NameRef, StringLit, OrientFlag]


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple[Arg, ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


# style attributes are (key, value) pairs sorted by key; values are str
# (color names / hex) or float (stroke width, layer index)
StyleAttrs = tuple[tuple[str, Union[str, float]], ...]


@dataclass(frozen=True)
class FreePoint:
    name: str
    x: float
    y: float
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Assign:
    targets: tuple[str, ...]
    call: Call
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class MacroDef:
    name: str
    params: tuple[str, ...]
    outputs: tuple[str, ...]
    body: tuple["Statement", ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Iterate:
    count: int
    body: tuple["Statement", ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Draw:
    target: Union[Call, NameRef]
    attrs: StyleAttrs = ()
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class StyleSet:
    attrs: StyleAttrs
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


Statement = Union[FreePoint, Assign, MacroDef, Iterate, Draw, StyleSet]


@dataclass(frozen=True)
class Program:
    statements: tuple[Statement, ...]

    def __iter__(self):
        return iter(self.statements)

    def __len__(self) -> int:
        return len(self.statements)

    def free_point_names(self) -> tuple[str, ...]:
        """Names of top-level free points, in source order."""
        return tuple(s.name for s in self.statements if isinstance(s, FreePoint))
