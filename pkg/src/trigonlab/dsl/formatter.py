"""Canonical program formatting.

One statement per line, two-space indent inside macro and iterate bodies,
single spaces after commas and around `=` in statements (none inside style
attributes), style attributes sorted by key.  Formatting is a fixed point:
format(parse(format(parse(s)))) == format(parse(s)), and a parse of the
output equals the input program.
"""

from __future__ import annotations

import math

from .lexer import KEYWORDS
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

_INDENT = "  "


def format_number(value: float) -> str:
    """Shortest text that parses back to the same float; integers stay bare."""
    if math.isfinite(value) and value == math.floor(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def format_program(program: Program) -> str:
    lines: list[str] = []
    for statement in program:
        lines.extend(_statement_lines(statement, 0))
    if not lines:
        return ""
    return "\n".join(lines) + "\n"


def _statement_lines(statement: Statement, depth: int) -> list[str]:
    pad = _INDENT * depth
    if isinstance(statement, FreePoint):
        x, y = format_number(statement.x), format_number(statement.y)
        return [f"{pad}{statement.name} = point({x}, {y})"]
    if isinstance(statement, Assign):
        return [f"{pad}{_targets(statement.targets)} = {_call(statement.call)}"]
    if isinstance(statement, MacroDef):
        params = ", ".join(statement.params)
        outs = ", ".join(statement.outputs)
        lines = [f"{pad}macro {statement.name}({params}) -> ({outs}) {{"]
        for inner in statement.body:
            lines.extend(_statement_lines(inner, depth + 1))
        lines.append(f"{pad}}}")
        return lines
    if isinstance(statement, Iterate):
        lines = [f"{pad}iterate {statement.count} {{"]
        for inner in statement.body:
            lines.extend(_statement_lines(inner, depth + 1))
        lines.append(f"{pad}}}")
        return lines
    if isinstance(statement, Draw):
        if isinstance(statement.target, NameRef):
            target = statement.target.name
        else:
            target = _call(statement.target)
        suffix = f" {_attrs(statement.attrs)}" if statement.attrs else ""
        return [f"{pad}draw {target}{suffix}"]
    if isinstance(statement, StyleSet):
        return [f"{pad}style {_attrs(statement.attrs)}"]
    raise TypeError(f"unknown statement: {statement!r}")  # pragma: no cover


def _targets(targets: tuple[str, ...]) -> str:
    if len(targets) == 1:
        return targets[0]
    return "(" + ", ".join(targets) + ")"


def _call(call: Call) -> str:
    return f"{call.func}(" + ", ".join(_arg(a) for a in call.args) + ")"


def _arg(arg: Arg) -> str:
    if isinstance(arg, NameRef):
        return arg.name
    if isinstance(arg, NumberLit):
        text = format_number(arg.value)
        return f"{text} rad" if arg.radians else text
    if isinstance(arg, OrientFlag):
        return arg.value
    if isinstance(arg, StringLit):
        return _quote(arg.value)
    raise TypeError(f"unknown argument: {arg!r}")  # pragma: no cover


def _attrs(attrs: StyleAttrs) -> str:
    parts = []
    for key, value in attrs:
        if isinstance(value, str):
            text = value if _identifier_like(value) else _quote(value)
        else:
            text = format_number(value)
        parts.append(f"{key}={text}")
    return "[" + ", ".join(parts) + "]"


def _identifier_like(text: str) -> bool:
    return text.isidentifier() and text not in KEYWORDS


def _quote(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'
