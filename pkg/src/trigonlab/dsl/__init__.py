"""Construction language: tokenize, parse, resolve, evaluate, format.

The pipeline is pure and positional: every stage either returns a value or
raises a SourceError subclass carrying (line, column).  parse_source is the
one-call convenience for tokenize + parse.
"""

from .evaluator import Diagnostic, Evaluation, evaluate, run
from .formatter import format_number, format_program
from .lexer import Token, tokenize
from .nodes import (
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
    StringLit,
    StyleSet,
)
from .parser import parse, parse_source
from .resolver import resolve

__all__ = [
    "Assign",
    "Call",
    "Diagnostic",
    "Draw",
    "Evaluation",
    "FreePoint",
    "Iterate",
    "MacroDef",
    "NameRef",
    "NumberLit",
    "OrientFlag",
    "Program",
    "StringLit",
    "StyleSet",
    "Token",
    "evaluate",
    "format_number",
    "format_program",
    "parse",
    "parse_source",
    "resolve",
    "run",
    "tokenize",
]
