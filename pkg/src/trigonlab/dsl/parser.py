"""Recursive-descent parser for .geo token streams.

Grammar (informal):
  program    := statement*
  statement  := freepoint | assign | macrodef | iterate | draw | style
  freepoint  := IDENT "=" "point" "(" NUMBER "," NUMBER ")"
  assign     := target-list "=" call
  target-list:= IDENT | "(" IDENT ("," IDENT)* ")"
  call       := IDENT "(" (arg ("," arg)*)? ")"
  arg        := IDENT | NUMBER | NUMBER "rad" | "cw" | "ccw" | STRING
  macrodef   := "macro" IDENT "(" idents? ")" "->" "(" idents ")" "{" statement* "}"
  iterate    := "iterate" NUMBER "{" statement* "}"
  draw       := "draw" (call | IDENT) style-attrs?
  style      := "style" style-attrs
  style-attrs:= "[" attr ("," attr)* "]"
  attr       := ("color" | "stroke" | "layer") "=" value

Statement separators are newlines (not tokens) or optional `;`.  Macro
definitions are only legal at top level.  Style attribute lists are stored
sorted by key, which makes the canonical formatting a fixed point.
"""

from __future__ import annotations

import math

from ..errors import ParseError
from .lexer import Token, tokenize
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

STYLE_KEYS = ("color", "stroke", "layer")


def parse_source(source: str) -> Program:
    """Tokenize and parse in one step."""
    return parse(tokenize(source))


def parse(tokens: list[Token]) -> Program:
    return _Parser(tokens).program()


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.pos = 0

    # -- token plumbing -------------------------------------------------

    def peek(self) -> Token | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def advance(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of input")
        self.pos += 1
        return tok

    def check(self, kind: str, lexeme: str | None = None) -> bool:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            return False
        return lexeme is None or tok.lexeme == lexeme

    def expect(self, kind: str, lexeme: str | None = None, what: str | None = None) -> Token:
        tok = self.peek()
        wanted = what or (repr(lexeme) if lexeme else kind)
        if tok is None:
            raise self.error(f"expected {wanted}, found end of input")
        if tok.kind != kind or (lexeme is not None and tok.lexeme != lexeme):
            raise self.error(f"expected {wanted}, found {tok.lexeme!r}", tok)
        self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        if tok is None:
            tok = self.peek()
        if tok is not None:
            return ParseError(tok.line, tok.column, message)
        if self.tokens:
            last = self.tokens[-1]
            return ParseError(last.line, last.column + len(last.lexeme), message)
        return ParseError(1, 1, message)

    def skip_separators(self) -> None:
        while self.check("punctuation", ";"):
            self.pos += 1

    # -- grammar --------------------------------------------------------

    def program(self) -> Program:
        statements: list[Statement] = []
        self.skip_separators()
        while self.peek() is not None:
            statements.append(self.statement(top_level=True))
            self.skip_separators()
        return Program(tuple(statements))

    def statement_block(self, context: str) -> tuple[Statement, ...]:
        """Brace-delimited statement list for macro and iterate bodies."""
        self.expect("punctuation", "{")
        body: list[Statement] = []
        self.skip_separators()
        while not self.check("punctuation", "}"):
            if self.peek() is None:
                raise self.error(f"unterminated {context} body: expected '}}'")
            body.append(self.statement(top_level=False))
            self.skip_separators()
        self.expect("punctuation", "}")
        return tuple(body)

    def statement(self, top_level: bool) -> Statement:
        tok = self.peek()
        assert tok is not None
        if tok.kind == "keyword":
            if tok.lexeme == "macro":
                if not top_level:
                    raise self.error("macro definitions must be at top level", tok)
                return self.macrodef()
            if tok.lexeme == "iterate":
                return self.iterate()
            if tok.lexeme == "draw":
                return self.draw()
            if tok.lexeme == "style":
                return self.styleset()
            raise self.error(f"statement may not start with {tok.lexeme!r}", tok)
        if tok.kind == "identifier" or (tok.kind == "punctuation" and tok.lexeme == "("):
            return self.freepoint_or_assign()
        raise self.error(f"expected a statement, found {tok.lexeme!r}", tok)

    def freepoint_or_assign(self) -> Statement:
        first = self.peek()
        assert first is not None
        targets = self.target_list()
        self.expect("punctuation", "=")
        if self.check("keyword", "point"):
            if len(targets) != 1:
                raise self.error("point() binds exactly one name", first)
            return self.freepoint_tail(targets[0], first)
        call = self.call()
        return Assign(targets, call, line=first.line, column=first.column)

    def target_list(self) -> tuple[str, ...]:
        if self.check("punctuation", "("):
            self.advance()
            names = [self.expect("identifier", what="a name").lexeme]
            while self.check("punctuation", ","):
                self.advance()
                names.append(self.expect("identifier", what="a name").lexeme)
            self.expect("punctuation", ")")
            if len(names) < 2:
                raise self.error("tuple target needs at least two names")
            return tuple(names)
        return (self.expect("identifier", what="a name").lexeme,)

    def freepoint_tail(self, name: str, first: Token) -> FreePoint:
        self.expect("keyword", "point")
        self.expect("punctuation", "(")
        x = self.number_value()
        self.expect("punctuation", ",")
        y = self.number_value()
        self.expect("punctuation", ")")
        return FreePoint(name, x, y, line=first.line, column=first.column)

    def number_value(self) -> float:
        tok = self.expect("number", what="a number")
        return float(tok.lexeme)

    def call(self) -> Call:
        func = self.expect("identifier", what="a construction name")
        self.expect("punctuation", "(")
        args: list[Arg] = []
        if not self.check("punctuation", ")"):
            args.append(self.arg())
            while self.check("punctuation", ","):
                self.advance()
                args.append(self.arg())
        self.expect("punctuation", ")")
        return Call(func.lexeme, tuple(args), line=func.line, column=func.column)

    def arg(self) -> Arg:
        tok = self.peek()
        if tok is None:
            raise self.error("expected an argument, found end of input")
        if tok.kind == "identifier":
            self.advance()
            return NameRef(tok.lexeme, line=tok.line, column=tok.column)
        if tok.kind == "number":
            self.advance()
            radians = False
            if self.check("keyword", "rad"):
                self.advance()
                radians = True
            return NumberLit(float(tok.lexeme), radians, line=tok.line, column=tok.column)
        if tok.kind == "keyword" and tok.lexeme in ("cw", "ccw"):
            self.advance()
            return OrientFlag(tok.lexeme, line=tok.line, column=tok.column)
        if tok.kind == "string":
            self.advance()
            return StringLit(tok.lexeme, line=tok.line, column=tok.column)
        raise self.error(f"expected an argument, found {tok.lexeme!r}", tok)

    def macrodef(self) -> MacroDef:
        first = self.expect("keyword", "macro")
        name = self.expect("identifier", what="a macro name").lexeme
        self.expect("punctuation", "(")
        params: list[str] = []
        if not self.check("punctuation", ")"):
            params.append(self.expect("identifier", what="a parameter name").lexeme)
            while self.check("punctuation", ","):
                self.advance()
                params.append(self.expect("identifier", what="a parameter name").lexeme)
        self.expect("punctuation", ")")
        self.expect("punctuation", "->")
        self.expect("punctuation", "(")
        outputs = [self.expect("identifier", what="an output name").lexeme]
        while self.check("punctuation", ","):
            self.advance()
            outputs.append(self.expect("identifier", what="an output name").lexeme)
        self.expect("punctuation", ")")
        body = self.statement_block("macro")
        return MacroDef(
            name, tuple(params), tuple(outputs), body, line=first.line, column=first.column
        )

    def iterate(self) -> Iterate:
        first = self.expect("keyword", "iterate")
        count_tok = self.expect("number", what="an iteration count")
        count = float(count_tok.lexeme)
        if count < 0 or count != math.floor(count):
            raise self.error("iteration count must be a nonnegative integer", count_tok)
        body = self.statement_block("iterate")
        return Iterate(int(count), body, line=first.line, column=first.column)

    def draw(self) -> Draw:
        first = self.expect("keyword", "draw")
        name = self.expect("identifier", what="a name or construction call")
        if self.check("punctuation", "("):
            self.pos -= 1
            target: Call | NameRef = self.call()
        else:
            target = NameRef(name.lexeme, line=name.line, column=name.column)
        attrs: StyleAttrs = ()
        if self.check("punctuation", "["):
            attrs = self.style_attrs()
        return Draw(target, attrs, line=first.line, column=first.column)

    def styleset(self) -> StyleSet:
        first = self.expect("keyword", "style")
        attrs = self.style_attrs()
        return StyleSet(attrs, line=first.line, column=first.column)

    def style_attrs(self) -> StyleAttrs:
        self.expect("punctuation", "[")
        pairs: dict[str, str | float] = {}
        while True:
            key_tok = self.expect("identifier", what="a style key (color, stroke, layer)")
            key = key_tok.lexeme
            if key not in STYLE_KEYS:
                raise self.error(f"unknown style key {key!r}", key_tok)
            if key in pairs:
                raise self.error(f"duplicate style key {key!r}", key_tok)
            self.expect("punctuation", "=")
            pairs[key] = self.style_value(key)
            if self.check("punctuation", ","):
                self.advance()
                continue
            break
        self.expect("punctuation", "]")
        return tuple(sorted(pairs.items()))

    def style_value(self, key: str) -> str | float:
        tok = self.peek()
        if tok is None:
            raise self.error("expected a style value, found end of input")
        if key == "color":
            if tok.kind in ("identifier", "string"):
                self.advance()
                return tok.lexeme
            raise self.error(f"color wants a name or string, found {tok.lexeme!r}", tok)
        if tok.kind != "number":
            raise self.error(f"{key} wants a number, found {tok.lexeme!r}", tok)
        self.advance()
        value = float(tok.lexeme)
        if key == "stroke" and value <= 0:
            raise self.error("stroke width must be positive", tok)
        if key == "layer" and value != math.floor(value):
            raise self.error("layer must be an integer", tok)
        return value
