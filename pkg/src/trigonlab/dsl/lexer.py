"""Tokenizer for .geo construction sources.

Tokens carry 1-based (line, column) positions.  Whitespace and `#` comments
are discarded.  `-` is only legal as the start of `->` or of a negative
number literal; the language has no arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import LexError

KEYWORDS = frozenset({"point", "macro", "iterate", "draw", "style", "cw", "ccw", "rad"})

# multi-char punctuation first so '->' wins over '-'
_PUNCT_TWO = ("->",)
_PUNCT_ONE = "(),={}[];"

_IDENT_START = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT_CONT = _IDENT_START | frozenset("0123456789")
_DIGITS = frozenset("0123456789")


@dataclass(frozen=True)
class Token:
    kind: str  # identifier | number | keyword | punctuation | string
    lexeme: str
    line: int
    column: int


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    line = 1
    col = 1
    n = len(source)

    def error(message: str) -> LexError:
        return LexError(line, col, message)

    while i < n:
        ch = source[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        if ch in _IDENT_START:
            start = i
            while i < n and source[i] in _IDENT_CONT:
                i += 1
            lexeme = source[start:i]
            kind = "keyword" if lexeme in KEYWORDS else "identifier"
            tokens.append(Token(kind, lexeme, line, col))
            col += i - start
            continue
        if ch in _DIGITS or ch == "." and i + 1 < n and source[i + 1] in _DIGITS:
            lexeme, width = _scan_number(source, i, line, col)
            tokens.append(Token("number", lexeme, line, col))
            i += width
            col += width
            continue
        if ch == "-":
            nxt = source[i + 1] if i + 1 < n else ""
            if nxt == ">":
                tokens.append(Token("punctuation", "->", line, col))
                i += 2
                col += 2
                continue
            if nxt in _DIGITS or nxt == ".":
                lexeme, width = _scan_number(source, i, line, col)
                tokens.append(Token("number", lexeme, line, col))
                i += width
                col += width
                continue
            raise error("stray '-': expected '->' or a number")
        if ch in _PUNCT_ONE:
            tokens.append(Token("punctuation", ch, line, col))
            i += 1
            col += 1
            continue
        if ch == '"':
            lexeme, width, newlines, endcol = _scan_string(source, i, line, col)
            tokens.append(Token("string", lexeme, line, col))
            i += width
            line += newlines
            col = endcol
            continue
        raise error(f"illegal character {ch!r}")
    return tokens


def _scan_number(source: str, i: int, line: int, col: int) -> tuple[str, int]:
    """Scan a number literal starting at i; returns (lexeme, width)."""
    start = i
    n = len(source)
    if source[i] == "-":
        i += 1
    digits_before = 0
    while i < n and source[i] in _DIGITS:
        i += 1
        digits_before += 1
    digits_after = 0
    if i < n and source[i] == ".":
        i += 1
        while i < n and source[i] in _DIGITS:
            i += 1
            digits_after += 1
    if digits_before == 0 and digits_after == 0:
        raise LexError(line, col, "malformed number: no digits")
    if i < n and source[i] in "eE":
        j = i + 1
        if j < n and source[j] in "+-":
            j += 1
        exp_digits = 0
        while j < n and source[j] in _DIGITS:
            j += 1
            exp_digits += 1
        if exp_digits == 0:
            raise LexError(line, col, "malformed number: empty exponent")
        i = j
    # a number may not run straight into a name: 12abc is one error, not two tokens
    if i < n and source[i] in _IDENT_START:
        raise LexError(line, col, "malformed number: trailing letters")
    return source[start:i], i - start


def _scan_string(source: str, i: int, line: int, col: int) -> tuple[str, int, int, int]:
    """Scan a double-quoted string; returns (value, width, newlines, end column)."""
    start = i
    i += 1
    out: list[str] = []
    n = len(source)
    cur_col = col + 1
    newlines = 0
    while i < n:
        ch = source[i]
        if ch == '"':
            return "".join(out), i + 1 - start, newlines, cur_col + 1
        if ch == "\n":
            raise LexError(line, col, "unterminated string literal")
        if ch == "\\":
            if i + 1 >= n:
                break
            esc = source[i + 1]
            if esc == '"':
                out.append('"')
            elif esc == "\\":
                out.append("\\")
            else:
                raise LexError(line, col, f"unsupported escape \\{esc}")
            i += 2
            cur_col += 2
            continue
        out.append(ch)
        i += 1
        cur_col += 1
    raise LexError(line, col, "unterminated string literal")
