"""Text notation for cuspidal lines and multisegments.

Grammar::

    session      := linedecl* multisegment+
    linedecl     := "line" NAME "size" INT ["dual" NAME] ";"
    multisegment := "{" [segment ("," segment)*] "}"
    segment      := "[" rational ["," rational] "]" "@" NAME
    rational     := ["-"] INT ["/" INT]

Whitespace-insensitive; exponents are exact fractions (decimals are a
parse error).  ``[a]@name`` abbreviates ``[a,a]@name``.  The character
line ``chr`` (size 1, self-dual) is predeclared.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .core import CHR, CuspidalLine, Multisegment, Segment


class ParseError(ValueError):
    """Malformed text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class SemanticError(ValueError):
    """Well-formed text with inconsistent content."""


@dataclass(frozen=True)
class SessionInput:
    lines: Dict[str, CuspidalLine]
    multisegments: Tuple[Multisegment, ...]


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<number>-?\d+(?:/\d+)?)
  | (?P<punct>[{}\[\],@;])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # name | number | punct | eof
    text: str
    line: int
    col: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        lexeme = m.group(0)
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, lexeme, line, col))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            col = len(lexeme) - lexeme.rfind("\n")
        else:
            col += len(lexeme)
        pos = m.end()
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: List[_Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.pos]

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.cur.line, self.cur.col)

    def advance(self) -> _Token:
        tok = self.cur
        self.pos += 1
        return tok

    def expect(self, kind: str, text: str = None) -> _Token:
        tok = self.cur
        if tok.kind != kind or (text is not None and tok.text != text):
            want = repr(text) if text is not None else kind
            got = repr(tok.text) if tok.text else "end of input"
            raise self.error(f"expected {want}, got {got}")
        return self.advance()

    def at(self, kind: str, text: str = None) -> bool:
        return self.cur.kind == kind and (text is None or self.cur.text == text)

    # ---- grammar productions -------------------------------------------

    def session(self) -> SessionInput:
        lines: Dict[str, CuspidalLine] = {CHR.id: CHR}
        while self.at("name", "line"):
            self.line_decl(lines)
        _check_duals(lines)
        msegs = [self.multisegment(lines)]
        while self.at("punct", "{"):
            msegs.append(self.multisegment(lines))
        self.expect("eof")
        return SessionInput(lines, tuple(msegs))

    def line_decl(self, lines: Dict[str, CuspidalLine]) -> None:
        self.expect("name", "line")
        name = self.expect("name").text
        self.expect("name", "size")
        size_tok = self.expect("number")
        try:
            size = int(size_tok.text)
        except ValueError:
            raise ParseError("line size must be an integer", size_tok.line, size_tok.col)
        dual = None
        if self.at("name", "dual"):
            self.advance()
            dual = self.expect("name").text
        self.expect("punct", ";")
        if size < 1:
            raise SemanticError(f"line {name!r} must have size >= 1, got {size}")
        decl = CuspidalLine(name, size, dual)
        if name in lines and lines[name] != decl:
            raise SemanticError(f"conflicting declarations for line {name!r}")
        lines[name] = decl

    def multisegment(self, lines: Dict[str, CuspidalLine]) -> Multisegment:
        self.expect("punct", "{")
        segs = []
        if not self.at("punct", "}"):
            segs.append(self.segment(lines))
            while self.at("punct", ","):
                self.advance()
                segs.append(self.segment(lines))
        self.expect("punct", "}")
        return Multisegment(tuple(segs))

    def segment(self, lines: Dict[str, CuspidalLine]) -> Segment:
        self.expect("punct", "[")
        a = self.rational()
        b = a
        if self.at("punct", ","):
            self.advance()
            b = self.rational()
        self.expect("punct", "]")
        self.expect("punct", "@")
        name_tok = self.expect("name")
        if name_tok.text not in lines:
            raise SemanticError(f"segment references undeclared line {name_tok.text!r}")
        line = lines[name_tok.text]
        try:
            return Segment(line, a, b)
        except ValueError as exc:
            raise SemanticError(str(exc)) from exc

    def rational(self) -> Fraction:
        tok = self.expect("number")
        f = Fraction(tok.text)
        if f.denominator not in (1, 2):
            raise SemanticError(
                f"exponent {tok.text} has denominator {f.denominator}; only 1 or 2 allowed"
            )
        return f


def _check_duals(lines: Dict[str, CuspidalLine]) -> None:
    for line in lines.values():
        if line.self_dual:
            continue
        if line.dual_id not in lines:
            raise SemanticError(
                f"line {line.id!r} declares undeclared dual {line.dual_id!r}"
            )
        d = lines[line.dual_id]
        if d.size != line.size:
            raise SemanticError(
                f"dual lines {line.id!r} and {d.id!r} have different sizes"
            )
        if d.dual_id != line.id:
            raise SemanticError(
                f"duality between {line.id!r} and {d.id!r} is not an involution"
            )


def parse(text: str) -> SessionInput:
    """Parse a session: optional line declarations, then multisegments."""
    return _Parser(_tokenize(text)).session()


def print_session(session: SessionInput) -> str:
    """Normalized text form; parse(print_session(s)) round-trips."""
    parts = []
    for name in sorted(session.lines):
        line = session.lines[name]
        if line == CHR:
            continue
        decl = f"line {line.id} size {line.size}"
        if not line.self_dual:
            decl += f" dual {line.dual_id}"
        parts.append(decl + ";")
    parts.extend(str(m) for m in session.multisegments)
    return " ".join(parts)
