"""Text format for presentations.

Example::

    field Q
    quiver {
      vertex v;
      arrow a : v -> v;
    }
    relations {
      sq: a a;
    }

A relation is a signed sum of terms ``[scalar] arrow arrow ...``; the arrow
names of a term are composed left to right.  The optional ``name:`` label is
an extension used to keep relation names stable through a round trip.
``#`` starts a comment.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from .errors import DSLSyntaxError, ValidationError
from .field import FieldSpec
from .quiver import Element, Path, Presentation, Quiver

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<arrow>->)|(?P<int>\d+)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<punct>[{};,:/+\-])"
)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> List[Token]:
    out = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DSLSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tk = "punct" if kind == "arrow" else kind
            out.append(Token(tk, m.group(), line, pos - line_start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - line_start + 1))
    return out


class _Parser:
    def __init__(self, text: str, field: Optional[FieldSpec] = None):
        self.toks = tokenize(text)
        self.i = 0
        self.override = field

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg: str, tok: Optional[Token] = None):
        tok = tok or self.cur
        return DSLSyntaxError(msg, tok.line, tok.col)

    def next(self) -> Token:
        tok = self.cur
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        if self.cur.text != text:
            got = self.cur.text or "end of input"
            raise self.error(f"expected {text!r}, got {got!r}")
        return self.next()

    def ident(self) -> Token:
        if self.cur.kind != "id":
            raise self.error(f"expected identifier, got {self.cur.text or 'end of input'!r}")
        return self.next()

    def parse(self) -> Presentation:
        self.expect("field")
        field = self.parse_field()
        if self.override is not None:
            field = self.override
        vertices, arrows = self.parse_quiver()
        quiver = Quiver(vertices, [(a, s, t) for a, s, t, _ in arrows])
        rels = self.parse_relations(quiver, field)
        if self.cur.kind != "eof":
            raise self.error(f"unexpected {self.cur.text!r} after relations block")
        names = [n for n, _, _ in rels]
        auto = iter(range(1, len(rels) + 1))
        names = [n if n is not None else f"r{next(auto)}" for n in names]
        for name, elem, tok in rels:
            if not elem:
                raise ValidationError(f"relation at line {tok.line} is zero")
        return Presentation(field, quiver, [e for _, e, _ in rels], names)

    def parse_field(self) -> FieldSpec:
        tok = self.ident()
        if tok.text == "Q":
            return FieldSpec(0)
        if tok.text == "F" and self.cur.kind == "int":
            p = int(self.next().text)
        elif re.fullmatch(r"F\d+", tok.text):
            p = int(tok.text[1:])
        else:
            raise self.error("expected Q or F<prime>", tok)
        try:
            return FieldSpec(p)
        except ValidationError as exc:
            raise DSLSyntaxError(str(exc), tok.line, tok.col) from None

    def parse_quiver(self):
        self.expect("quiver")
        self.expect("{")
        vertices: List[str] = []
        arrows = []
        while self.cur.text == "vertex":
            self.next()
            vertices.append(self.ident().text)
            while self.cur.text == ",":
                self.next()
                vertices.append(self.ident().text)
            self.expect(";")
        seen = set(vertices)
        while self.cur.text == "arrow":
            self.next()
            name = self.ident()
            self.expect(":")
            src = self.ident()
            self.expect("->")
            tgt = self.ident()
            self.expect(";")
            for end in (src, tgt):
                if end.text not in seen:
                    raise ValidationError(
                        f"line {end.line}, column {end.col}: unknown vertex {end.text!r}")
            arrows.append((name.text, src.text, tgt.text, name))
        self.expect("}")
        return vertices, arrows

    def parse_relations(self, quiver: Quiver, field: FieldSpec):
        self.expect("relations")
        self.expect("{")
        rels = []
        while self.cur.text != "}":
            start = self.cur
            name = None
            if self.cur.kind == "id" and self.peek().text == ":":
                name = self.next().text
                self.next()
            elem = self.parse_rel(quiver, field)
            self.expect(";")
            rels.append((name, elem, start))
        self.expect("}")
        return rels

    def parse_rel(self, quiver: Quiver, field: FieldSpec) -> Element:
        sign = 1
        if self.cur.text in "+-" and self.cur.kind == "punct":
            sign = -1 if self.next().text == "-" else 1
        terms = {}
        while True:
            c, path = self.parse_term(quiver, field)
            c = c * sign
            terms[path] = terms[path] + c if path in terms else c
            if self.cur.text in ("+", "-"):
                sign = -1 if self.next().text == "-" else 1
                continue
            break
        return Element(terms)

    def parse_term(self, quiver: Quiver, field: FieldSpec) -> Tuple[object, Path]:
        c = field(1)
        if self.cur.kind == "int":
            num_tok = self.next()
            num, den = int(num_tok.text), 1
            if self.cur.text == "/":
                self.next()
                if self.cur.kind != "int":
                    raise self.error("expected denominator")
                den = int(self.next().text)
                if den == 0:
                    raise self.error("zero denominator", num_tok)
            try:
                c = field(Fraction(num, den))
            except ZeroDivisionError:
                raise self.error(f"denominator not invertible in {field.name}", num_tok) from None
        if self.cur.kind != "id":
            raise self.error("expected arrow name")
        first = self.cur
        names = []
        while self.cur.kind == "id" and self.peek().text != ":":
            tok = self.next()
            if tok.text not in quiver.arrow_index:
                raise ValidationError(
                    f"line {tok.line}, column {tok.col}: unknown arrow {tok.text!r}")
            names.append(tok.text)
        try:
            path = quiver.path(names)
        except ValidationError as exc:
            raise ValidationError(f"line {first.line}, column {first.col}: {exc}") from None
        return c, path


def parse_presentation(text: str, field: Optional[FieldSpec] = None) -> Presentation:
    """Parse DSL source into a validated :class:`Presentation`.

    ``field`` overrides the declared field; scalars are then read in it.
    """
    return _Parser(text, field).parse()


def format_presentation(pres: Presentation) -> str:
    """Canonical DSL text; ``parse_presentation`` inverts it."""
    q = pres.quiver
    lines = [f"field {pres.field.name}", "quiver {"]
    if q.vertices:
        lines.append("  vertex " + ", ".join(q.vertices) + ";")
    for a, s, t in q.arrows:
        lines.append(f"  arrow {a} : {s} -> {t};")
    lines.append("}")
    lines.append("relations {")
    for name, rel in zip(pres.names, pres.relations):
        lines.append(f"  {name}: {format_relation(rel, pres)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_relation(rel: Element, pres: Presentation) -> str:
    parts = []
    for i, (p, c) in enumerate(rel.sorted_terms()):
        neg = pres.field.p == 0 and c < 0
        mag = -c if neg else c
        coef = "" if mag == 1 else f"{mag} "
        if i == 0:
            sign = "-" if neg else ""
        else:
            sign = " - " if neg else " + "
        parts.append(f"{sign}{coef}{pres.quiver.format_path(p)}")
    return "".join(parts)
