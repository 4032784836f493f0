"""Text syntax for bundle expressions.

::

    expr := term { "(+)" term }
    term := atom [ "^" int ]
    atom := line | "omega(" int ")" | "twist(" expr "," divisor ")"
          | "ext(" expr "," expr ")" | "ker(" expr "->" expr ")"
    line := "O(" ints ")"

Whitespace between tokens is ignored.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from ..geometry import format_divisor, get_surface, parse_divisor
from .expr import Ext, Ker, Line, OmegaP2, Sum, Twist, direct_sum

_INT_RE = re.compile(r"[+-]?\s*\d+")


class _Parser:
    def __init__(self, text, surface):
        self.text = text
        self.surface = surface
        self.pos = 0

    def error(self, message, pos=None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token):
        self.skip()
        return self.text.startswith(token, self.pos)

    def expect(self, token):
        if not self.peek(token):
            found = self.text[self.pos:self.pos + 8] or "end of input"
            self.error(f"expected {token!r}, found {found!r}")
        self.pos += len(token)

    def integer(self):
        self.skip()
        m = _INT_RE.match(self.text, self.pos)
        if m is None:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group(0).replace(" ", ""))

    def expr(self):
        terms = [self.term()]
        while self.peek("(+)"):
            self.pos += 3
            terms.append(self.term())
        return direct_sum(*terms)

    def term(self):
        atom = self.atom()
        if self.peek("^"):
            self.pos += 1
            start = self.pos
            n = self.integer()
            if n < 1:
                self.error("a direct-sum exponent must be at least 1", start)
            return direct_sum(*([atom] * n))
        return atom

    def divisor(self):
        self.skip()
        start = self.pos
        if not self.text.startswith("O", start):
            self.error("expected a divisor O(...)")
        close = self.text.find(")", start)
        if close < 0:
            self.error("unterminated divisor", start)
        chunk = self.text[start:close + 1]
        try:
            d = parse_divisor(chunk, self.surface)
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" (line", 1)[0], self.text, start) from None
        self.pos = close + 1
        return d

    def atom(self):
        self.skip()
        start = self.pos
        if self.peek("omega("):
            if self.surface.kind != "P2":
                self.error(f"omega(...) is only defined on P2, not {self.surface.kind}", start)
            self.pos += len("omega(")
            t = self.integer()
            self.expect(")")
            return OmegaP2(t)
        if self.peek("twist("):
            self.pos += len("twist(")
            inner = self.expr()
            self.expect(",")
            d = self.divisor()
            self.expect(")")
            return Twist(inner, d)
        if self.peek("ext("):
            self.pos += len("ext(")
            sub = self.expr()
            self.expect(",")
            quot = self.expr()
            self.expect(")")
            return Ext(sub, quot)
        if self.peek("ker("):
            self.pos += len("ker(")
            mid = self.expr()
            self.expect("->")
            target = self.expr()
            self.expect(")")
            return Ker(mid, target)
        if self.peek("O("):
            return Line(self.divisor())
        found = self.text[start:start + 8] or "end of input"
        self.error(f"expected O(...), omega(...), twist(...), ext(...) or ker(...), found {found!r}")


def parse_bundle_expr(text: str, surface):
    """Parse ``text`` into an expression tree on ``surface``."""
    p = _Parser(text, get_surface(surface))
    expr = p.expr()
    p.skip()
    if p.pos != len(text):
        p.error(f"unexpected trailing input {text[p.pos:p.pos + 8]!r}")
    return expr


def _format_terms(terms):
    out = []
    i = 0
    while i < len(terms):
        j = i
        while j + 1 < len(terms) and terms[j + 1] == terms[i]:
            j += 1
        n = j - i + 1
        body = format_expr(terms[i])
        out.append(body if n == 1 else f"{body}^{n}")
        i = j + 1
    return " (+) ".join(out)


def format_expr(expr) -> str:
    """Canonical text form; ``parse_bundle_expr(format_expr(e))`` rebuilds ``e``."""
    if isinstance(expr, Line):
        return format_divisor(expr.d)
    if isinstance(expr, OmegaP2):
        return f"omega({expr.t})"
    if isinstance(expr, Twist):
        return f"twist({format_expr(expr.expr)}, {format_divisor(expr.d)})"
    if isinstance(expr, Sum):
        return _format_terms(expr.terms)
    if isinstance(expr, Ext):
        return f"ext({format_expr(expr.sub)}, {format_expr(expr.quot)})"
    if isinstance(expr, Ker):
        return f"ker({format_expr(expr.mid)} -> {format_expr(expr.target)})"
    raise TypeError(f"not a bundle expression: {expr!r}")
