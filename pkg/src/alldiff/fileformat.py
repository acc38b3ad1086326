"""Plain-text problem files.

::

    # comments run to the end of the line
    x1: [3,6]            # inclusive range
    x2: {1,3}            # explicit values (holes allowed, {} is empty)
    alldifferent(x1, x2)
    alldifferent(x1+1, x2-1)   # shifted positions

Variables get dense indices in declaration order. Constraints may appear
anywhere but must name declared variables.
"""

from __future__ import annotations

import re

from .model import AllDifferent, Domain, Problem

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#.*)
  | (?P<int>[+-]?\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[:\[\]{},()])
""", re.VERBOSE)

KEYWORDS = ("alldifferent", "alldiff")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


def _tokenize(text: str, lineno: int) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", lineno, pos + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append((kind, m.group(), pos + 1))
        pos = m.end()
    return tokens


class _Line:
    def __init__(self, tokens, lineno):
        self.tokens = tokens
        self.lineno = lineno
        self.i = 0

    def _col(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i][2]
        last = self.tokens[-1]
        return last[2] + len(last[1])

    def error(self, message):
        return ParseError(message, self.lineno, self._col())

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, None)

    def take(self, kind, text=None):
        k, t, col = self.peek()
        if k != kind or (text is not None and t != text):
            want = repr(text) if text is not None else kind
            got = "end of line" if k is None else repr(t)
            raise self.error(f"expected {want}, got {got}")
        self.i += 1
        return t, col

    def at(self, kind, text=None):
        k, t, _ = self.peek()
        return k == kind and (text is None or t == text)

    def done(self):
        if self.i != len(self.tokens):
            raise self.error(f"unexpected {self.tokens[self.i][1]!r}")


def _domain(ln: _Line) -> Domain:
    if ln.at("punct", "["):
        ln.take("punct", "[")
        lo = int(ln.take("int")[0])
        ln.take("punct", ",")
        hi = int(ln.take("int")[0])
        ln.take("punct", "]")
        if lo > hi:
            raise ln.error(f"empty range [{lo},{hi}]; write {{}} for an empty domain")
        return Domain.interval(lo, hi)
    ln.take("punct", "{")
    values = []
    if not ln.at("punct", "}"):
        values.append(int(ln.take("int")[0]))
        while ln.at("punct", ","):
            ln.take("punct", ",")
            values.append(int(ln.take("int")[0]))
    ln.take("punct", "}")
    return Domain(values)


def parse_problem(text: str) -> Problem:
    """Parse and validate a problem document.

    Raises :class:`ParseError` for syntax errors and
    :class:`~alldiff.model.ValidationError` for structural ones.
    """
    names: list[str] = []
    index: dict[str, int] = {}
    domains: list[Domain] = []
    raw_constraints = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(line, lineno)
        if not tokens:
            continue
        ln = _Line(tokens, lineno)
        name, col = ln.take("name")
        if name in KEYWORDS and ln.at("punct", "("):
            ln.take("punct", "(")
            terms = [_term(ln)]
            while ln.at("punct", ","):
                ln.take("punct", ",")
                terms.append(_term(ln))
            ln.take("punct", ")")
            ln.done()
            raw_constraints.append((lineno, terms))
            continue
        ln.take("punct", ":")
        dom = _domain(ln)
        ln.done()
        if name in index:
            raise ParseError(f"variable {name!r} declared twice", lineno, col)
        index[name] = len(names)
        names.append(name)
        domains.append(dom)
    if not names:
        raise ParseError("no variables declared", 1, 1)
    constraints = []
    for lineno, terms in raw_constraints:
        vars_, offs = [], []
        for name, col, off in terms:
            if name not in index:
                raise ParseError(f"unknown variable {name!r}", lineno, col)
            vars_.append(index[name])
            offs.append(off)
        constraints.append(AllDifferent(tuple(vars_), tuple(offs)))
    return Problem(domains, tuple(constraints), tuple(names)).check()


def _term(ln: _Line) -> tuple[str, int, int]:
    name, col = ln.take("name")
    offset = 0
    if ln.at("int"):
        text, _ = ln.take("int")
        if text[0] not in "+-":
            raise ln.error("offset needs an explicit sign")
        offset = int(text)
    return name, col, offset


def format_domain(d: Domain) -> str:
    vals = d.values
    if len(vals) >= 2 and vals[-1] - vals[0] + 1 == len(vals):
        return f"[{vals[0]},{vals[-1]}]"
    return "{" + ",".join(map(str, vals)) + "}"


def serialize_problem(p: Problem) -> str:
    lines = [f"{name}: {format_domain(d)}" for name, d in zip(p.names, p.domains)]
    for c in p.constraints:
        terms = []
        for v, o in zip(c.vars, c.offsets):
            terms.append(p.names[v] + (f"{o:+d}" if o else ""))
        lines.append(f"alldifferent({', '.join(terms)})")
    return "\n".join(lines) + "\n"
