"""Parsing and rendering: polynomial expressions and model files.

Expression grammar (whitespace insignificant, `#` starts a comment):

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ['^' integer]
    atom   := rational | name | '(' expr ')'
    rational := integer ['/' integer]

`^` binds tighter than `*`, which binds tighter than `+`/`-`.  Model files
are line oriented: `generator <name> <degree>` declarations followed by
`d <name> = <expression>` lines; undeclared differentials are zero.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import AlgebraElement, GeneratorTable, sorted_monomials
from .groebner import Polynomial, PolyRing, _grevlex_key
from .model import SullivanModel


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


_TOKEN = re.compile(r"(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|([()+\-*/^]))")


def _tokenize(text: str, line: int | None = None):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if not match:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        number, name, op = match.groups()
        if number is not None:
            tokens.append(("int", int(number), pos + 1))
        elif name is not None:
            tokens.append(("name", name, pos + 1))
        else:
            tokens.append(("op", op, pos + 1))
        pos = match.end()
    return tokens


class _ExpressionParser:
    """Recursive descent over the tokens, producing values in any algebra.

    The symbols dict maps names to elements; `scalar` embeds a Fraction.
    Elements must support +, -, * and ** with integer exponents.
    """

    def __init__(self, tokens, symbols, scalar, line=None):
        self.tokens = tokens
        self.pos = 0
        self.symbols = symbols
        self.scalar = scalar
        self.line = line

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self.line)
        self.pos += 1
        return tok

    def expect_op(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}, found {tok[1]!r}", self.line, tok[2])

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected token {tok[1]!r}", self.line, tok[2])
        return value

    def expr(self):
        value = self.term()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if tok[1] == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] == "*":
                self.take()
                value = value * self.unary()
            else:
                return value

    def unary(self):
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "-":
            self.take()
            return self.scalar(Fraction(-1)) * self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            self.take()
            exp_tok = self.take()
            if exp_tok[0] != "int":
                raise ParseError("exponent must be a nonnegative integer", self.line, exp_tok[2])
            return base ** exp_tok[1]
        return base

    def atom(self):
        tok = self.take()
        if tok[0] == "int":
            value = Fraction(tok[1])
            nxt = self.peek()
            if nxt and nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den_tok = self.take()
                if den_tok[0] != "int" or den_tok[1] == 0:
                    raise ParseError("denominator must be a nonzero integer", self.line, den_tok[2])
                value = Fraction(tok[1], den_tok[1])
            return self.scalar(value)
        if tok[0] == "name":
            try:
                return self.symbols(tok[1])
            except KeyError:
                raise ParseError(f"unknown generator {tok[1]!r}", self.line, tok[2]) from None
        if tok[0] == "op" and tok[1] == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected token {tok[1]!r}", self.line, tok[2])


def parse_element(text: str, table: GeneratorTable, line: int | None = None) -> AlgebraElement:
    parser = _ExpressionParser(
        _tokenize(text, line), lambda name: table.generator(name), table.scalar, line
    )
    return parser.parse()


def parse_polynomial(text: str, ring: PolyRing, line: int | None = None) -> Polynomial:
    parser = _ExpressionParser(
        _tokenize(text, line), lambda name: ring.variable(name), ring.scalar, line
    )
    return parser.parse()


def variables_in(text: str) -> list[str]:
    """Names appearing in an expression, sorted; used for default ring inference."""
    return sorted({tok[1] for tok in _tokenize(text) if tok[0] == "name"})


# -- model files --------------------------------------------------------------


def parse_model(text: str, validate: bool = True) -> SullivanModel:
    """Parse the line-oriented model format; validates unless told otherwise."""
    entries: list[tuple[str, int]] = []
    raw_differentials: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("generator"):
            parts = line.split()
            if len(parts) != 3:
                raise ParseError("expected `generator <name> <degree>`", lineno)
            _, name, degree = parts
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", name):
                raise ParseError(f"bad generator name {name!r}", lineno)
            try:
                degree_value = int(degree)
            except ValueError:
                raise ParseError(f"bad degree {degree!r}", lineno) from None
            entries.append((name, degree_value))
        elif line.startswith("d "):
            body = line[2:]
            if "=" not in body:
                raise ParseError("expected `d <name> = <expression>`", lineno)
            name, expression = body.split("=", 1)
            raw_differentials.append((name.strip(), expression.strip(), lineno))
        else:
            raise ParseError(f"unrecognized directive {line.split()[0]!r}", lineno)
    try:
        table = GeneratorTable(entries)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    differential = {}
    for name, expression, lineno in raw_differentials:
        if name not in table.names:
            raise ParseError(f"unknown generator {name!r}", lineno)
        if name in differential:
            raise ParseError(f"duplicate differential for {name!r}", lineno)
        differential[name] = parse_element(expression, table, lineno)
    m = SullivanModel(table, differential)
    if validate:
        violation = m.validate()
        if violation is not None:
            raise ParseError(f"invalid model ({violation.kind}): {violation.message}")
    return m


# -- rendering ----------------------------------------------------------------


def render_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _render_terms(pairs, mono_to_str) -> str:
    if not pairs:
        return "0"
    chunks = []
    for i, (mono, coeff) in enumerate(pairs):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = mono_to_str(mono)
        if not body:
            piece = render_fraction(mag)
        elif mag == 1:
            piece = body
        else:
            piece = f"{render_fraction(mag)}*{body}"
        if i == 0:
            chunks.append(piece if sign == "+" else f"-{piece}")
        else:
            chunks.append(f" {sign} {piece}")
    return "".join(chunks)


def render_element(element: AlgebraElement) -> str:
    table = element.table

    def mono_str(mono):
        factors = []
        for i, e in enumerate(mono):
            if e == 0:
                continue
            factors.append(table.names[i] if e == 1 else f"{table.names[i]}^{e}")
        return "*".join(factors)

    ordered = sorted_monomials(table, element.terms)
    return _render_terms([(m, element.terms[m]) for m in ordered], mono_str)


def render_polynomial(p: Polynomial) -> str:
    ring = p.ring

    def mono_str(mono):
        factors = []
        for i, e in enumerate(mono):
            if e == 0:
                continue
            factors.append(ring.variables[i] if e == 1 else f"{ring.variables[i]}^{e}")
        return "*".join(factors)

    ordered = sorted(p.terms, key=_grevlex_key, reverse=True)
    return _render_terms([(m, p.terms[m]) for m in ordered], mono_str)


def render_model(m: SullivanModel) -> str:
    lines = [f"generator {name} {degree}" for name, degree in zip(m.table.names, m.table.degrees)]
    for i, name in enumerate(m.table.names):
        if not m.images[i].is_zero():
            lines.append(f"d {name} = {render_element(m.images[i])}")
    return "\n".join(lines) + "\n"
