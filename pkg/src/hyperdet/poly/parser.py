# ABOUTME: Text format for ternary forms: recursive-descent parser and the matching printer.
# ABOUTME: Accepts + - * ^, parentheses, the imaginary unit i and implicit multiplication.

from __future__ import annotations

import re
from dataclasses import dataclass

from hyperdet.errors import NonHomogeneousError, PolynomialSyntaxError
from hyperdet.poly.homogeneous import HomogeneousPoly, variable_name

# Sparse intermediate form: {(i, j, k): coefficient}
_Terms = dict[tuple[int, int, int], complex]

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[xyzi])
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)

_VAR_INDEX = {"x": 0, "y": 1, "z": 2}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise PolynomialSyntaxError(f"Unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup or ""
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


def _add(a: _Terms, b: _Terms, sign: float = 1.0) -> _Terms:
    out = dict(a)
    for exp, c in b.items():
        out[exp] = out.get(exp, 0j) + sign * c
    return out


def _mul(a: _Terms, b: _Terms) -> _Terms:
    out: _Terms = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            exp = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            out[exp] = out.get(exp, 0j) + ca * cb
    return out


class _Parser:
    """expr := term (('+' | '-') term)*
    term := factor (['*'] factor)*
    factor := ('+' | '-') factor | primary ['^' integer]
    primary := number | x | y | z | i | '(' expr ')'
    """

    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def _advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _is_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def parse(self) -> _Terms:
        if self.current.kind == "end":
            raise PolynomialSyntaxError("Empty polynomial", 0)
        result = self._expr()
        if self.current.kind != "end":
            raise PolynomialSyntaxError(f"Unexpected {self.current.text!r}", self.current.position)
        return result

    def _expr(self) -> _Terms:
        result = self._term()
        while self._is_op("+", "-"):
            sign = 1.0 if self._advance().text == "+" else -1.0
            result = _add(result, self._term(), sign)
        return result

    def _starts_factor(self) -> bool:
        tok = self.current
        return tok.kind in ("number", "name") or (tok.kind == "op" and tok.text == "(")

    def _term(self) -> _Terms:
        result = self._factor()
        while True:
            if self._is_op("*"):
                self._advance()
                result = _mul(result, self._factor())
            elif self._starts_factor():
                result = _mul(result, self._factor())
            else:
                return result

    def _factor(self) -> _Terms:
        if self._is_op("+", "-"):
            sign = 1.0 if self._advance().text == "+" else -1.0
            return {exp: sign * c for exp, c in self._factor().items()}
        base = self._primary()
        if not self._is_op("^"):
            return base
        self._advance()
        tok = self.current
        if tok.kind != "number" or not tok.text.isdigit():
            raise PolynomialSyntaxError("Exponent must be a non-negative integer", tok.position)
        self._advance()
        result: _Terms = {(0, 0, 0): 1 + 0j}
        for _ in range(int(tok.text)):
            result = _mul(result, base)
        return result

    def _primary(self) -> _Terms:
        tok = self.current
        if tok.kind == "number":
            self._advance()
            return {(0, 0, 0): complex(float(tok.text))}
        if tok.kind == "name":
            self._advance()
            if tok.text == "i":
                return {(0, 0, 0): 1j}
            exp = [0, 0, 0]
            exp[_VAR_INDEX[tok.text]] = 1
            return {(exp[0], exp[1], exp[2]): 1 + 0j}
        if self._is_op("("):
            self._advance()
            inner = self._expr()
            if not self._is_op(")"):
                raise PolynomialSyntaxError("Expected ')'", self.current.position)
            self._advance()
            return inner
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise PolynomialSyntaxError(f"Unexpected {what}", tok.position)


def parse_polynomial(text: str) -> HomogeneousPoly:
    """Parse text such as "x^4 - 4x^2y^2 + y^4" into a HomogeneousPoly.

    Raises:
        PolynomialSyntaxError: On malformed input (with the 0-based offset).
        NonHomogeneousError: When non-zero terms have different total degrees.
    """
    terms = _Parser(text).parse()
    nonzero = {exp: c for exp, c in terms.items() if c != 0}
    degrees = sorted({sum(exp) for exp in nonzero})
    if len(degrees) > 1:
        raise NonHomogeneousError(
            f"Polynomial mixes total degrees {', '.join(str(d) for d in degrees)}"
        )
    if degrees:
        degree = degrees[0]
    else:
        degree = max((sum(exp) for exp in terms), default=0)
    return HomogeneousPoly.from_terms(degree, nonzero)


def _format_real(value: float) -> str:
    if value.is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def _format_monomial(exp: tuple[int, int, int]) -> str:
    parts = []
    for var, power in enumerate(exp):
        if power == 1:
            parts.append(variable_name(var))
        elif power > 1:
            parts.append(f"{variable_name(var)}^{power}")
    return "".join(parts)


def format_polynomial(p: HomogeneousPoly) -> str:
    """Print p in monomial order; parse_polynomial reads the output back."""
    pieces: list[str] = []
    for mono, c in p.terms():
        monomial = _format_monomial(tuple(mono))
        if c.imag != 0:
            im_sign = "-" if c.imag < 0 else "+"
            body = f"({_format_real(c.real)}{im_sign}{_format_real(abs(c.imag))}i){monomial}"
            sign = "+"
        else:
            sign = "-" if c.real < 0 else "+"
            magnitude = abs(c.real)
            if magnitude == 1 and monomial:
                body = monomial
            else:
                body = f"{_format_real(magnitude)}{monomial}"
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces) if pieces else "0"
