"""Text form of polynomials.

Grammar (whitespace ignored)::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := ('+' | '-') unary | power
    power   := atom ('^' INT)?
    atom    := INT ('/' INT)? | 'i' | 'x' INT | '(' expr ')'

Variables are ``x1`` ... ``xn``. Juxtaposition is not multiplication, so
``x1x2`` and ``2x1`` are errors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .gaussian import GaussianRational
from .poly import Polynomial

__all__ = ["ParseError", "parse_polynomial", "parse_polynomials", "format_polynomial", "format_coefficient"]


class ParseError(ValueError):
    """Malformed polynomial text; ``position`` is a 0-based offset into the input."""

    def __init__(self, message: str, position: int, text: str = "", line: int | None = None):
        self.message = message
        self.position = position
        self.text = text
        self.line = line
        where = f"line {line}, " if line is not None else ""
        super().__init__(f"{where}position {position}: {message}")


MAX_EXPONENT = 1000
MAX_PRODUCT_WORK = 1_000_000  # term pairs per multiplication while expanding


@dataclass(frozen=True)
class _Token:
    kind: str  # INT, VAR, I, OP, END
    value: object
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<INT>\d+)|(?P<VAR>x(?P<idx>\d+))|(?P<I>i)|(?P<OP>[-+*/^()]))")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        start = pos
        if m.group("INT") is not None:
            tokens.append(_Token("INT", int(m.group("INT")), start))
        elif m.group("VAR") is not None:
            tokens.append(_Token("VAR", int(m.group("idx")), start))
        elif m.group("I") is not None:
            tokens.append(_Token("I", None, start))
        else:
            tokens.append(_Token("OP", m.group("OP"), start))
        pos = m.end()
        # identifiers glued together ("x1x2", "2x1", "xi") are implicit products
        if pos < n and (text[pos].isalpha()) and tokens[-1].kind in ("INT", "VAR", "I"):
            raise ParseError("implicit multiplication is not allowed; use '*'", pos, text)
    tokens.append(_Token("END", None, n))
    return tokens


class _Parser:
    """Recursive descent over an intermediate {exponent-dict: coefficient} form.

    Terms are kept with variable-index keys so the variable count can be
    decided after the whole input is seen.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0
        self.max_var = 0

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def take(self) -> _Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def error(self, msg: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, min(tok.pos, max(len(self.text) - 1, 0)), self.text)

    def parse(self) -> dict:
        if self.peek().kind == "END":
            self.error("empty input")
        value = self.expr()
        if self.peek().kind != "END":
            self.error(f"unexpected token {self._describe(self.peek())}")
        return value

    @staticmethod
    def _describe(tok: _Token) -> str:
        if tok.kind == "END":
            return "end of input"
        if tok.kind == "VAR":
            return f"'x{tok.value}'"
        if tok.kind == "I":
            return "'i'"
        return repr(str(tok.value))

    def expr(self) -> dict:
        acc = self.term()
        while self.peek().kind == "OP" and self.peek().value in "+-":
            op = self.take().value
            rhs = self.term()
            acc = _add(acc, rhs if op == "+" else _neg(rhs))
        return acc

    def term(self) -> dict:
        acc = self.unary()
        while self.peek().kind == "OP" and self.peek().value == "*":
            tok = self.take()
            acc = self._mul(acc, self.unary(), tok)
        return acc

    def _mul(self, a: dict, b: dict, tok: _Token) -> dict:
        if len(a) * len(b) > MAX_PRODUCT_WORK:
            self.error("expansion too large", tok)
        return _mul(a, b)

    def unary(self) -> dict:
        tok = self.peek()
        if tok.kind == "OP" and tok.value in "+-":
            self.take()
            inner = self.unary()
            return inner if tok.value == "+" else _neg(inner)
        return self.power()

    def power(self) -> dict:
        base = self.atom()
        if self.peek().kind == "OP" and self.peek().value == "^":
            self.take()
            tok = self.take()
            if tok.kind != "INT":
                self.error("exponent must be a non-negative integer", tok)
            if tok.value > MAX_EXPONENT:
                self.error(f"exponent larger than {MAX_EXPONENT}", tok)
            result = {(): GaussianRational(1)}
            k = tok.value
            while k:
                if k & 1:
                    result = self._mul(result, base, tok)
                k >>= 1
                if k:
                    base = self._mul(base, base, tok)
            return result
        return base

    def atom(self) -> dict:
        tok = self.take()
        if tok.kind == "INT":
            value = Fraction(tok.value)
            nxt = self.peek()
            if nxt.kind == "OP" and nxt.value == "/":
                self.take()
                den = self.take()
                if den.kind != "INT":
                    self.error("expected integer denominator", den)
                if den.value == 0:
                    self.error("zero denominator", den)
                value = Fraction(tok.value, den.value)
            return {(): GaussianRational(value)} if value else {}
        if tok.kind == "I":
            return {(): GaussianRational(0, 1)}
        if tok.kind == "VAR":
            if tok.value < 1:
                self.error("variables are numbered from x1", tok)
            self.max_var = max(self.max_var, tok.value)
            return {((tok.value, 1),): GaussianRational(1)}
        if tok.kind == "OP" and tok.value == "(":
            inner = self.expr()
            close = self.take()
            if not (close.kind == "OP" and close.value == ")"):
                self.error("expected ')'", close)
            return inner
        self.error(f"unexpected {self._describe(tok)}", tok)


def _key_mul(a: tuple, b: tuple) -> tuple:
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _neg(a: dict) -> dict:
    return {k: -c for k, c in a.items()}


def _mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = _key_mul(k1, k2)
            s = out.get(k, 0) + c1 * c2
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _parse_raw(text: str) -> tuple[dict, int]:
    p = _Parser(text)
    return p.parse(), p.max_var


def _to_polynomial(raw: dict, num_vars: int) -> Polynomial:
    terms = {}
    for key, c in raw.items():
        mono = [0] * num_vars
        for v, e in key:
            mono[v - 1] = e
        terms[tuple(mono)] = c
    return Polynomial(num_vars, terms)


def parse_polynomial(text: str, num_vars: int) -> Polynomial:
    """Parse ``text`` as a polynomial in x1..x{num_vars}."""
    raw, max_var = _parse_raw(text)
    if max_var > num_vars:
        pos = _var_position(text, max_var)
        raise ParseError(f"variable x{max_var} out of range for {num_vars} variables", pos, text)
    return _to_polynomial(raw, num_vars)


def _var_position(text: str, idx: int) -> int:
    m = re.search(rf"x0*{idx}(?!\d)", text)
    return m.start() if m else 0


def parse_polynomials(lines: Iterable[str], num_vars: int | None = None) -> list[Polynomial]:
    """Parse one polynomial per line; blank lines and ``#`` comments are skipped.

    Without ``num_vars`` the variable count is the largest index used.
    """
    raws = []
    max_var = 0
    for lineno, line in enumerate(lines, start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        try:
            raw, mv = _parse_raw(body)
        except ParseError as exc:
            raise ParseError(exc.message, exc.position, body, line=lineno) from None
        if num_vars is not None and mv > num_vars:
            raise ParseError(
                f"variable x{mv} out of range for {num_vars} variables", _var_position(body, mv), body, line=lineno
            )
        raws.append(raw)
        max_var = max(max_var, mv)
    n = num_vars if num_vars is not None else max(max_var, 1)
    return [_to_polynomial(raw, n) for raw in raws]


def format_coefficient(c: GaussianRational) -> str:
    """Coefficient text; complex values with both parts are parenthesized."""
    if c.im == 0:
        return str(c.re)
    if c.re == 0:
        return _imag_text(c.im)
    im = _imag_text(c.im)
    sep = "" if im.startswith("-") else "+"
    return f"({c.re}{sep}{im})"


def _imag_text(b: Fraction) -> str:
    if b == 1:
        return "i"
    if b == -1:
        return "-i"
    return f"{b}*i"


def _monomial_text(mono: tuple) -> str:
    parts = []
    for k, e in enumerate(mono, start=1):
        if e == 1:
            parts.append(f"x{k}")
        elif e > 1:
            parts.append(f"x{k}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    """Canonical text, terms in decreasing lex order; the zero polynomial is ``0``."""
    if f.is_zero():
        return "0"
    pieces = []
    for mono, c in f.items():
        negative = (c.im == 0 and c.re < 0) or (c.re == 0 and c.im < 0)
        mag = -c if negative else c
        mtext = _monomial_text(mono)
        if not mtext:
            body = format_coefficient(mag)
        elif mag == 1:
            body = mtext
        else:
            body = f"{format_coefficient(mag)}*{mtext}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)
