"""Text form of Laurent polynomials and rational functions, and its parser.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' ['-'] INT | '^' '(' ['-'] INT ')')?
    atom   := INT | 'q' | 'v' INT | '(' expr ')'

Rendering lists terms by descending exponent vector (q first), writes
coefficients as p/q and puts the factored denominator after a single '/'.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .laurent import LaurentPoly
from .ratfn import RatFn


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def _var_names(m: int) -> list[str]:
    return ["q"] + [f"v{k}" for k in range(1, m + 1)]


def _monomial(exps, names) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    names = _var_names(p.m)
    out = []
    for exps, c in p.terms().items():
        c = Fraction(c)
        neg = c < 0
        a = abs(c)
        mono = _monomial(exps, names)
        coeff = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        if not mono:
            body = coeff
        elif a == 1:
            body = mono
        else:
            body = f"{coeff}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _wrap(p: LaurentPoly) -> str:
    s = render_poly(p)
    return f"({s})" if len(p) > 1 or s.startswith("-") else s


def render(f: RatFn) -> str:
    num = render_poly(f.num)
    if not f.den:
        return num
    factors = sorted(f.den.items(), key=lambda fk: fk[0].sort_key(), reverse=True)
    den = "*".join(f"({render_poly(g)})" + (f"^{k}" if k != 1 else "") for g, k in factors)
    if len(factors) > 1 or factors[0][1] != 1:
        den = f"({den})" if len(factors) > 1 else den
    numtxt = f"({num})" if len(f.num) > 1 or "/" in num or num.startswith("-") else num
    return f"{numtxt}/{den}"


_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|v(\d+)|([-+*/^()]))")


class _Parser:
    def __init__(self, text: str, m: int):
        self.text = text
        self.m = m
        self.toks = []
        pos = 0
        text_len = len(text)
        while pos < text_len:
            if text[pos].isspace():
                pos += 1
                continue
            mt = _TOKEN.match(text, pos)
            if not mt:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            start = mt.start() + (len(mt.group(0)) - len(mt.group(0).lstrip()))
            if mt.group(1) is not None:
                self.toks.append(("int", int(mt.group(1)), start))
            elif mt.group(2) is not None:
                self.toks.append(("var", 0, start))
            elif mt.group(3) is not None:
                k = int(mt.group(3))
                if not 1 <= k <= m:
                    raise ParseError(f"variable v{k} not available with m={m}", start)
                self.toks.append(("var", k, start))
            else:
                self.toks.append(("op", mt.group(4), start))
            pos = mt.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", None, len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise ParseError(f"expected {op!r}", t[2])

    def parse(self):
        val = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError("unexpected trailing input", t[2])
        return val

    def expr(self):
        val = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op, pos = self.take()[1:]
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", pos)
                val = val / rhs
        return val

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            val = self.unary()
            return -val if t[1] == "-" else val
        return self.power()

    def _exponent(self):
        t = self.peek()
        paren = t[0] == "op" and t[1] == "("
        if paren:
            self.take()
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.take()
            sign = -1
        t = self.take()
        if t[0] != "int":
            raise ParseError("expected an integer exponent", t[2])
        if paren:
            self.expect(")")
        return sign * t[1]

    def power(self):
        val = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self._exponent()
            if e < 0 and val.is_zero():
                raise ParseError("zero to a negative power", t[2])
            val = val ** e
        return val

    def atom(self):
        t = self.take()
        if t[0] == "int":
            return RatFn.const(t[1], self.m)
        if t[0] == "var":
            if t[1] == 0:
                return RatFn.q(self.m)
            return RatFn.v(t[1], self.m)
        if t[0] == "op" and t[1] == "(":
            val = self.expr()
            self.expect(")")
            return val
        if t[0] == "end":
            raise ParseError("unexpected end of input", t[2])
        raise ParseError(f"unexpected token {t[1]!r}", t[2])


def parse(text: str, m: int) -> RatFn:
    """Parse a rational function in q, v1..vm."""
    return _Parser(text, m).parse()


def parse_poly(text: str, m: int) -> LaurentPoly:
    f = parse(text, m)
    if not f.is_polynomial():
        raise ValueError(f"{text!r} is not a Laurent polynomial")
    return f.num
