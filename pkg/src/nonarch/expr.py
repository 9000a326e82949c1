"""Expression grammar for Laurent polynomials with exact coefficients.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | power
    power  := atom ['^' ['-'] INT]
    atom   := NUMBER | 'pi' | VAR | '(' expr ')'
    NUMBER := INT ['/' INT]          (an exact rational literal)
    VAR    := t1..t9 | s1..s9

'^' binds tightest and its exponent is an integer literal; a negative
exponent is accepted only when the base is a single-term monomial (other
inverses are not Laurent polynomials).  'pi' denotes the uniformizer and
needs a pi-adic base field.  Errors carry the line and column of the
offending token.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, ParseError
from .fields import BaseFieldModel
from .laurent import LaurentPoly

__all__ = ["parse_poly", "poly_to_expr"]

_SYMBOLS = "+-*^()/"


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(("end", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens, model: BaseFieldModel, n: int, variables: str):
        self.tokens = tokens
        self.pos = 0
        self.model = model
        self.n = n
        # map from variable prefix to index offset in the exponent vector
        if variables == "t":
            self.prefixes = {"t": 0}
            self.width = n
        elif variables == "s":
            self.prefixes = {"s": 0}
            self.width = n
        elif variables == "ts":
            self.prefixes = {"t": 0, "s": n}
            self.width = 2 * n
        else:
            raise ValueError(f"unknown variable family {variables!r}")

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2], tok[3])
        return tok

    def parse(self) -> LaurentPoly:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2], tok[3])
        return value

    def expr(self) -> LaurentPoly:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> LaurentPoly:
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self) -> LaurentPoly:
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        return self.power()

    def power(self) -> LaurentPoly:
        base = self.atom()
        if self.peek()[0] != "^":
            return base
        self.take()
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        tok = self.expect("int")
        exponent = sign * tok[1]
        if exponent < 0 and len(base.terms) != 1:
            raise ParseError(
                "negative exponent requires a single-term monomial base", tok[2], tok[3]
            )
        return base ** exponent

    def atom(self) -> LaurentPoly:
        tok = self.take()
        kind, value, line, col = tok
        if kind == "int":
            q = Fraction(value)
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.expect("int")
                if den_tok[1] == 0:
                    raise ParseError("zero denominator in rational literal", den_tok[2], den_tok[3])
                q = Fraction(value, den_tok[1])
            try:
                return LaurentPoly.constant(self.model, self.width, q)
            except DomainError as exc:
                raise ParseError(str(exc), line, col) from exc
        if kind == "name":
            if value == "pi":
                if not self.model.has_pi:
                    raise ParseError("symbol 'pi' requires a pi-adic base field", line, col)
                return LaurentPoly.constant(self.model, self.width, self.model.uniformizer())
            if len(value) == 2 and value[0] in self.prefixes and value[1].isdigit():
                idx = int(value[1])
                if not 1 <= idx <= 9:
                    raise ParseError(f"variable index in {value!r} must be 1..9", line, col)
                if idx > self.n:
                    raise ParseError(
                        f"variable {value!r} exceeds the declared dimension n={self.n}", line, col
                    )
                return LaurentPoly.variable(self.model, self.width, self.prefixes[value[0]] + idx)
            raise ParseError(f"unknown symbol {value!r}", line, col)
        if kind == "(":
            inner = self.expr()
            closing = self.take()
            if closing[0] != ")":
                raise ParseError("expected ')'", closing[2], closing[3])
            return inner
        raise ParseError(f"unexpected token {value!r}", line, col)


def parse_poly(text: str, model: BaseFieldModel, n: int, variables: str = "t") -> LaurentPoly:
    """Parse an expression into a LaurentPoly.

    variables='t' or 's' reads a single family mapped to indices 1..n;
    variables='ts' reads both (t_i -> i, s_i -> n+i, a 2n-variable ring)."""
    return _Parser(_tokenize(text), model, n, variables).parse()


def _coeff_factors(elem) -> list:
    """Grammar factors multiplying to the coefficient; raises when the
    coefficient is not expressible (non-monomial pi denominator)."""
    model = elem.model
    if model.kind in ("trivial-q", "p-adic-q"):
        return [str(elem.num[0])]
    num, den = elem._canonical()
    shift = 0
    if den != (model._cf.one,):
        if any(c for c in den[:-1]):
            raise DomainError(
                "coefficient has a non-monomial pi denominator; not expressible in the grammar"
            )
        shift = len(den) - 1
    parts = []
    for i, c in enumerate(num):
        if not c:
            continue
        e = i - shift
        cs = model._cf.render(c) if model.kind == "pi-adic-fp" else str(c)
        if e == 0:
            parts.append(cs)
        else:
            pi = "pi" if e == 1 else f"pi^{e}"
            parts.append(pi if cs == "1" else f"{cs}*{pi}")
    if not parts:
        return ["0"]
    if len(parts) == 1:
        return [parts[0]]
    return ["(" + " + ".join(parts) + ")"]


def poly_to_expr(f: LaurentPoly, variables: str = "t") -> str:
    """Render a LaurentPoly as a grammar expression that reparses to an
    identical polynomial."""
    if f.is_zero:
        return "0"
    if variables == "ts":
        half = f.n // 2
        names = [f"t{i + 1}" for i in range(half)] + [f"s{i + 1}" for i in range(half)]
    else:
        names = [f"{variables}{i + 1}" for i in range(f.n)]
    rendered = []
    for exps in sorted(f.terms):
        coeff = f.terms[exps]
        factors = []
        for name, e in zip(names, exps):
            if e == 0:
                continue
            factors.append(name if e == 1 else f"{name}^{e}")
        cparts = _coeff_factors(coeff)
        if factors and cparts == ["1"]:
            rendered.append("*".join(factors))
        else:
            rendered.append("*".join(cparts + factors))
    return " + ".join(rendered)
