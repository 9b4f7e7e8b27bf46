"""Polynomial text grammar.

Terms are ``c``, ``c*x``, ``c*x^k``, ``x^k``, ``x`` with integer or ``a/b``
coefficients, joined by ``+``/``-``; whitespace is insignificant.  The same
grammar with variables ``x`` and ``y`` covers the two-variable inputs used by
specialization.  Printing emits the descending-degree canonical form and
``parse(format(p)) == p`` exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PolySyntaxError
from .exactarith import format_rational
from .polynomials import BiPoly, Poly

_MAX_EXPONENT = 50_000  # operational guard, far above any desk-scale degree


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip_ws()
        if self.i >= len(self.text):
            return ""
        return self.text[self.i]

    def take(self):
        ch = self.peek()
        self.i += 1
        return ch

    def number(self):
        self.skip_ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start:
            raise PolySyntaxError("expected a number", start)
        return int(self.text[start : self.i])

    def error(self, msg):
        raise PolySyntaxError(msg, self.i)


def _parse_terms(text: str, variables: tuple[str, ...]):
    """Parse into a dict mapping exponent tuples (one slot per variable) to
    rational coefficients."""
    sc = _Scanner(text)
    terms: dict[tuple, Fraction] = {}
    if sc.peek() == "":
        sc.error("empty polynomial")
    first = True
    while True:
        ch = sc.peek()
        if ch == "" and not first:
            break
        sign = 1
        if ch == "+" or ch == "-":
            sc.take()
            sign = -1 if ch == "-" else 1
        elif not first:
            sc.error("expected '+' or '-' between terms")
        coeff, exps = _parse_term(sc, variables)
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + sign * coeff
        first = False
    return terms


def _parse_term(sc: _Scanner, variables):
    coeff = Fraction(1)
    exps = [0] * len(variables)
    saw_factor = False
    while True:
        ch = sc.peek()
        if ch.isdigit():
            num = sc.number()
            if sc.peek() == "/":
                sc.take()
                den = sc.number()
                if den == 0:
                    sc.error("zero denominator")
                coeff *= Fraction(num, den)
            else:
                coeff *= num
        elif ch in variables:
            sc.take()
            k = 1
            if sc.peek() == "^":
                sc.take()
                k = sc.number()
                if k > _MAX_EXPONENT:
                    sc.error(f"exponent exceeds {_MAX_EXPONENT}")
            exps[variables.index(ch)] += k
        else:
            sc.error("expected a coefficient or variable")
        saw_factor = True
        if sc.peek() == "*":
            sc.take()
            continue
        break
    if not saw_factor:
        sc.error("empty term")
    return coeff, exps


def parse_poly(text: str, var: str = "x") -> Poly:
    """Parse univariate polynomial text in the given variable."""
    terms = _parse_terms(text, (var,))
    deg = max((k[0] for k in terms), default=0)
    out = [Fraction(0)] * (deg + 1)
    for (k,), c in terms.items():
        out[k] += c
    return Poly(out)


def parse_bipoly(text: str) -> BiPoly:
    """Parse a polynomial in x and y."""
    terms = _parse_terms(text, ("x", "y"))
    return BiPoly({(i, j): c for (i, j), c in terms.items()})


def _term_str(mag: Fraction, varpart: str) -> str:
    if not varpart:
        return format_rational(mag)
    if mag == 1:
        return varpart
    return f"{format_rational(mag)}*{varpart}"


def _join(parts):
    out = []
    for sign, body in parts:
        if not out:
            out.append(body if sign > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if sign > 0 else f"- {body}")
    return " ".join(out)


def format_poly(p: Poly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        if k == 0:
            varpart = ""
        elif k == 1:
            varpart = var
        else:
            varpart = f"{var}^{k}"
        parts.append((1 if c > 0 else -1, _term_str(abs(c), varpart)))
    return _join(parts)


def format_bipoly(f: BiPoly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for (i, j), c in sorted(f.terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0])):
        pieces = []
        if i == 1:
            pieces.append("x")
        elif i > 1:
            pieces.append(f"x^{i}")
        if j == 1:
            pieces.append("y")
        elif j > 1:
            pieces.append(f"y^{j}")
        parts.append((1 if c > 0 else -1, _term_str(abs(c), "*".join(pieces))))
    return _join(parts)
