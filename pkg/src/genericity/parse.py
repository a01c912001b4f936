"""Recursive-descent parser for polynomial expressions and ground fields.

Grammar (implicit multiplication is rejected)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' INT]
    atom   := INT | VAR | '(' expr ')' | '-' factor

Division is allowed by nonzero constants only, which covers rationals a/b.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, UnknownVariable
from .exact.bipoly import BiPoly
from .exact.field import QQ, NumberField, base_field
from .exact.poly import UniPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")

# a polynomial in T, Y, x as {(deg_T, deg_Y, deg_x): coefficient}
_VARS = {"T": (1, 0, 0), "Y": (0, 1, 0), "x": (0, 0, 1)}


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[col]!r}", col)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def _mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = (ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2])
            out[k] = out.get(k, 0) + va * vb
    return {k: v for k, v in out.items() if v != 0}


def _add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v != 0}


def _const(c) -> dict:
    return {(0, 0, 0): Fraction(c)} if c != 0 else {}


class _Parser:
    def __init__(self, text: str, variables):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.variables = variables

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind, value=None):
        t = self.take()
        if t[0] != kind or (value is not None and t[1] != value):
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}", t[2])
        return t

    def parse(self) -> dict:
        v = self.expr()
        t = self.peek()
        if t[0] != "end":
            if t[0] in ("int", "name") or t[1] == "(":
                raise ParseError("implicit multiplication is not allowed; use '*'", t[2])
            raise ParseError(f"unexpected {t[1]!r}", t[2])
        return v

    def expr(self) -> dict:
        t = self.peek()
        sign = 1
        if t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        acc = _add({}, self.term(), sign)
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                acc = _add(acc, self.term(), -1 if t[1] == "-" else 1)
            else:
                return acc

    def term(self) -> dict:
        acc = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                acc = _mul(acc, self.factor())
            elif t[0] == "op" and t[1] == "/":
                self.take()
                nt = self.peek()
                d = self.factor()
                if any(k != (0, 0, 0) for k in d):
                    raise ParseError("division by a non-constant", nt[2])
                if not d:
                    raise ParseError("division by zero", nt[2])
                acc = {k: v / d[(0, 0, 0)] for k, v in acc.items()}
            else:
                return acc

    def factor(self) -> dict:
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "int":
                raise ParseError("exponent must be a non-negative integer", e[2])
            out = _const(1)
            for _ in range(e[1]):
                out = _mul(out, base)
            return out
        return base

    def atom(self) -> dict:
        t = self.take()
        if t[0] == "int":
            return _const(t[1])
        if t[0] == "name":
            if t[1] not in self.variables:
                raise UnknownVariable(f"unknown variable {t[1]!r}", t[2])
            return {_VARS[t[1]]: Fraction(1)}
        if t[0] == "op" and t[1] == "(":
            v = self.expr()
            self.expect("op", ")")
            return v
        if t[0] == "op" and t[1] == "-":
            return _add({}, self.factor(), -1)
        if t[0] == "end":
            raise ParseError("unexpected end of input", t[2])
        raise ParseError(f"unexpected {t[1]!r}", t[2])


def parse_poly(text: str, variables=("T", "Y", "x")):
    """Parse a polynomial; a BiPoly in T, Y or a UniPoly in x.

    Expressions using only x give a UniPoly in x; anything else a BiPoly.
    Mixing x with T or Y is an error.
    """
    terms = _Parser(text, variables).parse()
    has_x = any(k[2] for k in terms)
    has_ty = any(k[0] or k[1] for k in terms)
    if has_x and has_ty:
        raise ParseError("x cannot be mixed with T and Y", 0)
    if has_x:
        n = max(k[2] for k in terms)
        return UniPoly([terms.get((0, 0, i), 0) for i in range(n + 1)], "x")
    return BiPoly({(k[0], k[1]): v for k, v in terms.items()})


def parse_bipoly(text: str) -> BiPoly:
    return parse_poly(text, ("T", "Y"))


def parse_unipoly(text: str, var: str = "x") -> UniPoly:
    """Parse a univariate polynomial written in x (or T, read as x)."""
    p = parse_poly(text, ("x", "T"))
    if isinstance(p, UniPoly):
        return p.with_var(var)
    if p.deg_y() > 0:
        raise ParseError("expected a univariate polynomial", 0)
    return p.y_coeff(0).with_var(var)


_FIELD = re.compile(
    r"^\s*(?:Q|QQ)\s*(?:\(\s*(?:(?P<i>i)|sqrt\(\s*(?P<sqrt>-?\d+)\s*\)|zeta[_ ]?\(?(?P<zeta>\d+)\)?)\s*\))?\s*$")


def parse_field(text: str) -> NumberField:
    """Q, Q(i), Q(sqrt(d)), Q(zeta_n) or Q[x]/(m(x))."""
    from .exact.cyclo import cyclotomic

    m = _FIELD.match(text)
    if m:
        if m.group("i"):
            return base_field(UniPoly([1, 0, 1], "x"), label="Q(i)")
        if m.group("sqrt"):
            d = int(m.group("sqrt"))
            return base_field(UniPoly([-d, 0, 1], "x"), label=f"Q(sqrt({d}))")
        if m.group("zeta"):
            n = int(m.group("zeta"))
            return base_field(cyclotomic(n), label=f"Q(zeta_{n})")
        return QQ
    m = re.match(r"^\s*(?:Q|QQ)\s*\[\s*x\s*\]\s*/\s*\((?P<poly>.*)\)\s*$", text)
    if m:
        f = parse_poly(m.group("poly"), ("x",))
        if not isinstance(f, UniPoly):
            raise ParseError("the defining polynomial must use x", m.start("poly"))
        return base_field(f)
    raise ParseError(f"unrecognized field {text!r}", 0)


def parse_group(text: str):
    """C4, Z/4, Cyclic(4), D5, Dihedral(5), S3, V4, A4, S4, A5, Sn, An."""
    from .groups import A4, A5, S4, V4, Alt, Cyclic, Dihedral, Sym

    s = text.replace(" ", "")
    m = re.fullmatch(r"(?:C|Z/|Cyclic\()(\d+)\)?", s)
    if m:
        return Cyclic(int(m.group(1)))
    m = re.fullmatch(r"(?:D|Dihedral\()(\d+)\)?", s)
    if m:
        n = int(m.group(1))
        if n < 3:
            raise ParseError("dihedral groups need n >= 3 (use C2 or V4)", 0)
        return Dihedral(n)
    fixed = {"V4": V4, "A4": A4, "S4": S4, "A5": A5, "S3": Dihedral(3)}
    if s in fixed:
        return fixed[s]
    m = re.fullmatch(r"([SA])(\d+)", s)
    if m:
        n = int(m.group(2))
        return Sym(n) if m.group(1) == "S" else Alt(n)
    raise ParseError(f"unrecognized group {text!r}", 0)
