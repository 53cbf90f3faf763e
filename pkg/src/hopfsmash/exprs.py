"""Textual element syntax: parsing and printing round-trip exactly.

Grammar (precedence low to high): '+'/'-', '#', '*', '^'.  Atoms are
rational literals (3, 3/2), generators X1/Y1/U[i,j]/Ubar[i,j], calls
like lambda(...), tau(...), pair(...,...), and parenthesized
expressions.  Values are scalars, enveloping-algebra elements of either
copy, dual functionals, or smash elements.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .lie import LieAlgebra, as_scalar
from .uea import (COPY_L, COPY_R, UeaElement, antipode_uea, counit_uea, phi,
                  phi_inv)
from .dual import (DualElement, antipode_dual, counit_dual, eval_pair,
                   eval_pair_right)
from .smash import SmashElement, lambda_coact, smash_mul
from . import algebroid


class ExprError(ValueError):
    """Parse or type error, carrying the offending position."""

    def __init__(self, msg, pos=None):
        self.pos = pos
        super().__init__(f"{msg}" + (f" (at position {pos})" if pos is not None else ""))


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<op>[()\[\],+\-*^#]))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip():
                raise ExprError(f"unexpected character {text[pos]!r}", pos)
            break
        if m.lastgroup is None and not m.group().strip():
            pos = m.end()
            continue
        kind = m.lastgroup
        if kind:
            out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, alg: LieAlgebra, text: str):
        self.alg = alg
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        kind, val, pos = self.next()
        if val != value:
            raise ExprError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    # expr := term (('+'|'-') term)*
    def expr(self):
        val = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            rhs = self.term()
            val = self.add(val, rhs) if op == "+" else self.add(val, self.neg(rhs))
        return val

    # term := product ('#' product)?
    def term(self):
        val = self.product()
        if self.peek()[1] == "#":
            self.next()
            rhs = self.product()
            return self.sharp(val, rhs)
        return val

    def product(self):
        val = self.power()
        while self.peek()[1] == "*":
            self.next()
            val = self.mul(val, self.power())
        return val

    def power(self):
        val = self.atom()
        if self.peek()[1] == "^":
            _, _, pos = self.next()
            kind, num, npos = self.next()
            if kind != "num" or "/" in num:
                raise ExprError("exponent must be a nonnegative integer", npos)
            n = int(num)
            out = self.one_like(val)
            for _ in range(n):
                out = self.mul(out, val)
            return out
        return val

    def atom(self):
        kind, val, pos = self.next()
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if val == "-":
            return self.neg(self.atom())
        if kind == "num":
            return as_scalar(Fraction(val))
        if kind == "name":
            return self.named(val, pos)
        raise ExprError(f"unexpected token {val or 'end of input'!r}", pos)

    def named(self, name, pos):
        alg = self.alg
        m = re.fullmatch(r"([XY])(\d+)", name)
        if m:
            j = int(m.group(2))
            if not 1 <= j <= alg.n:
                raise ExprError(f"generator index {j} out of range 1..{alg.n}", pos)
            return UeaElement.generator(alg, j, COPY_L if m.group(1) == "X" else COPY_R)
        if name in ("U", "Ubar"):
            self.expect("[")
            i = self.index()
            self.expect(",")
            j = self.index()
            self.expect("]")
            return DualElement.generator(alg, 0 if name == "U" else 1, i, j)
        if self.peek()[1] == "(":
            self.next()
            args = [self.expr()]
            while self.peek()[1] == ",":
                self.next()
                args.append(self.expr())
            self.expect(")")
            return self.call(name, args, pos)
        raise ExprError(f"unknown symbol {name!r}", pos)

    def index(self):
        kind, val, pos = self.next()
        if kind != "num" or "/" in val:
            raise ExprError("expected an integer index", pos)
        i = int(val)
        if not 1 <= i <= self.alg.n:
            raise ExprError(f"index {i} out of range 1..{self.alg.n}", pos)
        return i

    # -- typed operations ------------------------------------------

    def one_like(self, val):
        if isinstance(val, UeaElement):
            return UeaElement.one(val.alg, val.copy)
        if isinstance(val, DualElement):
            return DualElement.one(val.alg)
        if isinstance(val, SmashElement):
            return SmashElement.one(val.alg, val.copy)
        return 1

    def add(self, a, b):
        if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
            return a + b
        try:
            return a + b
        except (TypeError, ValueError) as exc:
            raise ExprError(f"cannot add {self.tname(a)} and {self.tname(b)}: {exc}")

    def neg(self, a):
        return -1 * a if not isinstance(a, (int, Fraction)) else -a

    def mul(self, a, b):
        if isinstance(a, (int, Fraction)) or isinstance(b, (int, Fraction)):
            return a * b
        if isinstance(a, DualElement) and isinstance(b, UeaElement):
            return SmashElement.from_parts(a, b)
        if isinstance(a, UeaElement) and isinstance(b, DualElement):
            return smash_mul(SmashElement.from_uea(a), SmashElement.from_dual(b))
        if isinstance(a, SmashElement) or isinstance(b, SmashElement):
            return smash_mul(self.to_smash(a), self.to_smash(b))
        try:
            return a * b
        except (TypeError, ValueError) as exc:
            raise ExprError(f"cannot multiply {self.tname(a)} and {self.tname(b)}: {exc}")

    def sharp(self, a, b):
        if isinstance(a, (int, Fraction)):
            a = a * DualElement.one(self.alg)
        if isinstance(b, (int, Fraction)):
            b = b * UeaElement.one(self.alg)
        if not isinstance(a, DualElement) or not isinstance(b, UeaElement):
            raise ExprError(f"'#' joins a functional and an enveloping element, "
                            f"got {self.tname(a)} # {self.tname(b)}")
        return SmashElement.from_parts(a, b)

    def to_smash(self, a):
        if isinstance(a, SmashElement):
            return a
        if isinstance(a, DualElement):
            return SmashElement.from_dual(a)
        if isinstance(a, UeaElement):
            return SmashElement.from_uea(a)
        raise ExprError(f"cannot use {self.tname(a)} as a smash element")

    def call(self, name, args, pos):
        def one_arg(types):
            if len(args) != 1 or not isinstance(args[0], types):
                raise ExprError(f"{name}() expects one {types} argument", pos)
            return args[0]

        if name == "lambda":
            return lambda_coact(one_arg(UeaElement))
        if name == "tau":
            return algebroid.tau(self.to_smash(args[0])) if len(args) == 1 else \
                self._arity_error(name, pos)
        if name == "tauinv":
            return algebroid.tau_inv(self.to_smash(args[0])) if len(args) == 1 else \
                self._arity_error(name, pos)
        if name == "phi":
            return phi(one_arg(UeaElement))
        if name == "phiinv":
            return phi_inv(one_arg(UeaElement))
        if name == "S":
            a = args[0] if len(args) == 1 else self._arity_error(name, pos)
            if isinstance(a, UeaElement):
                return antipode_uea(a)
            if isinstance(a, DualElement):
                return antipode_dual(a)
            raise ExprError("S() acts on enveloping or dual elements; use tau for smash",
                            pos)
        if name == "eps":
            a = args[0] if len(args) == 1 else self._arity_error(name, pos)
            if isinstance(a, UeaElement):
                return counit_uea(a)
            if isinstance(a, DualElement):
                return counit_dual(a)
            raise ExprError("eps() acts on enveloping or dual elements", pos)
        if name == "epsL":
            return algebroid.epsilon_L(self.to_smash(args[0])) if len(args) == 1 else \
                self._arity_error(name, pos)
        if name == "epsR":
            return algebroid.epsilon_R(self.to_smash(args[0])) if len(args) == 1 else \
                self._arity_error(name, pos)
        if name == "pair":
            if len(args) != 2:
                self._arity_error(name, pos)
            d, f = args
            if not isinstance(d, UeaElement) or not isinstance(f, DualElement):
                raise ExprError("pair() expects (enveloping element, functional)", pos)
            return eval_pair(d, f) if d.copy == COPY_L else eval_pair_right(d, f)
        if name in ("alphaL", "betaL", "alphaR", "betaR"):
            a = one_arg(UeaElement)
            fn = {"alphaL": algebroid.alpha_L, "betaL": algebroid.beta_L,
                  "alphaR": algebroid.alpha_R, "betaR": algebroid.beta_R}[name]
            return fn(a)
        raise ExprError(f"unknown function {name!r}", pos)

    def _arity_error(self, name, pos):
        raise ExprError(f"wrong number of arguments for {name}()", pos)

    @staticmethod
    def tname(v):
        if isinstance(v, (int, Fraction)):
            return "scalar"
        return type(v).__name__


def parse_expr(alg: LieAlgebra, text: str):
    """Parse to a scalar, UeaElement, DualElement or SmashElement."""
    p = _Parser(alg, text)
    val = p.expr()
    kind, tok, pos = p.peek()
    if kind != "end":
        raise ExprError(f"trailing input {tok!r}", pos)
    return val


def render(value) -> str:
    """Canonical rendering; parse_expr(render(v)) reproduces v."""
    if isinstance(value, (int, Fraction)):
        return str(value)
    return str(value)


def eval_expr(alg: LieAlgebra, text: str) -> str:
    """Evaluate an expression and print its canonical normal form."""
    return render(parse_expr(alg, text))
