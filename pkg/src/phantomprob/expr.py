"""A small expression language over phantom numbers.

Grammar (standard precedence, left associative, '^' binds tighter than
unary minus):

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := '-'? power
    power := atom ('^' INT)?
    atom  := NUMBER | 'p' | IDENT '(' expr (',' NUMBER)? ')' | '(' expr ')'

'p' is the reserved phantom unit (0, 1); phantom values are written
compositionally, e.g. ``0.4 + 0.2*p``.  The callable names are exp, log,
sqrt, abs, conj, red, inv, and alpha; alpha takes its positive parameter
as a second argument, ``alpha(z, 2)``.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass

from .ring import (
    Phantom,
    alpha_value,
    conjugate,
    exp as ph_exp,
    log as ph_log,
    nth_root,
    phantom_abs,
    pow_int,
)

__all__ = ["ExprSyntaxError", "parse", "evaluate", "render", "eval_text"]


class ExprSyntaxError(ValueError):
    """A parse failure with the byte offset and the tokens expected there."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str):
        self.offset = offset
        self.expected = expected
        self.found = found
        super().__init__(
            f"at offset {offset}: expected {' or '.join(expected)}, found {found}"
        )


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Literal:
    value: float


@dataclass(frozen=True)
class PhantomUnit:
    pass


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class PowInt:
    base: object
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str
    arg: object
    param: float | None = None  # the alpha parameter, when applicable


_CALL_NAMES = ("exp", "log", "sqrt", "abs", "conj", "red", "inv", "alpha")

_TOKEN_RE = _re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^(),]))"
)


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m or m.end() == pos and not src[pos:].strip():
            break
        if not m:
            raise ExprSyntaxError(pos, ("a token",), repr(src[pos]))
        if m.lastgroup is None:
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    rest = src[pos:].strip()
    if rest:
        bad = pos + (len(src[pos:]) - len(src[pos:].lstrip()))
        raise ExprSyntaxError(bad, ("a token",), repr(src[bad]))
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: tuple[str, ...]):
        kind, text, off = self.peek()
        found = "end of input" if kind == "end" else repr(text)
        raise ExprSyntaxError(off, expected, found)

    def expect_op(self, op: str):
        kind, text, _ = self.peek()
        if kind == "op" and text == op:
            return self.advance()
        self.fail((repr(op),))

    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail(("end of input",))
        return node

    def expr(self):
        node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.advance()[1]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.advance()[1]
            rhs = self.unary()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.advance()
            return Neg(self.power())
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.advance()
            negative = False
            if self.peek()[:2] == ("op", "-"):
                self.advance()
                negative = True
            kind, text, off = self.peek()
            if kind != "num" or not _re.fullmatch(r"\d+", text):
                self.fail(("an integer exponent",))
            self.advance()
            n = int(text)
            return PowInt(node, -n if negative else n)
        return node

    def atom(self):
        kind, text, off = self.peek()
        if kind == "num":
            self.advance()
            return Literal(float(text))
        if kind == "ident":
            self.advance()
            if text == "p":
                return PhantomUnit()
            if text not in _CALL_NAMES:
                raise ExprSyntaxError(
                    off, tuple(f"'{n}'" for n in ("p",) + _CALL_NAMES), repr(text)
                )
            self.expect_op("(")
            arg = self.expr()
            param = None
            if text == "alpha":
                self.expect_op(",")
                kind2, text2, _ = self.peek()
                if kind2 != "num":
                    self.fail(("a number",))
                self.advance()
                param = float(text2)
            self.expect_op(")")
            return Call(text, arg, param)
        if kind == "op" and text == "(":
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        self.fail(("a number", "'p'", "a function call", "'('"))


def parse(src: str):
    return _Parser(src).parse()


# -- evaluation ----------------------------------------------------------------


def evaluate(node) -> Phantom:
    """Evaluate an AST to a phantom number (reals have zero phantom term)."""
    if isinstance(node, Literal):
        return Phantom(node.value, 0.0)
    if isinstance(node, PhantomUnit):
        return Phantom(0.0, 1.0)
    if isinstance(node, Neg):
        return -evaluate(node.arg)
    if isinstance(node, Add):
        return evaluate(node.left) + evaluate(node.right)
    if isinstance(node, Sub):
        return evaluate(node.left) - evaluate(node.right)
    if isinstance(node, Mul):
        return evaluate(node.left) * evaluate(node.right)
    if isinstance(node, Div):
        return evaluate(node.left) / evaluate(node.right)
    if isinstance(node, PowInt):
        return pow_int(evaluate(node.base), node.exponent)
    if isinstance(node, Call):
        z = evaluate(node.arg)
        if node.name == "exp":
            return ph_exp(z)
        if node.name == "log":
            return ph_log(z)
        if node.name == "sqrt":
            return nth_root(z, 2)
        if node.name == "abs":
            return Phantom(phantom_abs(z), 0.0)
        if node.name == "conj":
            return conjugate(z)
        if node.name == "red":
            return Phantom(z.reduction, 0.0)
        if node.name == "inv":
            return z.inverse()
        if node.name == "alpha":
            return Phantom(alpha_value(z, node.param), 0.0)
    raise TypeError(f"not an expression node: {node!r}")


def render(z: Phantom) -> str:
    """Format as 'a + p*b' (or 'a - p*|b|'), 12 significant digits."""
    a = f"{z.re + 0.0:.12g}"  # adding 0.0 folds -0.0 into 0.0
    if z.ph == 0.0:
        return a
    if z.ph < 0:
        return f"{a} - p*{-z.ph:.12g}"
    return f"{a} + p*{z.ph:.12g}"


def eval_text(src: str) -> str:
    return render(evaluate(parse(src)))
