"""
Generating-function expressions such as ``(1-sqrt(1-4*x))/(2*x)``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ['^' uint]
    atom   := uint | 'x' | NAME | '(' expr ')' | 'sqrt' '(' expr ')'

``NAME`` is any key of the builtin table (by default only ``c``, the
Catalan generating function).  Implicit multiplication is not supported.
"""

import re
from dataclasses import dataclass

from . import series as fps
from .errors import DivisionByNonUnit, GFSyntaxError, OrderExceeded
from .series import Series

BUILTINS = {"c": fps.catalan}


# AST ------------------------------------------------------------------------

class Expr:
    __slots__ = ()


@dataclass(frozen=True)
class Num(Expr):
    value: int


@dataclass(frozen=True)
class X(Expr):
    pass


@dataclass(frozen=True)
class Builtin(Expr):
    name: str


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class Sqrt(Expr):
    arg: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exp: int


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr


_BINARY = {"+": Add, "-": Sub, "*": Mul, "/": Div}
_SYMBOL = {Add: "+", Sub: "-", Mul: "*", Div: "/"}


# tokenizer --------------------------------------------------------------------

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


def tokenize(text):
    """List of ``(kind, value, offset)``; kind is 'int', 'name', 'op' or 'end'."""
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), pos))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), pos))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise GFSyntaxError("unexpected character %r" % ch, text, pos,
                                    {"integer", "name", "+", "-", "*", "/", "^", "(", ")"})
            tokens.append(("op", ch, pos))
        pos = m.end()
    tokens.append(("end", None, n))
    return tokens


# parser -------------------------------------------------------------------------

class _Parser:
    def __init__(self, text, builtins):
        self.text = text
        self.names = set(builtins)
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, expected):
        _, _, offset = self.peek()
        raise GFSyntaxError(message, self.text, offset, expected)

    def expect_op(self, op):
        kind, value, _ = self.peek()
        if kind != "op" or value != op:
            self.fail("expected %r" % op, {op})
        self.next()

    def atom_starts(self):
        return {"integer", "x", "(", "sqrt", "-"} | self.names

    def parse(self):
        e = self.expr()
        kind, value, _ = self.peek()
        if kind != "end":
            self.fail("unexpected %r" % (value,), {"+", "-", "*", "/", "^", "end of input"})
        return e

    def expr(self):
        left = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.next()[1]
            left = _BINARY[op](left, self.term())
        return left

    def term(self):
        left = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.next()[1]
            left = _BINARY[op](left, self.factor())
        return left

    def factor(self):
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.next()
            return Neg(self.factor())
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.next()
            kind, value, _ = self.peek()
            if kind != "int":
                self.fail("exponent must be a non-negative integer literal", {"integer"})
            self.next()
            return Pow(base, value)
        return base

    def atom(self):
        kind, value, _ = self.peek()
        if kind == "int":
            self.next()
            return Num(value)
        if kind == "name":
            if value == "x":
                self.next()
                return X()
            if value == "sqrt":
                self.next()
                self.expect_op("(")
                inner = self.expr()
                self.expect_op(")")
                return Sqrt(inner)
            if value in self.names:
                self.next()
                return Builtin(value)
            self.fail("unknown name %r" % value, self.atom_starts())
        if kind == "op" and value == "(":
            self.next()
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "end":
            self.fail("unexpected end of input", self.atom_starts())
        self.fail("unexpected %r" % (value,), self.atom_starts())


def parse(text, builtins=None):
    """Parse ``text`` into an :class:`Expr` tree."""
    return _Parser(text, BUILTINS if builtins is None else builtins).parse()


# printing -------------------------------------------------------------------------

def unparse(e):
    """Render ``e`` so that ``parse(unparse(e)) == e``."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, X):
        return "x"
    if isinstance(e, Builtin):
        return e.name
    if isinstance(e, Sqrt):
        return "sqrt(%s)" % unparse(e.arg)
    if isinstance(e, Neg):
        return "-%s" % _wrap(e.arg, atomic_only=False)
    if isinstance(e, Pow):
        return "%s^%d" % (_wrap(e.base), e.exp)
    left, right = unparse(e.left), unparse(e.right)
    if not _is_atomic(e.left) and not isinstance(e.left, type(e)):
        left = "(%s)" % left
    if not _is_atomic(e.right):
        right = "(%s)" % right
    return "%s %s %s" % (left, _SYMBOL[type(e)], right)


def _is_atomic(e):
    return isinstance(e, (Num, X, Builtin, Sqrt, Pow, Neg))


def _wrap(e, atomic_only=True):
    s = unparse(e)
    if isinstance(e, (Num, X, Builtin, Sqrt)):
        return s
    if not atomic_only and isinstance(e, (Pow, Neg)):
        return s
    return "(%s)" % s


# evaluation -------------------------------------------------------------------------

def _eval(e, order, builtins):
    if isinstance(e, Num):
        return Series.const(e.value, order)
    if isinstance(e, X):
        return Series.x(order)
    if isinstance(e, Builtin):
        return builtins[e.name](order)
    if isinstance(e, Neg):
        return -_eval(e.arg, order, builtins)
    if isinstance(e, Sqrt):
        return fps.sqrt(_eval(e.arg, order, builtins))
    if isinstance(e, Pow):
        return fps.power(_eval(e.base, order, builtins), e.exp)
    a = _eval(e.left, order, builtins)
    b = _eval(e.right, order, builtins)
    if isinstance(e, Add):
        return fps.add(a, b)
    if isinstance(e, Sub):
        return fps.sub(a, b)
    if isinstance(e, Mul):
        return fps.mul(a, b)
    return _divide(a, b)


def _divide(num, den):
    v = den.valuation()
    if v >= den.order:
        raise DivisionByNonUnit("division by a series that vanishes to order %d" % den.order)
    if v and num.valuation() < v:
        raise DivisionByNonUnit("pole of order %d at x = 0" % (v - num.valuation()))
    if v:
        # both vanish at 0: cancel the common power of x
        num, den = num.divx(v), den.divx(v)
    return fps.div(num, den)


def evaluate(e, order=None, builtins=None):
    """Evaluate an expression (or expression string) to a series of exactly ``order`` terms.

    Cancelling common powers of ``x`` in a quotient loses known terms, so the
    tree is re-evaluated at a higher working order until ``order`` terms survive.
    """
    if order is None:
        order = fps.DEFAULT_ORDER
    if order < 1:
        raise ValueError("order must be at least 1")
    builtins = BUILTINS if builtins is None else builtins
    if isinstance(e, str):
        e = parse(e, builtins)
    working = order
    for _ in range(16):
        s = _eval(e, working, builtins)
        if s.order >= order:
            return s.truncate(order)
        working += order - s.order
    raise OrderExceeded("expression keeps losing order; cannot reach %d terms" % order)


eval = evaluate  # noqa: A001  public name used throughout the docs
