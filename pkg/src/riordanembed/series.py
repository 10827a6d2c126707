"""
Truncated formal power series with exact rational coefficients.

A :class:`Series` stores the coefficients of ``x^0 .. x^(order-1)``; every
coefficient at or beyond ``order`` is *unknown*, not zero.  Arithmetic keeps
track of how much of the result is still determined by the inputs.
"""

from fractions import Fraction
from math import comb, isqrt, lcm

from .errors import (
    CompositionByUnit,
    DivisionByNonUnit,
    NoSquareRoot,
    NotReversible,
    OrderExceeded,
)

DEFAULT_ORDER = 32

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed: %r" % value)
    return Fraction(value)


class Series:
    """Immutable truncated power series ``sum c_i x^i + O(x^order)``.

    ``Series([1, -1])`` is the polynomial ``1 - x`` known to the default
    order (padding with zeros is exact for polynomials).  Pass ``order`` to
    choose the truncation explicitly; coefficients past ``order`` are dropped.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=(), order=None):
        if order is None:
            order = DEFAULT_ORDER
        if order < 0:
            raise ValueError("order must be non-negative")
        c = [_frac(v) for v in list(coeffs)[:order]]
        c.extend([_ZERO] * (order - len(c)))
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs):
        s = object.__new__(cls)
        s._c = tuple(coeffs)
        return s

    # constructors ---------------------------------------------------------

    @classmethod
    def const(cls, value, order=None):
        return cls([value], order)

    @classmethod
    def x(cls, order=None):
        return cls([0, 1], order)

    @classmethod
    def zero(cls, order=None):
        return cls((), order)

    @classmethod
    def monomial(cls, n, value=1, order=None):
        return cls([0] * n + [value], order)

    # access ---------------------------------------------------------------

    @property
    def order(self):
        return len(self._c)

    @property
    def coeffs(self):
        return self._c

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return self._c[idx]
        return coeff(self, idx)

    def __iter__(self):
        return iter(self._c)

    def truncate(self, order):
        """Drop everything from ``x^order`` on."""
        if order > self.order:
            raise OrderExceeded("cannot extend order %d to %d" % (self.order, order))
        return Series._raw(self._c[:order])

    def valuation(self):
        """Index of the first nonzero stored coefficient, or ``order`` if none."""
        for i, v in enumerate(self._c):
            if v:
                return i
        return self.order

    def is_zero(self):
        return not any(self._c)

    def agrees(self, other, n=None):
        """True iff both series agree on their common known coefficients.

        With ``n`` given, compare exactly the first ``n`` coefficients (both
        series must know that many).
        """
        other = _promote(other, self.order)
        if n is None:
            n = min(self.order, other.order)
        elif n > min(self.order, other.order):
            raise OrderExceeded("cannot compare %d coefficients of series of orders %d and %d"
                                % (n, self.order, other.order))
        return self._c[:n] == other._c[:n]

    def as_integers(self):
        """Coefficients as Python ints; raises ValueError on a fraction."""
        out = []
        for i, v in enumerate(self._c):
            if v.denominator != 1:
                raise ValueError("coefficient %d is not an integer: %s" % (i, v))
            out.append(v.numerator)
        return out

    # shifts ---------------------------------------------------------------

    def mulx(self, n=1):
        """Multiply by ``x^n``; exact, so the order grows by ``n``."""
        return Series._raw((_ZERO,) * n + self._c)

    def divx(self, n=1):
        """Divide by ``x^n``; the order shrinks by ``n``."""
        if n > self.order:
            raise OrderExceeded("cannot divide a series of order %d by x^%d" % (self.order, n))
        if any(self._c[:n]):
            raise DivisionByNonUnit("series is not divisible by x^%d" % n)
        return Series._raw(self._c[n:])

    # operators ------------------------------------------------------------

    def __add__(self, other):
        return add(self, _promote(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _promote(other, self.order))

    def __rsub__(self, other):
        return sub(_promote(other, self.order), self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return div(self, other)
        return scale(self, _ONE / _frac(other))

    def __rtruediv__(self, other):
        return div(_promote(other, self.order), self)

    def __pow__(self, n):
        return power(self, n)

    def __call__(self, inner):
        return compose(self, inner)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        shown = ", ".join(_fmt(v) for v in self._c[:10])
        more = ", ..." if self.order > 10 else ""
        return "Series([%s%s], order=%d)" % (shown, more, self.order)

    def __str__(self):
        terms = []
        for i, v in enumerate(self._c):
            if not v:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else "x^%d" % i)
            if i and v == 1:
                t = mono
            elif i and v == -1:
                t = "-" + mono
            else:
                t = _fmt(v) + ("*" + mono if mono else "")
            terms.append(t)
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return "%s + O(x^%d)" % (body, self.order)


def _fmt(v):
    return str(v.numerator) if v.denominator == 1 else str(v)


def _promote(value, order):
    if isinstance(value, Series):
        return value
    return Series.const(value, order)


# ring operations -------------------------------------------------------------

def add(a, b):
    n = min(a.order, b.order)
    return Series._raw(a._c[i] + b._c[i] for i in range(n))


def sub(a, b):
    n = min(a.order, b.order)
    return Series._raw(a._c[i] - b._c[i] for i in range(n))


def neg(a):
    return Series._raw(-v for v in a._c)


def scale(a, r):
    r = _frac(r)
    return Series._raw(r * v for v in a._c)


def _scaled(c):
    """Integer numerators over a common denominator: ``c[i] == num[i] / den``."""
    den = lcm(*(v.denominator for v in c)) if c else 1
    return [v.numerator * (den // v.denominator) for v in c], den


def mul(a, b):
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order)
    # work on integer numerators; Fraction arithmetic in the inner loop
    # would normalize every partial sum
    ac, da = _scaled(a._c[:n])
    bc, db = _scaled(b._c[:n])
    out = [0] * n
    for i in range(n):
        ai = ac[i]
        if not ai:
            continue
        for j in range(n - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    den = da * db
    return Series._raw([Fraction(v, den) if v else _ZERO for v in out])


def power(a, n):
    if not isinstance(n, int) or n < 0:
        raise ValueError("exponent must be a non-negative integer")
    result = Series.const(1, a.order)
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def div(a, b):
    """Quotient ``a / b``; requires ``b(0) != 0``."""
    n = min(a.order, b.order)
    if b.order == 0 or not b._c[0]:
        raise DivisionByNonUnit("divisor has zero constant term")
    b0 = b._c[0]
    bc = b._c
    q = []
    for k in range(n):
        s = a._c[k]
        for i in range(1, k + 1):
            bi = bc[i]
            if bi:
                s -= bi * q[k - i]
        q.append(s / b0)
    return Series._raw(q)


def inverse(a):
    """Multiplicative inverse ``1 / a``."""
    return div(Series.const(1, a.order), a)


def compose(a, b):
    """``a(b(x))``; requires ``b(0) == 0``."""
    if b.order == 0 or b._c[0]:
        raise CompositionByUnit("inner series must have zero constant term")
    n = min(a.order, b.order)
    b = b.truncate(n)
    # Horner from the top coefficient down
    result = Series.const(a._c[n - 1], n) if n else Series.zero(0)
    for i in range(n - 2, -1, -1):
        result = mul(result, b)
        c = list(result._c)
        c[0] += a._c[i]
        result = Series._raw(c)
    return result


def reversion(f):
    """Compositional inverse of ``f`` (``f(0) = 0``, ``f'(0) != 0``).

    Lagrange inversion: ``[x^n] rev(f) = [x^(n-1)] (x/f)^n / n``.  The result
    has the same order as ``f``.
    """
    if f.order < 2:
        raise NotReversible("need at least the linear coefficient")
    if f._c[0]:
        raise NotReversible("f(0) must be zero")
    if not f._c[1]:
        raise NotReversible("f'(0) must be nonzero")
    n = f.order
    h = inverse(f.divx())  # x/f, order n-1
    out = [_ZERO] * n
    p = h
    for k in range(1, n):
        out[k] = p._c[k - 1] / k
        if k < n - 1:
            p = mul(p, h)
    return Series._raw(out)


def _rational_sqrt(q):
    if q <= 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def sqrt(a):
    """Square root with positive constant term.

    The constant term must be the square of a nonzero rational.
    """
    if a.order == 0:
        return a
    s0 = _rational_sqrt(a._c[0])
    if s0 is None:
        raise NoSquareRoot("constant term %s is not the square of a nonzero rational" % a._c[0])
    s = [s0]
    two_s0 = 2 * s0
    for k in range(1, a.order):
        acc = a._c[k]
        for i in range(1, k):
            acc -= s[i] * s[k - i]
        s.append(acc / two_s0)
    return Series._raw(s)


def is_integer_series(a):
    return all(v.denominator == 1 for v in a._c)


def coeff(a, n):
    """The ``[x^n]`` extraction operator."""
    if n < 0:
        raise IndexError("negative coefficient index %d" % n)
    if n >= a.order:
        raise OrderExceeded("coefficient x^%d is beyond order %d" % (n, a.order))
    return a._c[n]


def catalan(order=None):
    """``c(x) = (1 - sqrt(1 - 4x)) / (2x)``."""
    if order is None:
        order = DEFAULT_ORDER
    return Series._raw(Fraction(comb(2 * n, n), n + 1) for n in range(order))
