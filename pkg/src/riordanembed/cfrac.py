"""
Stieltjes and Jacobi continued fractions for moment generating functions.

S-fraction::   1 / (1 - a_1 x / (1 - a_2 x / (1 - ...)))
J-fraction::   1 / (1 - b_0 x - c_1 x^2 / (1 - b_1 x - c_2 x^2 / (1 - ...)))

``SFraction.a`` stores ``a_1, a_2, ...``; ``JFraction.b`` stores
``b_0, b_1, ...`` and ``JFraction.c`` stores ``c_1, c_2, ...``.
"""

import re
from dataclasses import dataclass

from . import series as fps
from .prodmat import tridiagonal
from .sequences import EventuallyPeriodic
from .series import Series


@dataclass(frozen=True)
class SFraction:
    a: EventuallyPeriodic

    def __init__(self, a):
        object.__setattr__(self, "a", EventuallyPeriodic.coerce(a))

    @classmethod
    def periodic(cls, period, pre=()):
        return cls(EventuallyPeriodic(period, pre))

    def coefficient(self, n):
        """``a_n`` for ``n >= 1``."""
        return self.a[n - 1]

    @classmethod
    def parse(cls, text):
        """``"s: pre=[..] period=[2,3,5]"`` or just ``"2,3,5"``."""
        text = re.sub(r"^\s*s\s*:", "", text)
        return cls(EventuallyPeriodic.parse(text))

    def spec(self):
        return "s: " + self.a.spec()


@dataclass(frozen=True)
class JFraction:
    b: EventuallyPeriodic
    c: EventuallyPeriodic

    def __init__(self, b, c):
        object.__setattr__(self, "b", EventuallyPeriodic.coerce(b))
        object.__setattr__(self, "c", EventuallyPeriodic.coerce(c))

    def b_at(self, n):
        """``b_n`` for ``n >= 0``."""
        return self.b[n]

    def c_at(self, n):
        """``c_n`` for ``n >= 1``."""
        return self.c[n - 1]

    def same_as(self, other):
        return self.b.same_as(other.b) and self.c.same_as(other.c)

    @classmethod
    def parse(cls, text):
        """``"j: b=[2]/[8,5,7] c=[]/[6,10,15]"``; a bare list means a pure period."""
        m = re.fullmatch(r"\s*(?:j\s*:)?\s*b=(\S+)\s+c=(\S+)\s*", text)
        if not m:
            raise ValueError("cannot parse J-fraction %r" % text)
        return cls(EventuallyPeriodic.parse(m.group(1)), EventuallyPeriodic.parse(m.group(2)))

    def spec(self):
        def part(s):
            return "[%s]/[%s]" % (",".join(map(str, s.pre)), ",".join(map(str, s.period)))
        return "j: b=%s c=%s" % (part(self.b), part(self.c))


def s_to_series(s, order=None, depth=None):
    """Evaluate the S-fraction truncated at ``depth`` levels (default ``order``).

    Each level contributes a factor ``x``, so ``depth >= order - 1`` already
    fixes the first ``order`` coefficients.
    """
    order = fps.DEFAULT_ORDER if order is None else order
    depth = order if depth is None else depth
    x = Series.x(order)
    tail = Series.const(1, order)
    for n in range(depth, 0, -1):
        tail = fps.inverse(1 - fps.scale(fps.mul(x, tail), s.coefficient(n)))
    return tail


def j_to_series(j, order=None, depth=None):
    """Evaluate the J-fraction truncated at ``depth`` levels (default ``order``)."""
    order = fps.DEFAULT_ORDER if order is None else order
    depth = order if depth is None else depth
    x = Series.x(order)
    x2 = Series.monomial(2, 1, order)
    tail = Series.const(1, order)
    for n in range(depth - 1, -1, -1):
        den = 1 - fps.scale(x, j.b_at(n)) - fps.scale(fps.mul(x2, tail), j.c_at(n + 1))
        tail = fps.inverse(den)
    return tail


def _from_rule(b_rule, c_rule, a):
    # shifting n by len(period) moves every referenced a-index by a whole
    # number of periods, so that length is always a valid output period;
    # the preperiod ends once those indices pass a.pre
    span = len(a.period)
    start = len(a.pre) // 2 + 2
    b = EventuallyPeriodic.from_function(b_rule, start, span)
    c = EventuallyPeriodic.from_function(c_rule, start, span)
    return JFraction(b, c)


def contract_even(s):
    """J-fraction with the same power series as ``s``.

    ``b_0 = a_1``, ``b_n = a_{2n} + a_{2n+1}``, ``c_n = a_{2n-1} a_{2n}``.
    """
    a = s.coefficient

    def b(n):
        return a(1) if n == 0 else a(2 * n) + a(2 * n + 1)

    def c(i):  # stored index i is c_{i+1}
        n = i + 1
        return a(2 * n - 1) * a(2 * n)

    return _from_rule(b, c, s.a)


def contract_odd(s):
    """The J-fraction left after taking out the first level of ``s``.

    ``b_n = a_{2n+1} + a_{2n+2}``, ``c_n = a_{2n} a_{2n+1}``; its series is
    ``(S(x) - 1) / (a_1 x)`` when ``a_1 != 0``.
    """
    a = s.coefficient

    def b(n):
        return a(2 * n + 1) + a(2 * n + 2)

    def c(i):
        n = i + 1
        return a(2 * n) * a(2 * n + 1)

    return _from_rule(b, c, s.a)


def jfraction_to_tridiagonal(j, size):
    """Tridiagonal production matrix: ``b_i`` on the diagonal, ``c_{i+1}`` below it, 1 above."""
    if size < 1:
        raise ValueError("size must be at least 1")
    return tridiagonal(j.b, j.c, size)
