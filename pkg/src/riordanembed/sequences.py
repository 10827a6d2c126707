"""Eventually-periodic sequences: a finite preperiod followed by a repeated period."""

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm


def _exact(v):
    if isinstance(v, float):
        raise TypeError("floating point entries are not allowed: %r" % v)
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


@dataclass(frozen=True)
class EventuallyPeriodic:
    """``pre[0], pre[1], ..., period[0], period[1], ..., period[0], ...``

    Indexing is 0-based into the stored sequence; callers decide whether
    element 0 means ``a_0`` or ``a_1``.
    """

    pre: tuple
    period: tuple

    def __init__(self, period, pre=()):
        period = tuple(_exact(v) for v in period)
        if not period:
            raise ValueError("period must be nonempty")
        object.__setattr__(self, "pre", tuple(_exact(v) for v in pre))
        object.__setattr__(self, "period", period)

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def coerce(cls, value):
        """Accept an EventuallyPeriodic, a scalar (constant) or a list (pure period)."""
        if isinstance(value, cls):
            return value
        if isinstance(value, (int, Fraction)):
            return cls([value])
        return cls(value)

    def __getitem__(self, i):
        if i < 0:
            raise IndexError("negative index")
        if i < len(self.pre):
            return self.pre[i]
        return self.period[(i - len(self.pre)) % len(self.period)]

    def take(self, n):
        return [self[i] for i in range(n)]

    def shift(self, k=1):
        """Drop the first ``k`` elements."""
        if k <= len(self.pre):
            return EventuallyPeriodic(self.period, self.pre[k:])
        r = (k - len(self.pre)) % len(self.period)
        return EventuallyPeriodic(self.period[r:] + self.period[:r])

    def canonical(self):
        """Shortest period and preperiod describing the same sequence."""
        period = self.period
        for d in range(1, len(period) + 1):
            if len(period) % d == 0 and period == period[:d] * (len(period) // d):
                period = period[:d]
                break
        pre = list(self.pre)
        while pre and pre[-1] == period[-1]:
            pre.pop()
            period = period[-1:] + period[:-1]
        return EventuallyPeriodic(period, pre)

    def same_as(self, other):
        other = EventuallyPeriodic.coerce(other)
        n = max(len(self.pre), len(other.pre)) + lcm(len(self.period), len(other.period))
        return self.take(n) == other.take(n)

    @classmethod
    def from_function(cls, fn, pre_len, period_len):
        """Tabulate ``fn(i)`` assuming it is periodic from ``pre_len`` with period ``period_len``."""
        pre = [fn(i) for i in range(pre_len)]
        period = [fn(pre_len + i) for i in range(period_len)]
        return cls(period, pre).canonical()

    def spec(self):
        return "pre=[%s] period=[%s]" % (
            ",".join(str(v) for v in self.pre), ",".join(str(v) for v in self.period))

    @classmethod
    def parse(cls, text):
        """Parse ``"pre=[1] period=[2,3]"``, ``"[..]/[..]"`` or a bare list ``"2,3"``."""
        text = text.strip()
        m = re.fullmatch(r"(?:pre=)?\[([^\]]*)\]\s*(?:/|\s)\s*(?:period=)?\[([^\]]*)\]", text)
        if m:
            return cls(_parse_list(m.group(2)), _parse_list(m.group(1)))
        m = re.fullmatch(r"(?:period=)?\[?([^\]]*)\]?", text)
        if m:
            return cls(_parse_list(m.group(1)))
        raise ValueError("cannot parse sequence %r" % text)

    def __repr__(self):
        if self.pre:
            return "EventuallyPeriodic(%r, pre=%r)" % (list(self.period), list(self.pre))
        return "EventuallyPeriodic(%r)" % (list(self.period),)


def _parse_list(body):
    body = body.strip()
    if not body:
        return []
    return [Fraction(tok.strip()) for tok in body.split(",")]
