"""
Monic polynomial families from three-term recurrences and their moment matrices.

    P_0 = 1,  P_1 = x + p1_constant,
    P_n = (x - b_{n-1}) P_{n-1} - c_{n-1} P_{n-2}      (n >= 2)

The coefficient array has row ``n`` equal to the coefficients of ``P_n``
(ascending powers); the moment matrix is its inverse.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .cfrac import j_to_series
from .sequences import EventuallyPeriodic
from .triangle import Triangle, exact, inverse


@dataclass(frozen=True)
class Recurrence:
    """``b`` stores ``b_0, b_1, ...`` and ``c`` stores ``c_1, c_2, ...``.

    ``p1_constant`` defaults to ``-b_0`` (the orthogonal initial condition);
    any other value gives the modified families with ``P_1 = x + p1_constant``.
    """

    b: EventuallyPeriodic
    c: EventuallyPeriodic
    p1_constant: object = None

    def __init__(self, b, c, p1_constant=None):
        b = EventuallyPeriodic.coerce(b)
        c = EventuallyPeriodic.coerce(c)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "p1_constant", exact(-b[0] if p1_constant is None else p1_constant))

    @classmethod
    def parse(cls, text):
        """``"rec b=[7] c=[12] p1=-3"``; ``p1`` is optional."""
        m = re.fullmatch(r"\s*(?:rec\s+)?b=(\S+)\s+c=(\S+)(?:\s+p1=(\S+))?\s*", text)
        if not m:
            raise ValueError("cannot parse recurrence %r" % text)
        p1 = Fraction(m.group(3)) if m.group(3) else None
        return cls(EventuallyPeriodic.parse(m.group(1)), EventuallyPeriodic.parse(m.group(2)), p1)

    def b_at(self, n):
        return self.b[n]

    def c_at(self, n):
        """``c_n`` for ``n >= 1``."""
        return self.c[n - 1]

    @property
    def is_jacobi(self):
        """True when ``P_1 = x - b_0``."""
        return self.p1_constant == -self.b[0]

    def jacobi_b(self):
        """Diagonal sequence of the equivalent Jacobi data: ``b_0`` replaced by ``-p1_constant``."""
        rest = self.b.shift(1)
        return EventuallyPeriodic(rest.period, (-self.p1_constant,) + rest.pre)


def polynomials(rec, count):
    """Coefficient array: row ``n`` holds ``P_n(x)`` in ascending powers."""
    if count < 1:
        raise ValueError("count must be at least 1")
    polys = [[1]]
    if count > 1:
        polys.append([rec.p1_constant, 1])
    for n in range(2, count):
        prev, prev2 = polys[n - 1], polys[n - 2]
        b, c = rec.b_at(n - 1), rec.c_at(n - 1)
        row = [0] + list(prev)                       # x P_{n-1}
        for i, v in enumerate(prev):
            row[i] -= b * v
        for i, v in enumerate(prev2):
            row[i] -= c * v
        polys.append([exact(v) for v in row])
    return Triangle(polys)


def moment_matrix(rec, rows):
    """Exact inverse of the coefficient array; column 0 is the moment sequence."""
    return inverse(polynomials(rec, rows))


def moments(rec, count):
    return moment_matrix(rec, count).column(0)


@dataclass(frozen=True)
class InterleavedFamily:
    """``R_n = Q_{n/2}(x) x^{n/2}`` for even ``n`` and ``P_{(n+1)/2}(x) x^{(n-1)/2}`` for odd ``n``."""

    p: Recurrence
    q: Recurrence

    def shares_tail(self, terms=16):
        """Do ``P`` and ``Q`` use the same ``b_n, c_n`` for ``n >= 1``?"""
        return (self.p.b.take(terms)[1:] == self.q.b.take(terms)[1:]
                and self.p.c.take(terms) == self.q.c.take(terms))


def interleaved_polynomials(fam, rows):
    """Coefficient array of ``R_0, ..., R_{rows-1}``."""
    P = polynomials(fam.p, rows // 2 + 2)
    Q = polynomials(fam.q, rows // 2 + 2)
    out = []
    for n in range(rows):
        if n % 2 == 0:
            shift, poly = n // 2, Q.row(n // 2)
        else:
            shift, poly = n // 2, P.row((n + 1) // 2)
        out.append([0] * shift + list(poly))
    return Triangle(out)


def interleaved_moment_matrix(fam, rows):
    """Inverse of the coefficient array of the interleaved family ``R_n``."""
    if rows < 1:
        raise ValueError("rows must be at least 1")
    return inverse(interleaved_polynomials(fam, rows))


def check_moment_cf(rec, j, order):
    """Does column 0 of ``moment_matrix(rec)`` match the coefficients of ``j``?"""
    mom = moment_matrix(rec, order).column(0)
    return [Fraction(v) for v in mom] == list(j_to_series(j, order).coeffs)
