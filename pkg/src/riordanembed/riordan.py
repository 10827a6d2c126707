"""Ordinary Riordan arrays ``(g, f)`` with entries ``T[n, k] = [x^n] g f^k``."""

from dataclasses import dataclass

from . import series as fps
from .errors import InvariantViolation, OrderExceeded
from .series import Series
from .triangle import Triangle


@dataclass(frozen=True)
class RiordanArray:
    """The pair ``(g, f)`` with ``g = 1 + ...`` and ``f = x + ...``.

    Construction rejects anything outside this subgroup instead of
    normalizing it.
    """

    g: Series
    f: Series

    def __post_init__(self):
        g, f = self.g, self.f
        if g.order < 1 or f.order < 2:
            raise InvariantViolation("need g to order >= 1 and f to order >= 2")
        if g.coeffs[0] != 1:
            raise InvariantViolation("g(0) must be 1, got %s" % g.coeffs[0])
        if f.coeffs[0] != 0:
            raise InvariantViolation("f(0) must be 0, got %s" % f.coeffs[0])
        if f.coeffs[1] != 1:
            raise InvariantViolation("f'(0) must be 1, got %s" % f.coeffs[1])

    @classmethod
    def from_strings(cls, g, f, order=None):
        from .gfparse import evaluate
        return cls(evaluate(g, order), evaluate(f, order))

    @property
    def order(self):
        return min(self.g.order, self.f.order)

    def truncate(self, order):
        return RiordanArray(self.g.truncate(order), self.f.truncate(order))

    def agrees(self, other, n=None):
        return self.g.agrees(other.g, n) and self.f.agrees(other.f, n)

    def __matmul__(self, other):
        return multiply(self, other)

    def __repr__(self):
        return "RiordanArray(g=%r, f=%r)" % (self.g, self.f)


def identity(order=None):
    """The group identity ``(1, x)``."""
    return RiordanArray(Series.const(1, order), Series.x(order))


def column_series(R, k):
    """Generating function ``g f^k`` of column ``k``."""
    return fps.mul(R.g, fps.power(R.f, k))


def _as_int(v, where):
    if v.denominator != 1:
        raise InvariantViolation("non-integer entry %s at %s" % (v, where))
    return v.numerator


def entry(R, n, k):
    if n < 0 or k < 0:
        raise IndexError("negative index")
    if n >= R.order:
        raise OrderExceeded("entry (%d, %d) needs order > %d, have %d" % (n, k, n, R.order))
    if k > n:
        return 0
    return _as_int(column_series(R, k).coeffs[n], (n, k))


def entry_exact(R, n, k):
    """Like :func:`entry` but returns the exact rational without an integrality check."""
    if n >= R.order:
        raise OrderExceeded("entry (%d, %d) needs order > %d, have %d" % (n, k, n, R.order))
    if k > n:
        return 0
    return column_series(R, k).coeffs[n]


def triangle(R, rows, integral=True):
    """The first ``rows`` rows of ``R`` as a :class:`Triangle`.

    Entries are asserted integral unless ``integral=False``.
    """
    if rows > R.order:
        raise OrderExceeded("%d rows need order >= %d, have %d" % (rows, rows, R.order))
    g, f = R.g.truncate(rows), R.f.truncate(rows)
    cols = []
    col = g
    for k in range(rows):
        cols.append(col.coeffs)
        if k < rows - 1:
            col = fps.mul(col, f)
    conv = _as_int if integral else (lambda v, where: v)
    return Triangle([[conv(cols[k][n], (n, k)) for k in range(n + 1)] for n in range(rows)])


def multiply(A, B):
    """Group law ``(g, f) . (h, l) = (g * h(f), l(f))``."""
    g, f = A.g, A.f
    h, l = B.g, B.f
    return RiordanArray(fps.mul(g, fps.compose(h, f)), fps.compose(l, f))


def inverse(R):
    """``(1 / g(fbar), fbar)`` where ``fbar`` is the compositional inverse of ``f``."""
    fbar = fps.reversion(R.f)
    return RiordanArray(fps.inverse(fps.compose(R.g.truncate(fbar.order), fbar)), fbar)


def fit_columns(t):
    """The unique Riordan array whose first two columns match those of ``t``.

    ``g`` is the generating function of column 0 and ``f = (column 1) / g``.
    Comparing ``triangle(fit_columns(t), len(t))`` with ``t`` decides whether
    ``t`` can be a Riordan array at all (use ``integral=False``: the fitted
    ``f`` need not have integer coefficients).
    """
    n = t.nrows
    g = Series([t[i, 0] for i in range(n)], n)
    col1 = Series([t[i, 1] if i >= 1 else 0 for i in range(n)], n)
    return RiordanArray(g, fps.div(col1, g))
