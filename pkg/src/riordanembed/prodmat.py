"""
Production matrices: ``M[n+1, :] = M[n, :] . P`` with ``M[0, :] = (1, 0, 0, ...)``.

A production matrix generating a lower-triangular matrix is lower
Hessenberg, so row ``i`` is stored for columns ``0..i+1``.
"""

from dataclasses import dataclass

from .errors import NotUnitTriangular, ShapeMismatch, SizeExceeded
from .sequences import EventuallyPeriodic
from .triangle import Triangle, exact, inverse, render


class ProductionMatrix:
    """Lower-Hessenberg exact matrix with ``size`` stored rows."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        stored = []
        for i, row in enumerate(rows):
            row = [exact(v) for v in row]
            if len(row) > i + 2 and any(row[i + 2:]):
                raise ShapeMismatch("row %d has entries right of the superdiagonal" % i)
            row = row[:i + 2] + [0] * (i + 2 - len(row))
            stored.append(tuple(row))
        self._rows = tuple(stored)

    @classmethod
    def from_function(cls, fn, size):
        return cls([[fn(i, j) for j in range(i + 2)] for i in range(size)])

    @classmethod
    def shift(cls, size):
        """Only a unit superdiagonal: generates the identity matrix."""
        return cls.from_function(lambda i, j: int(j == i + 1), size)

    @property
    def size(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, idx):
        i, j = idx
        if i < 0 or j < 0 or i >= self.size:
            raise IndexError("entry (%d, %d) outside a size-%d production matrix" % (i, j, self.size))
        return self._rows[i][j] if j <= i + 1 else 0

    def column(self, j):
        """Stored entries of column ``j`` from row ``max(j-1, 0)`` down."""
        return [self._rows[i][j] for i in range(max(j - 1, 0), self.size)]

    def truncate(self, size):
        if size > self.size:
            raise SizeExceeded("cannot take %d rows of a size-%d matrix" % (size, self.size))
        return ProductionMatrix(self._rows[:size])

    def tolist(self):
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        if isinstance(other, ProductionMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return "ProductionMatrix(%r)" % (self.tolist(),)

    def __str__(self):
        return render(self._rows)


def generate(P, rows):
    """The first ``rows`` rows of the matrix produced by ``P``."""
    if rows < 1:
        return Triangle([])
    if P.size < rows - 1:
        raise SizeExceeded("%d rows need a production matrix of size >= %d, have %d"
                           % (rows, rows - 1, P.size))
    out = [(1,)]
    for n in range(rows - 1):
        cur = out[-1]
        nxt = [0] * (n + 2)
        for j, v in enumerate(cur):
            if v:
                for k, p in enumerate(P.rows[j]):
                    if p:
                        nxt[k] += v * p
        out.append(tuple(exact(v) for v in nxt))
    return Triangle(out)


def production_of(M):
    """The production matrix of a unit lower-triangular ``M`` with ``r`` rows.

    Solves ``M[1:, :] = M[:r-1, :r-1] . P`` by forward substitution, giving
    a size ``r-1`` matrix with ``generate(P, r) == M``.
    """
    r = M.nrows
    if not M.has_unit_diagonal():
        bad = next(n for n in range(r) if M[n, n] != 1)
        raise NotUnitTriangular("diagonal entry at row %d is %s, not 1" % (bad, M[bad, bad]))
    if r < 2:
        return ProductionMatrix([])
    top_inv = inverse(M.truncate(r - 1))
    rows = []
    for i in range(r - 1):
        inv_row = top_inv.rows[i]
        rows.append([exact(sum(inv_row[t] * M[t + 1, j] for t in range(i + 1) if j <= t + 1))
                     for j in range(i + 2)])
    return ProductionMatrix(rows)


def riordan_violation(P):
    """First ``(row, column)`` where column ``j >= 2`` is not column 1 shifted down ``j-1`` places."""
    for j in range(2, P.size + 1):
        for i in range(j - 1, P.size):
            if P[i, j] != P[i - (j - 1), 1]:
                return (i, j)
    return None


def is_riordan_production(P):
    """Do the columns after the first all repeat column 1, each shifted one further down?

    Only the stored block is inspected.
    """
    return riordan_violation(P) is None


def tridiagonal(diag, sub, size):
    """``P[i,i] = diag[i]``, ``P[i,i+1] = 1``, ``P[i+1,i] = sub[i]``."""
    diag = EventuallyPeriodic.coerce(diag)
    sub = EventuallyPeriodic.coerce(sub)

    def fn(i, j):
        if j == i + 1:
            return 1
        if j == i:
            return diag[i]
        if j == i - 1:
            return sub[j]
        return 0

    return ProductionMatrix.from_function(fn, size)


# the bidiagonal-inverse construction ----------------------------------------------

@dataclass(frozen=True)
class BidiagonalSpec:
    """Subdiagonal magnitudes ``a_0, a_1, ...`` of ``L`` (``L[i+1, i] = -a_i``)."""

    a: EventuallyPeriodic

    def __init__(self, a):
        a = EventuallyPeriodic.coerce(a)
        if any(v == 0 for v in a.pre + a.period):
            raise ValueError("bidiagonal entries must be nonzero")
        object.__setattr__(self, "a", a)

    @classmethod
    def periodic(cls, period, pre=()):
        return cls(EventuallyPeriodic(period, pre))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith("bidiag"):
            text = text[len("bidiag"):]
        return cls(EventuallyPeriodic.parse(text))

    def spec(self):
        return "bidiag " + self.a.spec()


def bidiagonal_matrix(spec, rows):
    return Triangle([[0] * (n - 1) + ([-spec.a[n - 1]] if n else []) + [1] for n in range(rows)])


def bidiagonal_construction(spec, rows):
    """Invert the unit bidiagonal ``L``, drop its first row, use that as a production matrix.

    Returns ``(P, generate(P, rows))``.
    """
    if rows < 1:
        raise ValueError("rows must be at least 1")
    L = bidiagonal_matrix(spec, rows)
    Linv = inverse(L)
    P = ProductionMatrix(Linv.rows[1:])
    return P, generate(P, rows)
