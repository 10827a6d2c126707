"""Materialized lower-triangular matrices with exact entries, and their serialization."""

import csv
import io
import json
from fractions import Fraction

from .errors import NotUnitTriangular, ShapeMismatch


def exact(v):
    """Normalize an exact number: integral Fractions become ints."""
    if isinstance(v, bool) or isinstance(v, float):
        raise TypeError("entries must be exact integers or Fractions, got %r" % (v,))
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    if isinstance(v, int):
        return v
    return exact(Fraction(v))


class Triangle:
    """A lower-triangular matrix with finitely many rows.

    Row ``n`` stores columns ``0..n``; everything above the diagonal is zero.
    Entries are ints, or Fractions when an exact computation is not integral.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        stored = []
        for n, row in enumerate(rows):
            row = [exact(v) for v in row]
            if len(row) > n + 1 and any(row[n + 1:]):
                raise ShapeMismatch("row %d has a nonzero entry above the diagonal" % n)
            row = row[:n + 1] + [0] * (n + 1 - len(row))
            stored.append(tuple(row))
        self._rows = tuple(stored)

    @classmethod
    def identity(cls, n):
        return cls([[0] * k + [1] for k in range(n)])

    @classmethod
    def from_function(cls, fn, n):
        return cls([[fn(i, k) for k in range(i + 1)] for i in range(n)])

    @property
    def nrows(self):
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def row(self, n):
        return self._rows[n]

    def column(self, k):
        """Entries of column ``k`` from the diagonal down."""
        return [self._rows[n][k] for n in range(k, self.nrows)]

    def __getitem__(self, idx):
        n, k = idx
        if n < 0 or k < 0 or n >= self.nrows:
            raise IndexError("entry (%d, %d) outside a %d-row triangle" % (n, k, self.nrows))
        return self._rows[n][k] if k <= n else 0

    def truncate(self, n):
        if n > self.nrows:
            raise ShapeMismatch("cannot take %d rows of a %d-row triangle" % (n, self.nrows))
        return Triangle._wrap(self._rows[:n])

    @classmethod
    def _wrap(cls, rows):
        t = object.__new__(cls)
        t._rows = tuple(rows)
        return t

    def __eq__(self, other):
        if isinstance(other, Triangle):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return "Triangle(%r)" % ([list(r) for r in self._rows],)

    def __str__(self):
        return to_text(self)

    def tolist(self, square=False):
        if square:
            n = self.nrows
            return [list(r) + [0] * (n - len(r)) for r in self._rows]
        return [list(r) for r in self._rows]

    def is_integer(self):
        return all(isinstance(v, int) for r in self._rows for v in r)

    def has_unit_diagonal(self):
        return all(r[-1] == 1 for r in self._rows)

    def __matmul__(self, other):
        return matmul(self, other)


def matmul(a, b):
    """Exact product of two triangles with the same number of rows."""
    if a.nrows != b.nrows:
        raise ShapeMismatch("cannot multiply %d-row and %d-row triangles" % (a.nrows, b.nrows))
    out = []
    for n in range(a.nrows):
        ar = a.rows[n]
        out.append([exact(sum(ar[j] * b.rows[j][k] for j in range(k, n + 1)))
                    for k in range(n + 1)])
    return Triangle._wrap(tuple(map(tuple, out)))


def inverse(t):
    """Exact inverse by forward substitution.

    Integer unit-lower-triangular input gives an integer result.
    """
    n = t.nrows
    rows = t.rows
    for i in range(n):
        if rows[i][i] == 0:
            raise NotUnitTriangular("zero diagonal entry at row %d" % i)
    inv = []
    for i in range(n):
        d = rows[i][i]
        row = []
        for k in range(i + 1):
            if k == i:
                row.append(exact(Fraction(1) / d) if d != 1 else 1)
                continue
            s = sum(rows[i][j] * inv[j][k] for j in range(k, i))
            row.append(exact(-Fraction(s) / d) if d != 1 else -s)
        inv.append(tuple(row))
    return Triangle._wrap(tuple(inv))


# serialization --------------------------------------------------------------

def _cell(v):
    return str(v)


def _padded(rows, width=None):
    if width is None:
        width = max((len(r) for r in rows), default=0)
    return [list(r) + [0] * (width - len(r)) for r in rows]


def render_text(rows, width=None):
    """Right-aligned plain-text matrix, zeros filled in, like a printed display."""
    grid = [[_cell(v) for v in r] for r in _padded(rows, width)]
    if not grid:
        return ""
    widths = [max(len(r[j]) for r in grid) for j in range(len(grid[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in grid)


def render_csv(rows, width=None):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for r in _padded(rows, width):
        writer.writerow([_cell(v) for v in r])
    return buf.getvalue()


def render_json(rows):
    """Array of row arrays; numbers as strings so 64-bit consumers do not overflow."""
    return json.dumps([[_cell(v) for v in r] for r in rows])


def parse_json_rows(text):
    return [[exact(Fraction(v)) for v in r] for r in json.loads(text)]


def to_text(t):
    return render_text(t.rows)


def to_csv(t):
    return render_csv(t.rows)


def to_json(t):
    return render_json(t.rows)


def from_json(text):
    return Triangle(parse_json_rows(text))


def from_csv(text):
    rows = [[exact(Fraction(v)) for v in r] for r in csv.reader(io.StringIO(text)) if r]
    return Triangle(rows)


def render(t, fmt="text"):
    rows = t.rows if isinstance(t, Triangle) else t
    if fmt == "text":
        return render_text(rows)
    if fmt == "csv":
        return render_csv(rows)
    if fmt == "json":
        return render_json(rows)
    raise ValueError("unknown format %r" % fmt)
