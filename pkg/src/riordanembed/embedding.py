"""
The two Riordan arrays embedded in every Riordan array.

For ``R = (g, f)`` the even-indexed columns of ``R``, raised to the diagonal,
form ``A = (g, f^2/x)`` and the odd-indexed ones form ``B = (g f/x, f^2/x)``:

    A[n, k] = R[n+k, 2k]        B[n, k] = R[n+k+1, 2k+1]
"""

from dataclasses import dataclass
from typing import Optional

from . import series as fps
from .errors import NotEmbeddable, NoSquareRoot, OrderExceeded, ShapeMismatch
from .riordan import RiordanArray, multiply, triangle
from .series import Series
from .triangle import Triangle


@dataclass(frozen=True)
class EmbeddingPair:
    A: RiordanArray
    B: RiordanArray
    parent_g: Series
    parent_f: Series

    @property
    def parent(self):
        return RiordanArray(self.parent_g, self.parent_f)

    def __iter__(self):
        return iter((self.A, self.B))


def decompose(R):
    """Split ``R`` into ``A = (g, f^2/x)`` and ``B = (g f/x, f^2/x)``.

    ``A`` keeps the order of ``R``; ``B`` loses one term to the division by x.
    """
    g, f = R.g, R.f
    h = f.divx()                   # f/x
    v = fps.mul(h, h).mulx()       # f^2/x, same order as f
    return EmbeddingPair(RiordanArray(g, v), RiordanArray(fps.mul(g, h), v), g, f)


def shift_factor(R):
    """The array ``(f/x, x)`` with ``B = (f/x, x) . A``."""
    h = R.f.divx()
    return RiordanArray(h, Series.x(h.order))


def check_b_factorization(R):
    """``B == (f/x, x) . A`` on every known coefficient."""
    A, B = decompose(R)
    return multiply(shift_factor(R), A).agrees(B)


def entry_identities(R, rows):
    """Check ``A[n,k] == R[n+k,2k]`` and ``B[n,k] == R[n+k+1,2k+1]`` for ``n < rows``.

    Both sides are computed from their own series, never from each other.
    """
    need = 2 * rows
    if R.order < need:
        raise OrderExceeded("%d rows of the identities need order >= %d, have %d"
                            % (rows, need, R.order))
    A, B = decompose(R)
    T = triangle(R, need, integral=False)
    TA = triangle(A, rows, integral=False)
    TB = triangle(B, rows, integral=False)
    for n in range(rows):
        for k in range(n + 1):
            if TA[n, k] != T[n + k, 2 * k]:
                return False
            if TB[n, k] != T[n + k + 1, 2 * k + 1]:
                return False
    return True


def interleave(A, B):
    """Rebuild a triangle from its even-column part ``A`` and odd-column part ``B``.

    Column ``0`` of the result is column ``0`` of ``A``, so ``r`` rows of ``A``
    and ``B`` determine exactly ``r`` rows of the result.
    """
    r = A.nrows
    if B.nrows != r:
        raise ShapeMismatch("A has %d rows but B has %d" % (r, B.nrows))
    rows = []
    for m in range(r):
        row = []
        for j in range(m + 1):
            if j % 2 == 0:
                k = j // 2
                row.append(A[m - k, k])
            else:
                k = (j - 1) // 2
                row.append(B[m - k - 1, k])
        rows.append(row)
    return Triangle(rows)


def split(T):
    """Triangle-level inverse of :func:`interleave`.

    Returns the largest ``A`` and ``B`` fully determined by ``T``:
    ``(len(T)+1)//2`` and ``len(T)//2`` rows.
    """
    r = T.nrows
    ra, rb = (r + 1) // 2, r // 2
    A = Triangle([[T[n + k, 2 * k] for k in range(n + 1)] for n in range(ra)])
    B = Triangle([[T[n + k + 1, 2 * k + 1] for k in range(n + 1)] for n in range(rb)])
    return A, B


def embed(A):
    """Find ``R = (u, x sqrt(v/x))`` whose canonical ``A`` part is ``A = (u, v)``.

    Raises :class:`NotEmbeddable` when ``sqrt(v/x)`` is not an integer series
    on the stored order.
    """
    u, v = A.g, A.f
    w = v.divx()
    try:
        s = fps.sqrt(w)
    except NoSquareRoot as exc:
        raise NotEmbeddable("v/x has no power-series square root: %s" % exc,
                            order_checked=w.order) from exc
    for i, c in enumerate(s.coeffs):
        if c.denominator != 1:
            raise NotEmbeddable(
                "sqrt(v/x) is not an integer series: coefficient of x^%d is %s "
                "(checked to order %d)" % (i, c, s.order),
                index=i, coefficient=c, order_checked=s.order)
    return RiordanArray(u, s.mulx())


@dataclass(frozen=True)
class CascadeNode:
    """One node of the repeated decomposition; ``path`` is e.g. ``"AB"``."""

    array: RiordanArray
    path: str = ""
    A: Optional["CascadeNode"] = None
    B: Optional["CascadeNode"] = None

    def find(self, path):
        node = self
        for step in path:
            node = node.A if step == "A" else node.B
            if node is None:
                raise KeyError(path)
        return node

    def walk(self):
        yield self
        for child in (self.A, self.B):
            if child is not None:
                yield from child.walk()

    @property
    def depth(self):
        kids = [c.depth for c in (self.A, self.B) if c is not None]
        return 1 + max(kids) if kids else 0


def cascade(R, depth, min_order=2):
    """Full binary tree of repeated decompositions, ``depth`` levels deep.

    Each level costs at most one order (the ``B`` side); a node whose children
    would drop below ``min_order`` raises :class:`OrderExceeded`.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    return _cascade(R, depth, min_order, "")


def _cascade(R, depth, min_order, path):
    if depth == 0:
        return CascadeNode(R, path)
    if R.order - 1 < min_order:
        raise OrderExceeded("cascade at %r: order %d too small for another level"
                            % (path or "root", R.order))
    A, B = decompose(R)
    return CascadeNode(R, path,
                       _cascade(A, depth - 1, min_order, path + "A"),
                       _cascade(B, depth - 1, min_order, path + "B"))


def second_level_closed_forms(R):
    """``A_A = (g, f^4/x^3)`` and ``B_A = (g f^2/x^2, f^4/x^3)`` built directly from ``(g, f)``."""
    g, f = R.g, R.f
    h = f.divx()
    h2 = fps.mul(h, h)
    v = fps.mul(h2, h2).mulx()     # f^4/x^3
    return RiordanArray(g, v), RiordanArray(fps.mul(g, h2), v)
