"""
A matrix with two embedded Riordan arrays that is not itself Riordan
====================================================================

Invert the unit bidiagonal matrix with subdiagonal -2, -3, -2, -3, ...,
drop the first row, and use what is left as a production matrix.
"""

from riordanembed import BidiagonalSpec, SFraction, bidiagonal_construction, s_to_series
from riordanembed.embedding import split
from riordanembed.prodmat import riordan_violation
from riordanembed.riordan import fit_columns, triangle
from riordanembed.triangle import to_text

spec = BidiagonalSpec.periodic([2, 3])
P, T = bidiagonal_construction(spec, 8)
print(P)
print()
print(to_text(T))

# columns 2, 3, ... of P are not shifted copies of column 1
print("first violation (row, column):", riordan_violation(P))

# the best Riordan fit to the first two columns already misses column 2
fitted = triangle(fit_columns(T), 8, integral=False)
print("column 2 of T:     ", list(T.column(2))[:4])
print("column 2 of the fit:", list(fitted.column(2))[:4])

# ... and yet both halves are Riordan arrays
A, B = split(T)
print(to_text(A))
print(to_text(B))

# column 0 is the moment sequence of the S-fraction with a = 2, 3, 2, 3, ...
print(s_to_series(SFraction.periodic([2, 3]), 8))
