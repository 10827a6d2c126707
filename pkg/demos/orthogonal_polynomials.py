"""
Two polynomial families and their interleaved moment matrix
===========================================================

P_n = (x-7) P_{n-1} - 12 P_{n-2}, with P_1 = x - 3 for one family and
P_1 = x - 7 for the other (Q_n).
"""

from riordanembed import (InterleavedFamily, Recurrence, interleaved_moment_matrix,
                          moment_matrix, polynomials, production_of)
from riordanembed.gfparse import evaluate
from riordanembed.series import reversion
from riordanembed.triangle import to_text

P = Recurrence.parse("rec b=[7] c=[12] p1=-3")
Q = Recurrence.parse("rec b=[7] c=[12]")

print(to_text(polynomials(P, 6)))
print(to_text(moment_matrix(P, 6)))
print(to_text(moment_matrix(Q, 6)))

R = interleaved_moment_matrix(InterleavedFamily(P, Q), 10)
print(to_text(R))
print(production_of(R))

# the moments are also (1/x) Rev(x(1-4x)/(1-x))
print(reversion(evaluate("x*(1-4*x)/(1-x)", 9)).divx())
