"""
S-fractions, their J-fraction contractions, and tridiagonal production matrices
===============================================================================

The S-fraction with a = 2, 3, 5, 2, 3, 5, ... contracts to two J-fractions.
The even one generates the moment matrix A and the odd one generates B. The
bidiagonal construction produces a matrix R with A and B interleaved.
"""

from riordanembed import (BidiagonalSpec, SFraction, bidiagonal_construction, contract_even,
                          contract_odd, generate, interleave, jfraction_to_tridiagonal,
                          s_to_series)
from riordanembed.triangle import to_text

s = SFraction.periodic([2, 3, 5])
even, odd = contract_even(s), contract_odd(s)
print(even.spec())
print(odd.spec())

print(s_to_series(s, 8))

A = generate(jfraction_to_tridiagonal(even, 8), 8)
B = generate(jfraction_to_tridiagonal(odd, 8), 8)
print(to_text(A))
print(to_text(B))

_, R = bidiagonal_construction(BidiagonalSpec.periodic([2, 3, 5]), 8)
print(to_text(R))
assert interleave(A, B) == R
