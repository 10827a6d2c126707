"""
Taking every second column of a Riordan array
=============================================

The even columns of R = (g, f), each raised up to the diagonal, form the
Riordan array A = (g, f^2/x). The odd columns form B = (g f/x, f^2/x).
"""

from riordanembed import RiordanArray, decompose, interleave, triangle
from riordanembed.triangle import to_text

# Pascal's triangle is (1/(1-x), x/(1-x))
pascal = RiordanArray.from_strings("1/(1-x)", "x/(1-x)")
print(to_text(triangle(pascal, 8)))

A, B = decompose(pascal)
# A[n,k] = C(n+k, 2k) and B[n,k] = C(n+k+1, 2k+1)
print(to_text(triangle(A, 6)))
print(to_text(triangle(B, 6)))

# putting the two halves back together restores the original rows
assert interleave(triangle(A, 6), triangle(B, 6)) == triangle(pascal, 6)

# the same for the Catalan triangle (c(x), x c(x))
cat = RiordanArray.from_strings("c", "x*c")
A, B = decompose(cat)
print("A.f =", A.f.truncate(6))   # x c(x)^2
print("B.g =", B.g.truncate(6))   # c(x)^2
