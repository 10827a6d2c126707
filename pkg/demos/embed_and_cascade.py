"""
Embedding a given array, and decomposing repeatedly
===================================================

A = (u, v) sits inside R = (u, x sqrt(v/x)) whenever sqrt(v/x) has
integer coefficients.
"""

from riordanembed import NotEmbeddable, RiordanArray, cascade, embed, triangle
from riordanembed.embedding import second_level_closed_forms
from riordanembed.triangle import to_text

A = RiordanArray.from_strings("1/sqrt(1-4*x)", "x/(1-4*x)")
R = embed(A)
print(to_text(triangle(A, 6)))
print(to_text(triangle(R, 6)))

# sqrt(1+x) = 1 + x/2 - ... so (1, x(1+x)) has no integer embedding
try:
    embed(RiordanArray.from_strings("1", "x*(1+x)"))
except NotEmbeddable as exc:
    print("not embeddable:", exc)

# cascade two levels down from Pascal's triangle
tree = cascade(RiordanArray.from_strings("1/(1-x)", "x/(1-x)"), 2)
for node in tree.walk():
    print(node.path or "R", list(triangle(node.array, 5).row(4)))

# A_A and B_A also have closed forms in g and f
AA, BA = second_level_closed_forms(tree.array)
assert tree.find("AA").array.agrees(AA) and tree.find("AB").array.agrees(BA)
