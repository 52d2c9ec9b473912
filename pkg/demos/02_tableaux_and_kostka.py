"""Semistandard tableaux, Kostka numbers, and standard monomial vectors.

For a partition D of 3m, the tableaux of shape D with content (m, m, m)
index a basis of the (m, m, m) weight space of the Schur module S_D(C^3).
Each one gives a product of column minors whose leading monomial reads off
the tableau, so the products are independent for free.
"""

from plethysm import (
    content_monomial,
    delta_tableau,
    enumerate_sst,
    is_un_invariant,
    kostka,
    specht_map,
    specht_polynomial,
    standard_monomial_basis,
    weyl_dimension,
)

# Kostka numbers count semistandard fillings.
print("K((2,1),(1,1,1)) =", kostka((2, 1), (1, 1, 1)))
print("K((4,2),(2,2,2)) =", kostka((4, 2), (2, 2, 2)))

# With rectangular content (m, m, m) and at most three rows there is a
# closed form: min(l1 - l2, l2 - l3) + 1.
for shape in [(6,), (4, 2), (3, 3), (2, 2, 2), (4, 4, 1)]:
    padded = (shape + (0, 0, 0))[:3]
    m = sum(shape) // 3
    closed = min(padded[0] - padded[1], padded[1] - padded[2]) + 1
    assert kostka(shape, (m, m, m)) == closed
    print(f"shape {shape}: {closed} tableaux with content (m, m, m)")

# The fillings themselves, in row-reading order.
for T in enumerate_sst((4, 2), (2, 2, 2)):
    print("tableau", T, "-> leading monomial", content_monomial(T))

# delta_tableau turns a filling into a product of top-aligned column
# minors.  The result is killed by every raising operator and has row
# weight equal to the shape: a highest weight vector, for free.
basis = standard_monomial_basis(2, (4, 2), 3)
print("standard monomial vectors for shape (4,2), m = 2:")
for T, f in zip(enumerate_sst((4, 2), (2, 2, 2)), basis):
    assert is_un_invariant(f, 3)
    assert f.leading_monomial() == (content_monomial(T), 1)
    print(" ", T, "->", len(f), "terms, LM", f.leading_monomial()[0])

# Restricting to the first row (x[i][j] -> z_j^(i-1)) sends each minor
# product to a product of Vandermonde factors.
for T in enumerate_sst((2, 1), (1, 1, 1)):
    image = specht_map(delta_tableau(T), 3)
    assert image == specht_polynomial(T)
    print("specht image of", T, "is", image)

# Weyl dimension formula, exact in n.
for n in (3, 4, 5):
    print(f"dim S_(4,2)(C^{n}) =", weyl_dimension((4, 2), n))
