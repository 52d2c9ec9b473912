"""Decompositions of S^3(S^m(C^n)) and L^3(S^m(C^n)) with explicit bases.

Seven polynomials in three columns of matrix variables generate every
highest weight vector for the cube cases: degree-one alpha1, the quadratic
and cubic invariants alpha2 and alpha3 of the pair (beta2, beta3), the
3x3 determinant gamma1, and the minor product gamma2.  Products of them,
with the exponent of gamma1 or gamma2 reduced mod 2 by the relation
gamma1^2 - gamma2^2 in low weight, run through a full list of linearly
independent highest weight vectors in each isotypic piece.
"""

from plethysm import (
    decompose,
    enumerate_basis,
    generators_k3,
    is_sign_equivariant,
    is_sk_invariant,
    is_un_invariant,
    multiplicity_closed_form,
    verify_discriminant_relation,
    words_for_weight,
)

g = generators_k3()
for name in ("alpha1", "alpha2", "alpha3", "gamma1", "gamma2"):
    f = g[name]
    kind = "symmetric" if is_sk_invariant(f, 3) else (
        "alternating" if is_sign_equivariant(f, 3) else "neither")
    print(f"{name}: {len(f)} terms, grade {f.column_degree(3)[0]}, "
          f"weight {f.row_weight(3)}, {kind}, "
          f"highest weight: {is_un_invariant(f, 3)}")

# The full table for the symmetric cube of the quadric.
print()
print(decompose(3, 2, "sym").to_text())

# And the alternating cube one grade up.
print()
print(decompose(3, 3, "alt").to_text())

# Each word records generator exponents; expand() multiplies them out.
word = words_for_weight(5, (9, 6), "sym")[0]
print("word", word, "expands to", len(word.expand()), "terms")
assert is_un_invariant(word.expand(), 3)

# Multiplicities come straight off a floor function of the shape.  The
# first repeated diagram shows up at m = 6: two independent vectors of
# weight (12, 6), namely alpha2^3 and alpha1^2 gamma2^2.
print()
print("mult of (12,6) in S^3(S^6):", multiplicity_closed_form((12, 6), "sym"))
for w in words_for_weight(6, (12, 6), "sym"):
    print("  word:", w)

# Counting words grade by grade.
sym_counts = [len(enumerate_basis(m, "sym")) for m in range(1, 7)]
alt_counts = [len(enumerate_basis(m, "alt")) for m in range(1, 7)]
print("sym components, m = 1..6:", sym_counts)
print("alt components, m = 1..6:", alt_counts)

# The invariants alpha2, alpha3 satisfy the discriminant relation
# 4 alpha2^3 - alpha3^2 = 27 alpha1^2 gamma2^2 (and provably not the
# variant with gamma1 in place of gamma2: the gradings already refuse).
check = verify_discriminant_relation()
print("discriminant identity holds:", check.corrected_holds)
print("gamma1 variant holds:", check.gamma1_variant_holds)
