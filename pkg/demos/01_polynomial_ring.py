"""Tour of the exact polynomial ring on matrix variables.

Polynomials live in Z[x[i][j]] where i indexes rows (1..n) and j indexes
columns (1..k).  Everything is integer-exact: no floats anywhere.
"""

from plethysm import (
    Monomial,
    Polynomial,
    add_row_multiple,
    raising_operator,
    variable,
)

x = variable

# Basic arithmetic.  delta is the 2x2 minor on columns 1, 2.
delta = x(1, 1) * x(2, 2) - x(2, 1) * x(1, 2)
print("delta      =", delta)
print("delta^2    =", delta**2)
print("terms      =", len(delta**2))

# The term order is graded lexicographic.  Within a degree, x[1][1] beats
# x[2][1] beats ... beats x[n][1] beats x[1][2], so column-major, top rows
# first.  Leading monomials are multiplicative.
lm, coeff = delta.leading_monomial()
print("LM(delta)  =", lm, "with coefficient", coeff)
lm2, _ = (delta**2).leading_monomial()
assert lm2 == lm * lm

# Multidegrees.  column_degree counts per column, row_weight per row; both
# raise if the polynomial mixes degrees.
f = x(1, 1) ** 2 * x(2, 2) * x(1, 3)
print("column_degree =", f.column_degree(3))
print("row_weight    =", f.row_weight(3))

# Substitution is a ring map: send each variable anywhere you like.
swapped = delta.substitute({(1, 1): x(1, 2), (1, 2): x(1, 1),
                            (2, 1): x(2, 2), (2, 2): x(2, 1)})
print("column swap of delta =", swapped)
assert swapped == -delta

# Two views of the unipotent action.  The raising operator is the
# infinitesimal version of adding a multiple of row 1 to row 2; on the
# minor both vanish, which is what makes delta a highest weight vector.
print("R_{12} delta =", raising_operator(delta, 1, 2))
print("row op fixes delta:", add_row_multiple(delta, 1, 2, 5) == delta)

# Monomials compare like the order says.
a = Monomial({(1, 1): 1})
b = Monomial({(2, 1): 1})
print("x[1][1] > x[2][1]:", a > b)

# JSON round trip keeps coefficients as strings so arbitrary precision
# survives any consumer.
blob = (3 * delta).to_json_obj()
print("json:", blob)
assert Polynomial.from_json_obj(blob) == 3 * delta
