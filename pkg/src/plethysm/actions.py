"""Column permutations, symmetrizers, and row operations on matrix polynomials.

The symmetric group S_k acts on polynomials in the x[i][j] by permuting
columns.  GL_n acts by row operations; for highest weight considerations only
the unipotent upper triangular subgroup matters, and invariance under it is
equivalent to being killed by the adjacent raising operators

    R_i(f) = sum_j x[i][j] * df/dx[i+1][j],    i = 1, ..., n-1,

because R_i generates the one-parameter subgroup adding a multiple of row i
to row i+1 on the variable matrix, and those subgroups generate the unipotent
group.  Both the infinitesimal and the finite (substitution) forms are
provided so they can be checked against each other.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .polynomials import Monomial, Polynomial, ZeroPolynomialError, variable

Permutation = tuple[int, ...]  # images of 1..k, so tau[j-1] is tau(j)


def identity_permutation(k: int) -> Permutation:
    return tuple(range(1, k + 1))


def transposition(k: int, a: int, b: int) -> Permutation:
    images = list(range(1, k + 1))
    images[a - 1], images[b - 1] = b, a
    return tuple(images)


def all_permutations(k: int) -> Iterator[Permutation]:
    return itertools.permutations(range(1, k + 1))


def permutation_sign(tau: Permutation) -> int:
    sign = 1
    for i in range(len(tau)):
        for j in range(i + 1, len(tau)):
            if tau[i] > tau[j]:
                sign = -sign
    return sign


def permute_columns(f: Polynomial, tau: Permutation) -> Polynomial:
    """Send x[i][j] to x[i][tau(j)] for every variable of f."""
    k = len(tau)

    def rename(row: int, col: int) -> tuple[int, int]:
        if col > k:
            raise ValueError(f"column {col} out of range for a permutation of {k} columns")
        return (row, tau[col - 1])

    return f.rename_variables(rename)


def symmetrize(f: Polynomial, k: int) -> Polynomial:
    """Unnormalized symmetrizer: the sum of all k! column permutations of f."""
    total = Polynomial.zero()
    for tau in all_permutations(k):
        total = total + permute_columns(f, tau)
    return total


def antisymmetrize(f: Polynomial, k: int) -> Polynomial:
    """Unnormalized antisymmetrizer: the signed sum of all column permutations."""
    total = Polynomial.zero()
    for tau in all_permutations(k):
        g = permute_columns(f, tau)
        total = total + (g if permutation_sign(tau) == 1 else -g)
    return total


def raising_operator(f: Polynomial, p: int, q: int) -> Polynomial:
    """The operator sum_j x[p][j] * df/dx[q][j], moving row q content to row p."""
    if not (1 <= p < q):
        raise ValueError(f"raising operator needs 1 <= p < q, got ({p}, {q})")
    out: dict[Monomial, int] = {}
    for mono, coeff in f.terms():
        exps = mono.exponents()
        for (row, col), e in exps.items():
            if row != q:
                continue
            shifted = dict(exps)
            if e == 1:
                del shifted[(q, col)]
            else:
                shifted[(q, col)] = e - 1
            shifted[(p, col)] = shifted.get((p, col), 0) + 1
            m = Monomial(shifted)
            c = out.get(m, 0) + coeff * e
            if c:
                out[m] = c
            elif m in out:
                del out[m]
    return Polynomial(out)


def add_row_multiple(f: Polynomial, p: int, q: int, c: int) -> Polynomial:
    """Substitute x[q][j] -> x[q][j] + c*x[p][j]: the finite form of raising."""
    if not (1 <= p < q):
        raise ValueError(f"row operation needs 1 <= p < q, got ({p}, {q})")
    sub = {}
    for row, col in f.variables():
        if row == q:
            sub[(row, col)] = variable(q, col) + c * variable(p, col)
        else:
            sub[(row, col)] = variable(row, col)
    return f.substitute(sub)


def is_un_invariant(f: Polynomial, n: int) -> bool:
    """True iff the unipotent upper triangular subgroup of GL_n fixes f.

    Checks only the adjacent operators R_1, ..., R_{n-1}; the rest are
    commutators of those.  The zero polynomial is rejected since highest
    weight vectors are nonzero by definition.
    """
    if f.is_zero:
        raise ZeroPolynomialError("invariance of the zero polynomial is vacuous")
    return all(raising_operator(f, i, i + 1).is_zero for i in range(1, n))


def is_sk_invariant(f: Polynomial, k: int) -> bool:
    """True iff every column permutation fixes f (adjacent swaps suffice)."""
    return all(permute_columns(f, transposition(k, i, i + 1)) == f for i in range(1, k))


def is_sign_equivariant(f: Polynomial, k: int) -> bool:
    """True iff every column permutation acts on f by its sign."""
    return all(
        permute_columns(f, transposition(k, i, i + 1)) == -f for i in range(1, k)
    )
