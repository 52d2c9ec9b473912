"""Independent multiplicity oracles for the k = 3 plethysms.

Two cross-checks that share no code with the word enumeration:

1. Character counting.  The dimension of a weight space of S^3(S^m(C^n)) is
   the number of multisets of three degree-m monomials with the prescribed
   total exponent vector (3-subsets of distinct monomials for Λ^3).  Reading
   dominant weights in decreasing lexicographic order and subtracting Kostka
   contributions of larger constituents inverts the character into
   irreducible multiplicities.

2. Kernel computation.  The multiplicity of the weight-D constituent equals
   the dimension of the joint kernel of the adjacent raising operators on the
   weight-D subspace of the invariant (or sign) isotypic component, computed
   exactly by fraction-free integer elimination.

Both agree with the closed-form counts and with the explicit word bases; the
point of this module is that they would not if any of those were wrong.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

from .actions import raising_operator
from .polynomials import Monomial, Polynomial
from .tableaux import Diagram, kostka, normalize_partition, pad


class InstanceTooLargeError(RuntimeError):
    """Raised when a kernel computation would exceed the size bound."""


def default_max_dim() -> int:
    """Size bound for kernel computations; PLETHYSM_MAX_DIM overrides it."""
    return int(os.environ.get("PLETHYSM_MAX_DIM", "2000"))


@lru_cache(maxsize=None)
def monomial_exponents(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of degree-m monomials in n variables, lex order."""
    if n == 0:
        return ((),) if m == 0 else ()

    def go(rest: int, slots: int):
        if slots == 1:
            yield (rest,)
            return
        for first in range(rest, -1, -1):
            for tail in go(rest - first, slots - 1):
                yield (first,) + tail

    return tuple(go(m, n))


def weight_table_plethysm(m: int, n: int, variant: str) -> dict[tuple[int, ...], int]:
    """Weight-space dimensions of S^3(S^m(C^n)) or Λ^3(S^m(C^n)).

    Keys are length-n exponent sums; values count multisets (sym) or
    3-subsets of distinct monomials (alt).
    """
    monos = monomial_exponents(m, n)
    if variant == "sym":
        triples = itertools.combinations_with_replacement(monos, 3)
    elif variant == "alt":
        triples = itertools.combinations(monos, 3)
    else:
        raise ValueError(f"variant must be 'sym' or 'alt', got {variant!r}")
    table: dict[tuple[int, ...], int] = {}
    for m1, m2, m3 in triples:
        weight = tuple(a + b + c for a, b, c in zip(m1, m2, m3))
        table[weight] = table.get(weight, 0) + 1
    return table


def multiplicities_by_kostka(m: int, n: int, variant: str) -> dict[Diagram, int]:
    """Irreducible multiplicities from the weight table, by Kostka inversion.

    Dominant weights are processed in decreasing lexicographic order, which
    refines dominance, so each step only subtracts already-known
    multiplicities.  Diagrams come back with trailing zeros stripped and only
    nonzero multiplicities are kept.
    """
    table = weight_table_plethysm(m, n, variant)
    dominant = sorted(
        (w for w in table if all(w[i] >= w[i + 1] for i in range(n - 1))),
        reverse=True,
    )
    mults: dict[tuple[int, ...], int] = {}
    for weight in dominant:
        value = table[weight]
        for larger, mult in mults.items():
            if mult:
                value -= mult * kostka(larger, weight)
        if value < 0:
            raise AssertionError(
                f"negative multiplicity {value} at {weight}: inversion is broken"
            )
        mults[weight] = value
    return {normalize_partition(w): v for w, v in mults.items() if v}


def _exponent_matrices(m: int, n: int, weight: tuple[int, ...]):
    """All n-by-3 exponent matrices with column sums m and row sums `weight`.

    A matrix is a triple of column vectors.
    """
    monos = monomial_exponents(m, n)
    mono_set = set(monos)
    out = []
    for col1 in monos:
        if any(col1[i] > weight[i] for i in range(n)):
            continue
        rest1 = tuple(weight[i] - col1[i] for i in range(n))
        for col2 in monos:
            if any(col2[i] > rest1[i] for i in range(n)):
                continue
            col3 = tuple(rest1[i] - col2[i] for i in range(n))
            if col3 in mono_set:
                out.append((col1, col2, col3))
    return out


def _matrix_monomial(cols: tuple[tuple[int, ...], ...]) -> Monomial:
    exps = {}
    for j, col in enumerate(cols, start=1):
        for i, e in enumerate(col, start=1):
            if e:
                exps[(i, j)] = e
    return Monomial(exps)


def _isotypic_weight_basis(m: int, n: int, weight: tuple[int, ...],
                           variant: str) -> list[Polynomial]:
    """Orbit sums spanning the invariant or sign part of one weight space.

    Column permutations act on exponent matrices; invariants get one plain
    orbit sum per orbit, while the sign component only sees free orbits
    (any repeated column forces a stabilizer containing a transposition,
    which kills the signed sum).
    """
    seen: set[tuple] = set()
    basis: list[Polynomial] = []
    for cols in _exponent_matrices(m, n, weight):
        rep = tuple(sorted(cols))
        if rep in seen:
            continue
        seen.add(rep)
        if variant == "sym":
            terms = {
                _matrix_monomial(perm): 1
                for perm in set(itertools.permutations(rep))
            }
            basis.append(Polynomial(terms))
        else:
            if len(set(rep)) < 3:
                continue
            terms = {}
            for perm, sign in (
                ((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                ((0, 2, 1), -1), ((1, 0, 2), -1), ((2, 1, 0), -1),
            ):
                terms[_matrix_monomial(tuple(rep[p] for p in perm))] = sign
            basis.append(Polynomial(terms))
    return basis


def rank_of_integer_matrix(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix, by fraction-free (Bareiss) elimination."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    rank = 0
    prev = 1
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pivot = mat[r][col]
        for i in range(r + 1, nrows):
            factor = mat[i][col]
            row_i = mat[i]
            row_r = mat[r]
            for j in range(col + 1, ncols):
                row_i[j] = (pivot * row_i[j] - factor * row_r[j]) // prev
            row_i[col] = 0
        prev = pivot
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def hwv_kernel_multiplicity(m: int, n: int, shape, variant: str,
                            max_dim: int | None = None) -> int:
    """Multiplicity of the weight-`shape` constituent, by exact kernel computation.

    Builds the weight-`shape` slice of the isotypic component, applies every
    adjacent raising operator, and returns the dimension of the joint kernel.
    Raises InstanceTooLargeError when the slice dimension exceeds max_dim
    (default from PLETHYSM_MAX_DIM, else 2000).
    """
    shape = normalize_partition(shape)
    if len(shape) > n:
        return 0
    if sum(shape) != 3 * m:
        return 0
    if max_dim is None:
        max_dim = default_max_dim()
    weight = pad(shape, n)
    basis = _isotypic_weight_basis(m, n, weight, variant)
    if not basis:
        return 0
    if len(basis) > max_dim:
        raise InstanceTooLargeError(
            f"weight space dimension {len(basis)} exceeds bound {max_dim}"
        )
    rows: list[list[int]] = []
    for p in range(1, n):
        images = [raising_operator(v, p, p + 1) for v in basis]
        index: dict[Monomial, int] = {}
        for img in images:
            for mono, _ in img.terms():
                index.setdefault(mono, len(index))
        block = [[0] * len(basis) for _ in range(len(index))]
        for jcol, img in enumerate(images):
            for mono, coeff in img.terms():
                block[index[mono]][jcol] = coeff
        rows.extend(block)
    if not rows:
        return len(basis)
    return len(basis) - rank_of_integer_matrix(rows)


def weyl_dimension(shape, n: int) -> int:
    """Dimension of the irreducible GL_n module with the given highest weight."""
    shape = normalize_partition(shape)
    if len(shape) > n:
        raise ValueError(f"{shape} has more than {n} rows")
    lam = pad(shape, n)
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def oracle_report_json(m: int, n: int, variant: str) -> dict:
    """Stable encoding of the Kostka-inversion multiplicities."""
    mults = multiplicities_by_kostka(m, n, variant)
    return {
        "m": m,
        "n": n,
        "variant": variant,
        "multiplicities": [
            {"diagram": list(d), "mult": mults[d]} for d in sorted(mults, reverse=True)
        ],
    }
