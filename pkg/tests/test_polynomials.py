import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plethysm.polynomials import (
    Monomial,
    NotIsobaricError,
    NotMultihomogeneousError,
    Polynomial,
    ZeroPolynomialError,
    mono_cmp,
    variable,
)


def x(i, j):
    return variable(i, j)


def delta(i, j):
    return x(1, i) * x(2, j) - x(2, i) * x(1, j)


# ---------------------------------------------------------------------------
# monomial order


def test_variable_chain_order():
    # down column 1 first, then column 2
    m11 = Monomial({(1, 1): 1})
    m21 = Monomial({(2, 1): 1})
    m31 = Monomial({(3, 1): 1})
    m12 = Monomial({(1, 2): 1})
    assert m11 > m21 > m31 > m12


def test_degree_dominates():
    assert Monomial({(3, 1): 2}) > Monomial({(1, 1): 1})


def test_lex_tie_break():
    # equal degree: compare along the chain
    a = Monomial({(1, 1): 1, (1, 2): 1})
    b = Monomial({(1, 1): 1, (2, 2): 1})
    assert a > b
    assert mono_cmp(a, b) == 1
    assert mono_cmp(b, a) == -1
    assert mono_cmp(a, a) == 0


def test_leading_monomial_of_minor():
    lm, coeff = delta(1, 2).leading_monomial()
    assert lm == Monomial({(1, 1): 1, (2, 2): 1})
    assert coeff == 1


def test_leading_monomial_of_zero_raises():
    with pytest.raises(ZeroPolynomialError):
        Polynomial.zero().leading_monomial()


# ---------------------------------------------------------------------------
# arithmetic


def test_difference_of_squares():
    assert (x(1, 1) + x(2, 1)) * (x(1, 1) - x(2, 1)) == x(1, 1) ** 2 - x(2, 1) ** 2


def test_cancellation_to_zero():
    f = delta(1, 2)
    assert f - f == 0
    assert (f - f).is_zero


def test_pow_zero_is_one():
    assert delta(1, 2) ** 0 == 1
    assert Polynomial.zero() ** 0 == 1


def test_binomial_cube():
    f = (x(1, 1) + x(1, 2)) ** 3
    assert f.coefficient(Monomial({(1, 1): 2, (1, 2): 1})) == 3
    assert len(f) == 4


def test_int_scaling():
    f = 3 * delta(1, 2)
    assert f.coefficient(Monomial({(1, 1): 1, (2, 2): 1})) == 3
    assert 0 * f == 0


def test_minor_squared_leading_coefficient():
    lm, coeff = (delta(1, 2) ** 2).leading_monomial()
    assert lm == Monomial({(1, 1): 2, (2, 2): 2})
    assert coeff == 1


# ---------------------------------------------------------------------------
# gradings


def test_column_degree():
    assert (x(1, 1) * x(1, 2) * x(1, 3)).column_degree() == (1, 1, 1)
    assert delta(1, 2).column_degree() == (1, 1)
    assert delta(1, 2).column_degree(3) == (1, 1, 0)


def test_column_degree_mixed_raises():
    with pytest.raises(NotMultihomogeneousError):
        (x(1, 1) + x(1, 2) ** 2).column_degree()


def test_row_weight():
    gamma1 = (
        x(1, 1) * x(2, 2) * x(3, 3) - x(1, 1) * x(3, 2) * x(2, 3)
        - x(2, 1) * x(1, 2) * x(3, 3) + x(2, 1) * x(3, 2) * x(1, 3)
        + x(3, 1) * x(1, 2) * x(2, 3) - x(3, 1) * x(2, 2) * x(1, 3)
    )
    assert gamma1.row_weight() == (1, 1, 1)
    with pytest.raises(NotIsobaricError):
        (x(1, 1) + x(2, 1)).row_weight()


def test_zero_has_no_grading():
    with pytest.raises(ZeroPolynomialError):
        Polynomial.zero().column_degree()


# ---------------------------------------------------------------------------
# substitution and derivatives


def test_substitute_identity():
    f = delta(1, 2) * x(1, 1)
    sub = {v: variable(*v) for v in f.variables()}
    assert f.substitute(sub) == f


def test_substitute_column_swap_flips_minor():
    f = delta(1, 2)
    swap = {(1, 1): x(1, 2), (2, 1): x(2, 2), (1, 2): x(1, 1), (2, 2): x(2, 1)}
    assert f.substitute(swap) == -f


def test_substitute_row_operation_fixes_minor():
    # add c times row 1 to row 2: the top 2x2 minors are unchanged
    f = delta(1, 2)
    c = 5
    sub = {
        (1, 1): x(1, 1), (1, 2): x(1, 2),
        (2, 1): x(2, 1) + c * x(1, 1), (2, 2): x(2, 2) + c * x(1, 2),
    }
    assert f.substitute(sub) == f


def test_substitute_requires_total_map():
    with pytest.raises(KeyError):
        delta(1, 2).substitute({(1, 1): x(1, 1)})


def test_partial_derivative():
    f = x(1, 1) ** 2 * x(2, 2)
    assert f.partial_derivative(1, 1) == 2 * x(1, 1) * x(2, 2)
    assert f.partial_derivative(2, 2) == x(1, 1) ** 2
    assert f.partial_derivative(3, 3) == 0


def test_rename_variables_merges():
    f = x(1, 1) * x(1, 2)
    assert f.rename_variables(lambda i, j: (1, 1)) == x(1, 1) ** 2


# ---------------------------------------------------------------------------
# rendering


def test_text_format():
    assert str(delta(1, 2)) == "x[1][1]*x[2][2] - x[2][1]*x[1][2]"
    assert str(Polynomial.zero()) == "0"
    assert str(Polynomial.constant(-7)) == "-7"
    assert str(x(1, 1) ** 2 * 3) == "3*x[1][1]^2"


def test_json_round_trip():
    f = delta(1, 2) ** 3 - 12 * x(3, 1) ** 4
    obj = f.to_json_obj()
    assert all(isinstance(t["coeff"], str) for t in obj)
    assert Polynomial.from_json_obj(obj) == f


def test_json_term_order_is_decreasing():
    f = x(1, 1) + x(2, 1) ** 2
    exps = [t["exps"] for t in f.to_json_obj()]
    assert exps == [[[2, 1, 2]], [[1, 1, 1]]]


# ---------------------------------------------------------------------------
# properties


@st.composite
def monomials(draw):
    pairs = draw(
        st.dictionaries(
            st.tuples(st.integers(1, 3), st.integers(1, 3)),
            st.integers(1, 3),
            max_size=3,
        )
    )
    return Monomial(pairs)


@st.composite
def polys(draw):
    terms = draw(
        st.lists(st.tuples(monomials(), st.integers(-5, 5)), max_size=4)
    )
    total = Polynomial.zero()
    for mono, coeff in terms:
        total = total + Polynomial({mono: coeff})
    return total


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(polys(), polys())
def test_leading_monomial_is_multiplicative(f, g):
    if f.is_zero or g.is_zero:
        assert (f * g).is_zero
        return
    (mf, cf), (mg, cg) = f.leading_monomial(), g.leading_monomial()
    mono, coeff = (f * g).leading_monomial()
    assert mono == mf * mg
    assert coeff == cf * cg


@given(polys(), polys())
def test_substitution_is_a_ring_map(f, g):
    sub = {
        (i, j): variable(1, i) - 2 * variable(j, 1)
        for i in range(1, 4)
        for j in range(1, 4)
    }
    assert (f + g).substitute(sub) == f.substitute(sub) + g.substitute(sub)
    assert (f * g).substitute(sub) == f.substitute(sub) * g.substitute(sub)


@given(polys(), polys())
def test_derivative_leibniz(f, g):
    dfg = (f * g).partial_derivative(2, 2)
    assert dfg == f.partial_derivative(2, 2) * g + f * g.partial_derivative(2, 2)


@given(polys())
@settings(max_examples=50)
def test_text_is_stable_and_json_round_trips(f):
    assert Polynomial.from_json_obj(f.to_json_obj()) == f
    assert str(f) == str(Polynomial.from_json_obj(f.to_json_obj()))


@given(monomials(), monomials())
def test_mono_cmp_consistent_with_multiplication(a, b):
    c = Monomial({(2, 2): 2, (3, 1): 1})
    assert mono_cmp(a, b) == mono_cmp(a * c, b * c)
