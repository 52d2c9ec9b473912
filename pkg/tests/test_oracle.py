import math

import pytest

from plethysm.hwv import decompose
from plethysm.oracle import (
    InstanceTooLargeError,
    hwv_kernel_multiplicity,
    monomial_exponents,
    multiplicities_by_kostka,
    oracle_report_json,
    rank_of_integer_matrix,
    weight_table_plethysm,
    weyl_dimension,
)
from plethysm.tableaux import kostka


def test_monomial_exponents():
    assert monomial_exponents(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert len(monomial_exponents(3, 3)) == math.comb(5, 2)
    assert monomial_exponents(0, 3) == ((0, 0, 0),)


def test_weight_table_degree_one():
    table = weight_table_plethysm(1, 3, "sym")
    assert table[(1, 1, 1)] == 1
    assert table[(3, 0, 0)] == 1
    assert table[(2, 1, 0)] == 1
    assert sum(table.values()) == math.comb(3 + 2, 3)

    table = weight_table_plethysm(1, 3, "alt")
    assert table == {(1, 1, 1): 1}


def test_weight_table_totals():
    for m, n in [(2, 3), (3, 3), (2, 4)]:
        d = math.comb(m + n - 1, n - 1)
        assert sum(weight_table_plethysm(m, n, "sym").values()) == math.comb(d + 2, 3)
        assert sum(weight_table_plethysm(m, n, "alt").values()) == math.comb(d, 3)


def test_multiplicities_small():
    assert multiplicities_by_kostka(0, 3, "sym") == {(): 1}
    assert multiplicities_by_kostka(1, 3, "sym") == {(3,): 1}
    assert multiplicities_by_kostka(1, 3, "alt") == {(1, 1, 1): 1}
    assert multiplicities_by_kostka(2, 3, "sym") == {(6,): 1, (4, 2): 1, (2, 2, 2): 1}


def test_multiplicities_match_words_m4():
    expected = decompose(3, 4, "alt").multiplicities()
    assert multiplicities_by_kostka(4, 3, "alt") == expected
    assert multiplicities_by_kostka(4, 4, "alt") == expected


def test_multiplicities_stable_in_n():
    for m in range(0, 4):
        for variant in ("sym", "alt"):
            if variant == "alt" and m < 1:
                continue
            assert multiplicities_by_kostka(m, 3, variant) == multiplicities_by_kostka(
                m, 4, variant
            )


def test_kernel_multiplicities():
    assert hwv_kernel_multiplicity(3, 3, (4, 4, 1), "sym") == 1
    assert hwv_kernel_multiplicity(1, 3, (1, 1, 1), "sym") == 0
    assert hwv_kernel_multiplicity(1, 3, (1, 1, 1), "alt") == 1
    assert hwv_kernel_multiplicity(2, 4, (4, 2), "sym") == 1
    assert hwv_kernel_multiplicity(2, 4, (4, 2), "alt") == 0
    # wrong total degree never contributes
    assert hwv_kernel_multiplicity(2, 3, (4, 1), "sym") == 0
    # too many rows for the ambient space
    assert hwv_kernel_multiplicity(2, 3, (3, 1, 1, 1), "sym") == 0


def test_kernel_finds_the_double_point():
    assert hwv_kernel_multiplicity(6, 3, (12, 6), "sym") == 2


def test_kernel_size_bound():
    with pytest.raises(InstanceTooLargeError):
        hwv_kernel_multiplicity(3, 3, (4, 4, 1), "sym", max_dim=1)


def test_kernel_env_override(monkeypatch):
    monkeypatch.setenv("PLETHYSM_MAX_DIM", "1")
    with pytest.raises(InstanceTooLargeError):
        hwv_kernel_multiplicity(3, 3, (4, 4, 1), "sym")
    monkeypatch.setenv("PLETHYSM_MAX_DIM", "2000")
    assert hwv_kernel_multiplicity(3, 3, (4, 4, 1), "sym") == 1


def test_rank_of_integer_matrix():
    assert rank_of_integer_matrix([]) == 0
    assert rank_of_integer_matrix([[0, 0], [0, 0]]) == 0
    assert rank_of_integer_matrix([[1, 2], [2, 4]]) == 1
    assert rank_of_integer_matrix([[1, 2], [3, 4]]) == 2
    assert rank_of_integer_matrix([[0, 1], [1, 0], [1, 1]]) == 2
    # needs exact arithmetic: a float elimination would drift here
    big = 10 ** 30
    assert rank_of_integer_matrix([[big, 1], [big, 1]]) == 1


def test_weyl_dimension():
    assert weyl_dimension((3,), 3) == 10
    assert weyl_dimension((2, 1), 3) == 8
    assert weyl_dimension((1, 1, 1), 3) == 1
    assert weyl_dimension((1, 1, 1), 4) == 4
    assert weyl_dimension((), 5) == 1
    with pytest.raises(ValueError):
        weyl_dimension((1, 1, 1, 1), 3)


def test_dimension_conservation_small():
    for n in (3, 4):
        for m in range(0, 4):
            d = math.comb(m + n - 1, n - 1)
            for variant, total in (("sym", math.comb(d + 2, 3)), ("alt", math.comb(d, 3))):
                if variant == "alt" and m < 1:
                    continue
                mults = multiplicities_by_kostka(m, n, variant)
                assert sum(v * weyl_dimension(s, n) for s, v in mults.items()) == total


def test_isotypic_split_accounts_for_kostka():
    # each weight-D multiplicity space of the full degree-(m,m,m) component
    # has dimension K(D, (m,m,m)) and splits into invariant, sign, and pairs
    for m in range(1, 4):
        sym = multiplicities_by_kostka(m, 3, "sym")
        alt = multiplicities_by_kostka(m, 3, "alt")
        for shape in set(sym) | set(alt):
            k = kostka(shape, (m, m, m))
            rest = k - sym.get(shape, 0) - alt.get(shape, 0)
            assert rest >= 0
            assert rest % 2 == 0


def test_oracle_report_shape():
    obj = oracle_report_json(2, 3, "sym")
    assert obj["m"] == 2 and obj["n"] == 3 and obj["variant"] == "sym"
    assert obj["multiplicities"][0] == {"diagram": [6], "mult": 1}
    diagrams = [tuple(e["diagram"]) for e in obj["multiplicities"]]
    assert diagrams == sorted(diagrams, reverse=True)
