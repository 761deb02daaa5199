"""Order polytopes of forest posets: points, packed-word expansions,
Ehrhart polynomials, reciprocity, and q-counts."""

from fractions import Fraction

import pytest

from planehopf import ehrhart as eh
from planehopf.forests import enumerate_forests, parse_forest
from planehopf.ncsf import eval_geometric, gamma_qsym_m
from planehopf.polynomials import MultiPoly

CHERRY = parse_forest("200")
x = MultiPoly.var("x")
q = MultiPoly.var("q")


def test_cherry_2q_has_14_points():
    assert len(eh.lattice_points(CHERRY, 2)) == 14


def test_cherry_3q_interior():
    assert eh.lattice_points(CHERRY, 3, interior=True) == [(1, 1, 2)]


def test_gamma_word_fixtures():
    want = {(1, 2, 3), (1, 2, 2), (1, 1, 2), (1, 1, 1), (2, 1, 3), (2, 1, 2)}
    assert set(eh.gamma_wqsym(CHERRY).support()) == want
    wants = {(1, 2, 3), (2, 1, 3), (1, 1, 2)}
    assert set(eh.gamma_wqsym(CHERRY, signed=True).support()) == wants


def test_signed_gamma_dual_route():
    for n in range(1, 6):
        for f in enumerate_forests(n):
            assert eh.gamma_wqsym(f, signed=True) \
                == eh.signed_gamma_by_transform(f)


def test_commutative_image():
    for n in range(1, 6):
        for f in enumerate_forests(n):
            assert eh.wqsym_to_qsym(eh.gamma_wqsym(f)) == gamma_qsym_m(f)


def test_ehrhart_polynomial_fixtures():
    assert eh.ehrhart_polynomial(CHERRY) * 6 == (x + 1) * (x + 2) * (2 * x + 3)
    assert eh.ehrhart_polynomial(parse_forest("0")) == x + 1
    assert eh.ehrhart_polynomial(parse_forest("10")) * 2 == (x + 1) * (x + 2)


def test_ehrhart_counts():
    for sz in range(1, 6):
        for f in enumerate_forests(sz):
            e = eh.ehrhart_polynomial(f)
            for n in range(0, 5):
                val = e.substitute({"x": Fraction(n)}).as_constant()
                assert val == len(eh.lattice_points(f, n))


def test_reciprocity():
    for sz in range(1, 6):
        for f in enumerate_forests(sz):
            for n in range(1, 5):
                assert eh.reciprocity_check(f, n)
    assert eh.interior_count_poly(CHERRY, 3) == 1


def test_q_count_fixture():
    qc = eh.q_count(CHERRY, 2)
    assert qc == {0: 1, 1: 1, 2: 3, 3: 3, 4: 3, 5: 2, 6: 1}
    assert qc == eh.q_count_points(CHERRY, 2)
    poly = MultiPoly.zero()
    for e, c in qc.items():
        poly = poly + q ** e * c
    assert poly == eval_geometric(gamma_qsym_m(CHERRY), 3)
    assert sum(qc.values()) == 14


def test_interior_q_count_fixture():
    iq = eh.q_count(CHERRY, 3, interior=True)
    assert iq == {-4: Fraction(-1)}
    assert iq == eh.q_count_points(CHERRY, 3, interior=True)


def test_q_routes_agree():
    for sz in range(1, 5):
        for f in enumerate_forests(sz):
            for n in range(0, 4):
                assert eh.q_count(f, n) == eh.q_count_points(f, n)
                if n >= 1:
                    assert eh.q_count(f, n, interior=True) \
                        == eh.q_count_points(f, n, interior=True)


def test_negative_dilation_rejected():
    with pytest.raises(ValueError):
        eh.lattice_points(CHERRY, -1)
