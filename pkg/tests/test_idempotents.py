"""Lie idempotents: Eulerian, Solomon, Dynkin, the q-interpolation, and the
group algebra certification."""

from fractions import Fraction

import pytest

from planehopf import birkhoff, idempotents as idem, ncsf
from planehopf.compositions import partitions_of
from planehopf.forests import chain_tree, enumerate_trees, parse_forest
from planehopf.hopf import s_n
from planehopf.lincomb import LinComb
from planehopf.ncsf import psi_bar_n, psi_n, r_to_s, s_to_r
from planehopf.polynomials import MultiPoly, RationalFn, ratfn_equal

from fixtures import E4_TABLES


def xelt(spec):
    return LinComb({parse_forest(code): Fraction(c, 24)
                    for code, c in spec.items()})


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_e4_tables(k):
    assert idem.eulerian(4, k) == xelt(E4_TABLES[k])


@pytest.mark.parametrize("n", range(1, 6))
def test_eulerian_sum_is_identity(n):
    total = LinComb.zero()
    for k in range(1, n + 1):
        total = total + idem.eulerian(n, k)
    assert total == LinComb({f: Fraction(1) for f in s_n(n).support()})


def test_chi_dual_route():
    # chi_T(t) == (-1)^n Gamma_T(-t)
    t_var = MultiPoly.var("t")
    for n in range(1, 6):
        for t in enumerate_trees(n):
            chi = idem.chi_poly(t)
            g = idem.gamma_alpha((t,))
            assert chi == g.substitute({"alpha": -t_var}) \
                * Fraction((-1) ** n)


def test_chi_difference_equation():
    t_var = MultiPoly.var("t")
    for n in range(1, 6):
        for t in enumerate_trees(n):
            chi = idem.chi_poly(t)
            delta = chi.substitute({"t": t_var + 1}) - chi
            prod = MultiPoly.const(1)
            for c in t:
                prod = prod * idem.chi_poly(c)
            assert delta == prod


def test_solomon_is_first_eulerian():
    for n in range(1, 6):
        assert idem.solomon_x(n) == idem.eulerian(n, 1)


def test_solomon_tree_supported():
    for n in range(1, 7):
        assert all(len(f) == 1 for f in idem.solomon_x(n).support())


def test_solomon_degree_2():
    assert idem.solomon(2) == LinComb({(2,): Fraction(1),
                                       (1, 1): Fraction(-1, 2)})


def test_dynkin_x():
    for n in range(1, 6):
        psi_x, psibar_x = idem.dynkin_x(n)
        # Psi_n is the chain tree up to lower-order trees; Psibar_n is the
        # sum of all trees
        assert psibar_x == LinComb(
            {(t,): Fraction(1) for t in enumerate_trees(n)})
        assert psi_x.coeff((chain_tree(n),)) == 1
        assert all(len(f) == 1 for f in psi_x.support())


def _lincomb_close(a, b):
    keys = set(a.terms) | set(b.terms)
    return all(ratfn_equal(a.coeff(k) or RationalFn(0),
                           b.coeff(k) or RationalFn(0)) for k in keys)


@pytest.mark.parametrize("n", range(1, 5))
def test_q_solomon_specializations(n):
    phi = idem.q_solomon(n)
    q1 = LinComb({i: c.substitute({"q": Fraction(1)})
                  for i, c in phi.terms.items()})
    assert _lincomb_close(q1, s_to_r(idem.solomon(n)))
    q0 = LinComb({i: c.substitute({"q": Fraction(0)})
                  for i, c in phi.terms.items()})
    assert _lincomb_close(q0, psi_n(n).scale(Fraction(1, n)))


def _transform_1mq_ratfn(a):
    """The morphism A -> (1-q)A on a ribbon element with RationalFn
    coefficients."""
    out = LinComb.zero()
    for i, c in r_to_s(a).terms.items():
        term = LinComb.monomial((), MultiPoly.const(1))
        for part in i:
            term = ncsf.r_product(term, ncsf.s_n_1mq(part))
        out = out + term.scale(RationalFn.coerce(c))
    return out


@pytest.mark.parametrize("n", range(1, 5))
def test_s_n_over_1mq_inverts(n):
    # applying the (1-q)-transform to S_n(A/(1-q)) recovers S_n
    got = _transform_1mq_ratfn(idem.s_n_over_1mq(n))
    want = s_to_r(LinComb.monomial((n,), Fraction(1)))
    assert idem.lincomb_ratfn_equal(got, want)


@pytest.mark.parametrize("n", range(1, 5))
def test_q_solomon_from_dynkin_transform(n):
    # (1 - q^n)/n Psi_n(A/(1-q)) == phi_n(q)
    q = MultiPoly.var("q")
    lhs = idem.transform_over_1mq(r_to_s(psi_n(n))) \
        .scale(RationalFn(1 - q ** n, n))
    assert idem.lincomb_ratfn_equal(lhs, idem.q_solomon(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_primitivity(n):
    assert idem.is_primitive(r_to_s(psi_n(n)))
    assert idem.is_primitive(r_to_s(psi_bar_n(n)))
    assert idem.is_primitive(idem.solomon(n))


@pytest.mark.parametrize("n", range(1, 5))
def test_q_solomon_primitive(n):
    assert idem.is_primitive(r_to_s(idem.q_solomon(n)))


@pytest.mark.parametrize("n", range(2, 6))
def test_dynkin_quasi_idempotent(n):
    ok, c = idem.quasi_idempotent_check(psi_n(n), n)
    assert ok and c == n
    ok, c = idem.quasi_idempotent_check(psi_bar_n(n), n)
    assert ok and c == n


def test_solomon_quasi_idempotent():
    ok, c = idem.quasi_idempotent_check(s_to_r(idem.solomon(4)), 4)
    assert ok and c == 1


D_LAMBDA_SCALARS = {(3,): 4, (2, 1): 12, (1, 1, 1): 4}


@pytest.mark.parametrize("lam", sorted(D_LAMBDA_SCALARS))
def test_d_lambda_quasi_idempotent(lam):
    e = birkhoff.d_lambda_ribbon(lam)
    ok, c = idem.quasi_idempotent_check(e, 4)
    assert ok and c == D_LAMBDA_SCALARS[lam] and c != 0


@pytest.mark.parametrize("n", range(2, 6))
def test_all_d_lambda_primitive_and_quasi(n):
    for lam in partitions_of(n - 1):
        e = birkhoff.d_lambda_ribbon(lam)
        assert idem.is_primitive(r_to_s(e))
        ok, c = idem.quasi_idempotent_check(e, n)
        assert ok and c != 0


def test_group_degree_guard():
    with pytest.raises(idem.GroupDegreeGuard):
        idem.quasi_idempotent_check(psi_n(7), 7)


def test_eulerian_domain_errors():
    with pytest.raises(ValueError):
        idem.eulerian(4, 0)
    with pytest.raises(ValueError):
        idem.eulerian(4, 5)
