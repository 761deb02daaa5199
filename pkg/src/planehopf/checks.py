"""Named invariant suites, shared by the ``verify`` CLI command and the
test suite.  Each suite takes a degree bound and returns a list of
counterexample descriptions (empty means the suite passed)."""

from __future__ import annotations

from fractions import Fraction

from . import birkhoff, hopf, tamari
from .forests import enumerate_forests, enumerate_trees, forest_code
from .laurent import LaurentPoly
from .lincomb import LinComb
from .polynomials import MultiPoly


def suite_hopf(n: int) -> list[str]:
    """Coassociativity of both coproducts, the bialgebra law on the Y side,
    and the product/coproduct duality between the two bases."""
    bad = []
    for size in range(0, n + 1):
        for f in enumerate_forests(size):
            for name, cop in (("Y", hopf.y_coproduct), ("X", hopf.x_coproduct)):
                left = LinComb.zero()
                right = LinComb.zero()
                for (f1, f2), c in cop(f).items():
                    for (g1, g2), d in cop(f1).items():
                        left = left + LinComb.monomial((g1, g2, f2), c * d)
                    for (g1, g2), d in cop(f2).items():
                        right = right + LinComb.monomial((f1, g1, g2), c * d)
                if left != right:
                    bad.append(f"coassociativity[{name}] fails at {forest_code(f)}")
    # duality: <X_F X_G, Y_H> = <X_F (x) X_G, Delta Y_H>
    for n1 in range(1, n):
        for n2 in range(1, n + 1 - n1):
            for f in enumerate_forests(n1):
                for g in enumerate_forests(n2):
                    prod = hopf.x_product(f, g)
                    for h in enumerate_forests(n1 + n2):
                        if prod.coeff(h) != hopf.y_coproduct(h).coeff((f, g)):
                            bad.append(
                                f"duality fails at {forest_code(f)},"
                                f"{forest_code(g)} vs {forest_code(h)}")
    # bialgebra on Y: Delta(Y_F Y_G) = Delta(Y_F) Delta(Y_G)
    for n1 in range(1, n):
        for n2 in range(1, n + 1 - n1):
            for f in enumerate_forests(n1):
                for g in enumerate_forests(n2):
                    lhs = hopf.y_coproduct(f + g)
                    rhs = LinComb.zero()
                    for (f1, f2), c in hopf.y_coproduct(f).items():
                        for (g1, g2), d in hopf.y_coproduct(g).items():
                            rhs = rhs + LinComb.monomial((f1 + g1, f2 + g2), c * d)
                    if lhs != rhs:
                        bad.append(f"bialgebra fails at {forest_code(f)},"
                                   f"{forest_code(g)}")
    return bad


def suite_dendriform(n: int) -> list[str]:
    """Half-product splitting, the three dendriform axioms, and the
    recursions for the divided powers Lambda_n and S_n."""
    bad = []
    for n1 in range(1, n):
        for n2 in range(1, n + 1 - n1):
            for f in enumerate_forests(n1):
                for g in enumerate_forests(n2):
                    if (hopf.x_prec(f, g) + hopf.x_succ(f, g)
                            != hopf.x_product(f, g)):
                        bad.append(f"split fails at {forest_code(f)},"
                                   f"{forest_code(g)}")
    bullet = ((),)

    def half_lin(op, a, b):
        out = LinComb.zero()
        for f, cf in a.terms.items():
            for g, cg in b.terms.items():
                out = out + op(f, g).scale(cf * cg)
        return out

    # axioms on triples of single trees with total size <= n
    for s1 in range(1, n - 1):
        for s2 in range(1, n - s1):
            for s3 in range(1, n + 1 - s1 - s2):
                for t1 in enumerate_trees(s1):
                    for t2 in enumerate_trees(s2):
                        for t3 in enumerate_trees(s3):
                            x = LinComb.monomial((t1,), Fraction(1))
                            y = LinComb.monomial((t2,), Fraction(1))
                            z = LinComb.monomial((t3,), Fraction(1))
                            xy = hopf.x_product_lin(x, y)
                            yz = hopf.x_product_lin(y, z)
                            a1 = half_lin(hopf.x_prec, half_lin(hopf.x_prec, x, y), z)
                            a2 = half_lin(hopf.x_prec, x, yz)
                            b1 = half_lin(hopf.x_prec, half_lin(hopf.x_succ, x, y), z)
                            b2 = half_lin(hopf.x_succ, x, half_lin(hopf.x_prec, y, z))
                            c1 = half_lin(hopf.x_succ, xy, z)
                            c2 = half_lin(hopf.x_succ, x, half_lin(hopf.x_succ, y, z))
                            if a1 != a2 or b1 != b2 or c1 != c2:
                                bad.append(
                                    "dendriform axiom fails at "
                                    f"{forest_code((t1,))},{forest_code((t2,))},"
                                    f"{forest_code((t3,))}")
    # Lambda_n = X_bullet < Lambda_{n-1}; S_n = S_{n-1} > X_bullet
    for k in range(2, n + 1):
        lam = half_lin(hopf.x_prec, LinComb.monomial(bullet, Fraction(1)),
                       hopf.lambda_n(k - 1))
        if lam != hopf.lambda_n(k):
            bad.append(f"Lambda recursion fails at degree {k}")
        sn = half_lin(hopf.x_succ, hopf.s_n(k - 1),
                      LinComb.monomial(bullet, Fraction(1)))
        if sn != hopf.s_n(k):
            bad.append(f"S recursion fails at degree {k}")
    return bad


def suite_tamari(n: int) -> list[str]:
    """Product-form up-sets against the transitive closure of the cover
    relation."""
    bad = []
    for size in range(1, n + 1):
        for f in enumerate_forests(size):
            seen = {f}
            frontier = [f]
            while frontier:
                nxt = []
                for g in frontier:
                    for h in tamari.covers(g):
                        if h not in seen:
                            seen.add(h)
                            nxt.append(h)
                frontier = nxt
            if seen != set(tamari.upset(f)):
                bad.append(f"upset mismatch at {forest_code(f)}")
    return bad


def suite_factorization(n: int) -> list[str]:
    """phi+ = phi- * phi as characters: for every forest, phi+(Y_F) equals
    the convolution of phi- and the base character phi(Y_F) = a^|F| over
    the admissible-cut coproduct."""
    bad = []
    a = birkhoff.a_series(n)
    for size in range(1, n + 1):
        for f in enumerate_forests(size):
            conv = LaurentPoly.zero(a.window)
            for (f1, f2), c in hopf.y_coproduct(f).items():
                left = LaurentPoly.const(MultiPoly.coerce(c), a.window)
                for t in f1:
                    left = left * birkhoff.phi_minus(t, a)
                right = LaurentPoly.const(1, a.window)
                for _ in range(_forest_size(f2)):
                    right = right * a
                conv = conv + left * right
            if conv != birkhoff.phi_plus(f, a):
                bad.append(f"factorization fails at {forest_code(f)}")
    return bad


def _forest_size(f) -> int:
    from .forests import forest_size

    return forest_size(f)


def suite_words(n: int) -> list[str]:
    """Word model against the bracket expansion: the ribbon coefficient of
    sigma_a^+ is (-1)^(l(I)-1) times the generating sum of W(I), and |W(I)|
    is the Catalan block product."""
    bad = []
    from .compositions import compositions_of, weight

    a = birkhoff.a_series(n)
    for size in range(1, n + 1):
        expansion = birkhoff.sigma_plus_ribbon(size, a)
        for i in compositions_of(size):
            words = birkhoff.words_w(i)
            if len(words) != birkhoff.catalan_block_count(i):
                bad.append(f"|W({i})| is not the Catalan block product")
            gen = LaurentPoly.zero(a.window)
            for w in words:
                mono = MultiPoly.const(1)
                for k in w:
                    mono = mono * MultiPoly.var(f"a{k}")
                gen = gen + LaurentPoly.term(sum(w) - size, mono, a.window)
            gen = gen * LaurentPoly.const(Fraction((-1) ** (len(i) - 1)),
                                          a.window)
            if gen != expansion.coeff(i):
                bad.append(f"word sum differs from bracket at I={i}")
    return bad


def suite_quotient(n: int) -> list[str]:
    """X product through the 132-pattern quotient against the coproduct
    transpose."""
    from . import fqsym
    from .forests import forest_size

    bad = []
    for n1 in range(1, n):
        for n2 in range(1, n + 1 - n1):
            if n1 + n2 > fqsym.MAX_QUOTIENT_DEGREE:
                continue
            for f in enumerate_forests(n1):
                for g in enumerate_forests(n2):
                    if fqsym.quotient_product(f, g) != hopf.x_product(f, g):
                        bad.append(f"quotient product differs at "
                                   f"{forest_code(f)},{forest_code(g)}")
    return bad


SUITES = {
    "hopf": suite_hopf,
    "dendriform": suite_dendriform,
    "tamari": suite_tamari,
    "factorization": suite_factorization,
    "words": suite_words,
    "quotient": suite_quotient,
}
