"""Noncommutative symmetric functions, quasi-symmetric functions, and their
interaction with the plane-forest algebras.

Nsym elements are linear combinations over compositions in a named basis
(S, R, Lambda); QSym elements likewise (M, F).  Conversions are the usual
triangular sums over refinement, where "J coarser than I" means D(J) is a
subset of D(I).

The embedding of Sym spanned by the S_n = sum of all X_F (equivalently the
Lambda_n = X on a singleton forest) sends R_I, S^I and Lambda^I to explicit
X-expansions counted by labellings of forests; three independent routes are
compared in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import compositions as comps
from .compositions import (coarsenings, complement, compositions_of,
                           refinements, reverse, weight)
from .forests import (Forest, enumerate_forests, forest_size,
                      linear_extensions, strict_below_pairs)
from .lincomb import LinComb
from .perms import descent_composition
from .polynomials import MultiPoly, RationalFn, binomial_poly

Composition = tuple


# ---------------------------------------------------------------------------
# Nsym basis conversions

def s_to_r(a: LinComb) -> LinComb:
    """S^I = sum of R_J over J coarser than I."""
    out = LinComb.zero()
    for i, c in a.terms.items():
        for j in coarsenings(i):
            out = out + LinComb.monomial(j, c)
    return out


def r_to_s(a: LinComb) -> LinComb:
    """R_I = sum over coarser J of (-1)^(l(I)-l(J)) S^J."""
    out = LinComb.zero()
    for i, c in a.terms.items():
        for j in coarsenings(i):
            out = out + LinComb.monomial(j, c * (-1) ** (len(i) - len(j)))
    return out


def lambda_n_in_s(n: int) -> LinComb:
    """Lambda_n = sum over |I| = n of (-1)^(n - l(I)) S^I."""
    return LinComb({i: Fraction((-1) ** (n - len(i)))
                    for i in compositions_of(n)})


def lambda_comp_in_s(i: Composition) -> LinComb:
    out = LinComb.monomial((), Fraction(1))
    for part in i:
        out = s_product(out, lambda_n_in_s(part))
    return out


def s_product(a: LinComb, b: LinComb) -> LinComb:
    """Product in the S basis: concatenation of compositions."""
    out = LinComb.zero()
    for i, ci in a.terms.items():
        for j, cj in b.terms.items():
            out = out + LinComb.monomial(i + j, ci * cj)
    return out


def r_product(a: LinComb, b: LinComb) -> LinComb:
    """Product in the R basis: R_I R_J = R_{I.J} + R_{I|>J}."""
    out = LinComb.zero()
    for i, ci in a.terms.items():
        for j, cj in b.terms.items():
            c = ci * cj
            if not i:
                out = out + LinComb.monomial(j, c)
            elif not j:
                out = out + LinComb.monomial(i, c)
            else:
                out = out + LinComb.monomial(i + j, c)
                out = out + LinComb.monomial(i[:-1] + (i[-1] + j[0],) + j[1:], c)
    return out


def s_coproduct_n(n: int) -> LinComb:
    """Delta S_n = sum of S_i tensor S_j over i + j = n, as composition pairs."""
    out = LinComb.zero()
    for i in range(n + 1):
        left = (i,) if i else ()
        right = (n - i,) if n - i else ()
        out = out + LinComb.monomial((left, right))
    return out


# ---------------------------------------------------------------------------
# QSym basis conversions and products

def f_to_m(a: LinComb) -> LinComb:
    """F_I = sum of M_J over J finer than I."""
    out = LinComb.zero()
    for i, c in a.terms.items():
        for j in refinements(i):
            out = out + LinComb.monomial(j, c)
    return out


def m_to_f(a: LinComb) -> LinComb:
    """M_I = sum over finer J of (-1)^(l(J)-l(I)) F_J."""
    out = LinComb.zero()
    for i, c in a.terms.items():
        for j in refinements(i):
            out = out + LinComb.monomial(j, c * (-1) ** (len(j) - len(i)))
    return out


def _quasi_shuffles(i: Composition, j: Composition):
    if not i:
        yield j
        return
    if not j:
        yield i
        return
    for rest in _quasi_shuffles(i[1:], j):
        yield (i[0],) + rest
    for rest in _quasi_shuffles(i, j[1:]):
        yield (j[0],) + rest
    for rest in _quasi_shuffles(i[1:], j[1:]):
        yield (i[0] + j[0],) + rest


def m_product(a: LinComb, b: LinComb) -> LinComb:
    """Quasi-shuffle product in the M basis."""
    out = LinComb.zero()
    for i, ci in a.terms.items():
        for j, cj in b.terms.items():
            c = ci * cj
            for k in _quasi_shuffles(i, j):
                out = out + LinComb.monomial(k, c)
    return out


def pair(s_elem: LinComb, m_elem: LinComb):
    """Duality pairing, S basis against M basis."""
    total = Fraction(0)
    for i, c in s_elem.terms.items():
        if i in m_elem.terms:
            total = total + c * m_elem.terms[i]
    return total


def minus_x_m(a: LinComb) -> LinComb:
    """The involution X -> -X in the M basis:
    M_I(-X) = (-1)^l(I) sum of M_J over J coarser than I."""
    out = LinComb.zero()
    for i, c in a.terms.items():
        sign = (-1) ** len(i)
        for j in coarsenings(i):
            out = out + LinComb.monomial(j, c * sign)
    return out


def minus_x_f(a: LinComb) -> LinComb:
    """The involution X -> -X in the F basis:
    F_I(-X) = (-1)^|I| F of the descent complement."""
    out = LinComb.zero()
    for i, c in a.terms.items():
        out = out + LinComb.monomial(complement(i), c * (-1) ** weight(i))
    return out


# ---------------------------------------------------------------------------
# Labelling counts and the embedding into the X basis

def nondecreasing_labellings(f: Forest, i: Composition) -> int:
    """Labellings u of the forest with evaluation I and u weakly increasing
    from the leaves toward the roots."""
    return _labelling_count(f, i, strict=False)


def strict_labellings(f: Forest, i: Composition) -> int:
    """Labellings with evaluation I, strictly increasing toward the roots."""
    return _labelling_count(f, i, strict=True)


def _labelling_count(f: Forest, i: Composition, strict: bool) -> int:
    n = forest_size(f)
    if weight(i) != n:
        return 0
    below = strict_below_pairs(f)
    counts = 0
    # assign to each node a letter in 1..l(I) with the given multiplicities
    letters = []
    for k, part in enumerate(i, start=1):
        letters.extend([k] * part)

    from itertools import permutations

    seen = set()
    for perm in permutations(letters):
        if perm in seen:
            continue
        seen.add(perm)
        ok = True
        for lo, hi in below:
            a, b = perm[lo - 1], perm[hi - 1]
            if a > b or (strict and a == b):
                ok = False
                break
        if ok:
            counts += 1
    return counts


def embed_r(i: Composition) -> LinComb:
    """R_I in the X basis: linear extensions of ribbon shape I."""
    out = LinComb.zero()
    for f in enumerate_forests(weight(i)):
        c = sum(1 for sigma in linear_extensions(f)
                if descent_composition(sigma) == i)
        if c:
            out = out + LinComb.monomial(f, Fraction(c))
    return out


def embed_s(i: Composition) -> LinComb:
    """S^I in the X basis: nondecreasing labellings of evaluation I."""
    out = LinComb.zero()
    for f in enumerate_forests(weight(i)):
        c = nondecreasing_labellings(f, i)
        if c:
            out = out + LinComb.monomial(f, Fraction(c))
    return out


def embed_lambda(i: Composition) -> LinComb:
    """Lambda^I in the X basis: strict labellings of evaluation I."""
    out = LinComb.zero()
    for f in enumerate_forests(weight(i)):
        c = strict_labellings(f, i)
        if c:
            out = out + LinComb.monomial(f, Fraction(c))
    return out


def gamma_qsym_m(f: Forest) -> LinComb:
    """Gamma_F(X) in the M basis: nondecreasing labelling counts."""
    n = forest_size(f)
    out = LinComb.zero()
    for i in compositions_of(n):
        c = nondecreasing_labellings(f, i)
        if c:
            out = out + LinComb.monomial(i, Fraction(c))
    return out


def gamma_qsym_f(f: Forest) -> LinComb:
    """Gamma_F(X) in the F basis: descent compositions of linear extensions."""
    out = LinComb.zero()
    for sigma in linear_extensions(f):
        out = out + LinComb.monomial(descent_composition(sigma), Fraction(1))
    return out


def chi_qsym_m(f: Forest) -> LinComb:
    """chi_F(X) = (-1)^|F| Gamma_F(-X), in the M basis."""
    return minus_x_m(gamma_qsym_m(f)).scale(Fraction((-1) ** forest_size(f)))


# ---------------------------------------------------------------------------
# Alphabet transforms in Nsym

def s_n_1mq(n: int) -> LinComb:
    """S_n((1-q)A) in the R basis, coefficients polynomials in q."""
    q = MultiPoly.var("q")
    if n == 0:
        return LinComb.monomial((), MultiPoly.const(1))
    out = LinComb.zero()
    for k in range(n):
        i = (1,) * k + (n - k,)
        out = out + LinComb.monomial(i, (1 - q) * (-q) ** k)
    return out


def transform_1mq(a: LinComb) -> LinComb:
    """A -> (1-q)A on an S-basis element, output in the R basis."""
    out = LinComb.zero()
    for i, c in a.terms.items():
        term = LinComb.monomial((), MultiPoly.const(1))
        for part in i:
            term = r_product(term, s_n_1mq(part))
        out = out + term.scale(MultiPoly.coerce(c))
    return out


def psi_n(n: int) -> LinComb:
    """Power sum Psi_n in the R basis."""
    return LinComb({(1,) * k + (n - k,): Fraction((-1) ** k)
                    for k in range(n)})


def psi_n_via_limit(n: int) -> LinComb:
    """Psi_n as the limit of S_n((1-q)A)/(1-q) at q = 1 (exact division)."""
    q = MultiPoly.var("q")
    out = LinComb.zero()
    for i, c in s_n_1mq(n).terms.items():
        quot = MultiPoly.coerce(c).divexact(1 - q)
        out = out + LinComb.monomial(i, quot.substitute({"q": Fraction(1)}).as_constant())
    return out


def psi_bar_n(n: int) -> LinComb:
    """The mirror power sum, with hooks growing on the other side."""
    return LinComb({(n - k,) + (1,) * k: Fraction((-1) ** k)
                    for k in range(n)})


# ---------------------------------------------------------------------------
# Alphabet evaluations in QSym (M basis in, polynomials out)

def eval_binomial(a: LinComb, var: str = "alpha") -> "MultiPoly":
    """Evaluate on an alphabet of ``var`` ones: M_I -> binomial(var, l(I))."""
    out = MultiPoly.zero()
    for i, c in a.terms.items():
        out = out + binomial_poly(var, len(i)) * MultiPoly.coerce(c)
    return out


def eval_geometric(a: LinComb, m: int) -> "MultiPoly":
    """Evaluate on the alphabet {1, q, ..., q^(m-1)}."""
    q = MultiPoly.var("q")
    out = MultiPoly.zero()
    for i, c in a.terms.items():
        term = MultiPoly.zero()
        for js in combinations(range(m), len(i)):
            term = term + q ** sum(part * j for part, j in zip(i, js))
        out = out + term * MultiPoly.coerce(c)
    return out


def eval_geometric_inf(a: LinComb) -> RationalFn:
    """Evaluate on the infinite alphabet {1, q, q^2, ...}:
    M_I -> q^(sum (k-1) i_k) / prod_k (1 - q^(i_k + ... + i_l))."""
    q = MultiPoly.var("q")
    out = RationalFn(MultiPoly.zero(), MultiPoly.const(1))
    for i, c in a.terms.items():
        num = q ** sum((k - 1) * part for k, part in enumerate(i, start=1))
        den = MultiPoly.const(1)
        for k in range(len(i)):
            den = den * (1 - q ** sum(i[k:]))
        out = out + RationalFn(num, den) * RationalFn(MultiPoly.coerce(c), MultiPoly.const(1))
    return out


def eval_xqt(a: LinComb) -> RationalFn:
    """Evaluate on the (q, t) alphabet: even letters q^i (i >= 0) ascending,
    odd letters q^j t (j >= 1) descending; each M_I splits as an even prefix
    and an odd suffix."""
    out = RationalFn(MultiPoly.zero(), MultiPoly.const(1))
    for i, c in a.terms.items():
        val = RationalFn(MultiPoly.zero(), MultiPoly.const(1))
        for cut in range(len(i) + 1):
            even, odd = i[:cut], i[cut:]
            val = val + _even_factor(even) * _odd_part_factor(odd)
        out = out + val * RationalFn(MultiPoly.coerce(c), MultiPoly.const(1))
    return out


def _even_factor(i: Composition) -> RationalFn:
    q = MultiPoly.var("q")
    num = q ** sum((k - 1) * part for k, part in enumerate(i, start=1))
    den = MultiPoly.const(1)
    for k in range(len(i)):
        den = den * (1 - q ** sum(i[k:]))
    return RationalFn(num, den)


def _odd_part_factor(i: Composition) -> RationalFn:
    """Contribution of the odd letters q^j t (j >= 1), taken with strictly
    decreasing j along the blocks; within a block the letters coincide."""
    q = MultiPoly.var("q")
    t = MultiPoly.var("t")
    if not i:
        return RationalFn(MultiPoly.const(1), MultiPoly.const(1))
    total = RationalFn(MultiPoly.zero(), MultiPoly.const(1))

    def blockings(parts):
        if not parts:
            yield ()
            return
        for cut in range(1, len(parts) + 1):
            for rest in blockings(parts[cut:]):
                yield (parts[:cut],) + rest

    sign = (-1) ** len(i)
    for blocks in blockings(i):
        nblocks = len(blocks)
        num_exp = 0
        den = MultiPoly.const(1)
        prefix = 0
        for m, block in enumerate(blocks, start=1):
            prefix += sum(block)
            den = den * (1 - q ** prefix)
            num_exp += (nblocks - m + 1) * sum(block)
        num = MultiPoly.const(sign) * (q ** num_exp) * (t ** weight(i))
        total = total + RationalFn(num, den)
    return total


# ---------------------------------------------------------------------------
# omega involutions on QSym (F basis)

OMEGA_KINDS = ("conjugate", "reverse", "complement")


def omega_f(a: LinComb, kind: str = "conjugate") -> LinComb:
    """An involution on the F basis sending F_I to F of a transformed shape."""
    if kind not in OMEGA_KINDS:
        raise ValueError(f"unknown omega kind {kind!r}")
    fn = {"conjugate": comps.conjugate, "reverse": reverse,
          "complement": complement}[kind]
    out = LinComb.zero()
    for i, c in a.terms.items():
        out = out + LinComb.monomial(fn(i), c)
    return out
