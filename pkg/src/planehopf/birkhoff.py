"""Birkhoff factorization of the generic character sigma_a and the
multiparameter Catalan elements.

The character phi(M_I) = a^n [I = (n)] of QSym is factorized as
phi+ = phi- * phi in the Rota-Baxter algebra of Laurent series, where
a = a(z) = sum of a_n z^(n-1) and P+ takes the polar part.  On trees the
factorization closes over the Tamari order:

    phi+(Y_T) = sum over F >= T of a_F z^(-r(F))

with a_F the product of the code letters of F and r(F) its number of roots.
Setting z = 1 gives the grouplike series C = sum of a_G C_G; the residue at
z = 0 gives the primitive series D = sum over trees of a_T C_T, whose
homogeneous pieces split into the quasi-idempotents D_lambda.

The S, Lambda and ribbon expansions of sigma_a(+/-) are driven by the
iterated Rota-Baxter brackets P^I_eps and, combinatorially, by the word sets
W(I) and S(I) whose cardinalities are products of Catalan numbers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from . import tamari
from .compositions import (composition_from_signs, compositions_of,
                           descent_set, sign_word, weight)
from .forests import (Forest, Tree, enumerate_forests, enumerate_trees,
                      forest_size, polish_code, reverse_polish_code)
from .hopf import c_to_x
from .laurent import LaurentPoly
from .lincomb import LinComb
from .linalg import solve
from .ncsf import embed_r
from .polynomials import MultiPoly


# ---------------------------------------------------------------------------
# The series a(z)

def a_var(k: int) -> MultiPoly:
    return MultiPoly.var(f"a{k}")


def a_series(terms: int, window: int | None = None) -> LaurentPoly:
    """a(z) = sum of a_n z^(n-1) with symbolic coefficients, truncated after
    a_terms.  Keeping terms >= n makes every polar-part coefficient of the
    degree-n factorization exact (a monomial a_{k_1}..a_{k_n} has z-exponent
    sum(k_j) - n, so letters above n never reach the polar side).  The window
    must absorb the intermediate exponents of iterated brackets; the default
    is generous for that."""
    if window is None:
        window = terms * (terms + 1) + 2
    return LaurentPoly({k - 1: a_var(k) for k in range(terms + 1)},
                       window=window)


def a_series_ab(terms: int, window: int | None = None) -> LaurentPoly:
    """The specialization a(z) = a/z + b/(1-z), truncated like a_series."""
    if window is None:
        window = terms * (terms + 1) + 2
    coeffs = {-1: MultiPoly.var("a")}
    for k in range(1, terms + 1):
        coeffs[k - 1] = MultiPoly.var("b")
    return LaurentPoly(coeffs, window=window)


def a_weight(f: Forest) -> MultiPoly:
    """a_F: the product of a_c over the code letters c of F."""
    out = MultiPoly.const(1)
    for c in reverse_polish_code(f):
        out = out * a_var(c)
    return out


# ---------------------------------------------------------------------------
# The factorized character

def phi_plus(f: Forest, a: LaurentPoly) -> LaurentPoly:
    """phi+(Y_F); multiplicative over the trees of the forest."""
    out = LaurentPoly.const(1, a.window)
    for t in f:
        out = out * _phi_plus_tree(t, a)
    return out


def _phi_plus_tree(t: Tree, a: LaurentPoly) -> LaurentPoly:
    """phi+(Y_T) = P+(phi+(Y_F) a) for T = B+(F)."""
    return (phi_plus(tuple(t), a) * a).polar_part()


def phi_minus(t: Tree, a: LaurentPoly) -> LaurentPoly:
    """phi-(Y_T) = -P-(phi+(Y_F) a) for T = B+(F)."""
    return -(phi_plus(tuple(t), a) * a).regular_part()


def phi_plus_closed(t: Tree, a: LaurentPoly) -> LaurentPoly:
    """phi+(Y_T) by the Tamari formula: sum over F >= T of a_F z^(-r(F))."""
    out = LaurentPoly.zero(a.window)
    for g in tamari.upset((t,)):
        out = out + LaurentPoly.term(-len(g), _a_weight_from(a, g), a.window)
    return out


def _a_weight_from(a: LaurentPoly, g: Forest) -> MultiPoly:
    out = MultiPoly.const(1)
    for c in reverse_polish_code(g):
        out = out * a.coefficient(c - 1)
    return out


def sigma_plus(n: int, a: LaurentPoly) -> LinComb:
    """Degree-n part of sigma_a^+ as an X-basis element with Laurent
    coefficients."""
    return LinComb({f: phi_plus(f, a) for f in enumerate_forests(n)})


def series_c(n: int, a: LaurentPoly) -> LinComb:
    """Degree-n part of C = sigma_a^+ at z = 1, in the C basis."""
    return LinComb({g: _a_weight_from(a, g) for g in enumerate_forests(n)})


def series_d(n: int, a: LaurentPoly) -> LinComb:
    """Degree-n part of D = Res sigma_a^+, in the C basis (trees only)."""
    return LinComb({(t,): _a_weight_from(a, (t,)) for t in enumerate_trees(n)})


# ---------------------------------------------------------------------------
# D_lambda

def tree_code_partition(t: Tree) -> tuple[int, ...]:
    """The partition of n-1 formed by the nonzero code letters of T."""
    return tuple(sorted((c for c in polish_code((t,)) if c), reverse=True))


def d_lambda(lam: tuple[int, ...]) -> LinComb:
    """D_lambda = sum of C_T over trees whose nonzero code letters give the
    partition lambda, in the C basis."""
    n = sum(lam) + 1
    return LinComb({(t,): Fraction(1) for t in enumerate_trees(n)
                    if tree_code_partition(t) == lam})


def d_lambda_x(lam: tuple[int, ...]) -> LinComb:
    """D_lambda expanded in the X basis."""
    out = LinComb.zero()
    for f, c in d_lambda(lam).items():
        out = out + c_to_x(f).scale(c)
    return out


def d_lambda_ribbon(lam: tuple[int, ...]) -> LinComb:
    """D_lambda in the ribbon basis of Sym (it lies in the image of the
    embedding; the coordinates are found by exact linear solving)."""
    n = sum(lam) + 1
    target = d_lambda_x(lam)
    comps = list(compositions_of(n))
    forests = list(enumerate_forests(n))
    matrix = []
    rhs = []
    for f in forests:
        matrix.append([embed_r(i).coeff(f) for i in comps])
        rhs.append(target.coeff(f))
    coords = solve(matrix, rhs)
    return LinComb({i: c for i, c in zip(comps, coords)})


# ---------------------------------------------------------------------------
# Iterated Rota-Baxter brackets and basis expansions

def p_bracket(i: tuple[int, ...], eps: str, a: LaurentPoly) -> LaurentPoly:
    """P^I_eps(a): alternately multiply by a^(i_k) and project by P(eps_k)."""
    if len(i) != len(eps) or any(s not in "+-" for s in eps):
        raise ValueError("signs must be a +/- word matching the composition")
    out = LaurentPoly.const(1, a.window)
    for part, s in zip(i, eps):
        for _ in range(part):
            out = out * a
        out = out.polar_part() if s == "+" else out.regular_part()
    return out


def sigma_plus_s(n: int, a: LaurentPoly) -> LinComb:
    """sigma_a^+ in the S basis:
    sum over I of (-1)^(l(I)-1) P^I_{-...-+}(a) S^I."""
    out = LinComb.zero()
    for i in compositions_of(n):
        eps = "-" * (len(i) - 1) + "+"
        coeff = p_bracket(i, eps, a)
        out = out + LinComb.monomial(i, _laurent_scale(coeff, (-1) ** (len(i) - 1)))
    return out


def _laurent_scale(f: LaurentPoly, c) -> LaurentPoly:
    return f * LaurentPoly.const(c, f.window)


def sigma_minus_s(n: int, a: LaurentPoly) -> LinComb:
    """sigma_a^- in the S basis: sum over I of (-1)^l(I) P^I_{-...-}(a) S^I."""
    out = LinComb.zero()
    for i in compositions_of(n):
        coeff = p_bracket(i, "-" * len(i), a)
        out = out + LinComb.monomial(i, _laurent_scale(coeff, (-1) ** len(i)))
    return out


def sigma_plus_lambda(n: int, a: LaurentPoly) -> LinComb:
    """sigma_a^+ in the Lambda basis:
    sum over I of (-1)^(|I|+l(I)) P^I_{+...+}(a) Lambda^I."""
    out = LinComb.zero()
    for i in compositions_of(n):
        coeff = p_bracket(i, "+" * len(i), a)
        out = out + LinComb.monomial(i, _laurent_scale(coeff, (-1) ** (n + len(i))))
    return out


def sigma_plus_ribbon(n: int, a: LaurentPoly) -> LinComb:
    """sigma_a^+ in the ribbon basis: 1 + sum over sign words eps of
    P_{eps,+}(a) R_{eps .}, with R_{eps .} = (-1)^(l(I)-1) R_I."""
    out = LinComb.zero()
    for i in compositions_of(n):
        eps = sign_word(i)[:-1]
        coeff = p_bracket((1,) * n, eps + "+", a)
        out = out + LinComb.monomial(i, _laurent_scale(coeff, (-1) ** (len(i) - 1)))
    return out


# ---------------------------------------------------------------------------
# Word models

def words_w(i: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """W(I): words w over nonnegative integers with partial sums w_1..k >= k
    exactly at the descents of I (and < k elsewhere, including k = n)."""
    n = weight(i)
    descents = descent_set(i)
    out = []

    def rec(prefix, total):
        k = len(prefix)
        if k:
            if k in descents:
                if total < k:
                    return
            elif total >= k:
                return
        if k == n:
            out.append(tuple(prefix))
            return
        for w in range(n - total):
            rec(prefix + [w], total + w)

    rec([], 0)
    return tuple(out)


def words_s(i: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """S(I): partial sums >= d at the descents d of I, and total < n."""
    n = weight(i)
    descents = descent_set(i)
    out = []

    def rec(prefix, total):
        k = len(prefix)
        if k in descents and total < k:
            return
        if k == n:
            if total < n:
                out.append(tuple(prefix))
            return
        for w in range(n - total):
            rec(prefix + [w], total + w)

    rec([], 0)
    return tuple(out)


def ribbon_from_word(w: tuple[int, ...]) -> tuple[int, ...]:
    """The unique composition I with w in W(I)."""
    n = len(w)
    if sum(w) >= n:
        raise ValueError(f"not a contributing word (sum must be < {n}): {w}")
    total = 0
    descents = set()
    for k, x in enumerate(w[:-1], start=1):
        total += x
        if total >= k:
            descents.add(k)
    from .compositions import from_descent_set

    return from_descent_set(descents, n)


def word_to_path(w: tuple[int, ...]) -> str:
    """Encode each letter k as a^k b (a = upstep, b = downstep)."""
    return "".join("a" * k + "b" for k in w)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def catalan_block_count(i: tuple[int, ...]) -> int:
    """|W(I)| as the product of Catalan numbers of the sign-block lengths."""
    word = sign_word(i)
    count = 1
    pos = 0
    while pos < len(word):
        end = pos
        while end < len(word) and word[end] == word[pos]:
            end += 1
        count *= catalan(end - pos)
        pos = end
    return count
