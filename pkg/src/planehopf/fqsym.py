"""Free quasi-symmetric functions and the 132-pattern quotient.

Bases on permutations: F (shifted-shuffle product), G_sigma = F of the
inverse, S^sigma = sum of G_tau over tau below sigma in the left weak order,
and M_sigma, the dual basis of S^sigma.  Since F_rho = sum of M_sigma over
sigma above rho, conversions between F and M are triangular sums.

The quotient by M_sigma = 0 whenever sigma contains the pattern 132
identifies the surviving M_sigma with the dual Connes-Kreimer basis X_F,
where sigma is the inverse of the maximal linear extension of F.  This gives
an independent route to the X product, compared against the coproduct
transpose in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .forests import Forest, forest_from_max_extension, max_linear_extension
from .lincomb import LinComb
from .perms import (all_perms, contains_132, inverse, inversions,
                    shifted_shuffle, standardize)

MAX_QUOTIENT_DEGREE = 6


class DegreeGuard(ValueError):
    """Raised when an n! sized computation is requested past the size cap."""


def f_product(a: LinComb, b: LinComb) -> LinComb:
    """Product in the F basis: shifted shuffles."""
    out = LinComb.zero()
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            c = cu * cv
            for w in shifted_shuffle(u, v):
                out = out + LinComb.monomial(w, c)
    return out


def f_coproduct(sigma: tuple[int, ...]) -> LinComb:
    """Coproduct in the F basis: standardized deconcatenations."""
    out = LinComb.zero()
    for k in range(len(sigma) + 1):
        out = out + LinComb.monomial((standardize(sigma[:k]),
                                      standardize(sigma[k:])))
    return out


def g_to_f(sigma: tuple[int, ...]) -> tuple[int, ...]:
    return inverse(sigma)


@lru_cache(maxsize=None)
def _left_weak_below(sigma: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All tau <= sigma in the left weak order (Inv(tau^-1) within Inv(sigma^-1))."""
    target = inversions(inverse(sigma))
    return tuple(tau for tau in all_perms(len(sigma))
                 if inversions(inverse(tau)) <= target)


def s_in_g(sigma: tuple[int, ...]) -> LinComb:
    """S^sigma expanded in the G basis."""
    return LinComb({tau: Fraction(1) for tau in _left_weak_below(sigma)})


def s_in_f(sigma: tuple[int, ...]) -> LinComb:
    return LinComb({inverse(tau): Fraction(1) for tau in _left_weak_below(sigma)})


def s_check_in_f(sigma: tuple[int, ...]) -> LinComb:
    """The dual-side series with S-check of sigma equal to S of the inverse."""
    return s_in_f(inverse(sigma))


def f_to_m(a: LinComb) -> LinComb:
    """Rewrite an F-expansion in the M basis: the coefficient of M_sigma is
    the sum of F-coefficients over rho <= sigma in the left weak order."""
    degrees = {len(s) for s in a.terms}
    out = {}
    for n in degrees:
        for sigma in all_perms(n):
            c = sum((a.terms[rho] for rho in _left_weak_below(sigma)
                     if rho in a.terms), Fraction(0))
            if c:
                out[sigma] = c
    return LinComb(out)


@lru_cache(maxsize=None)
def _m_in_f(sigma: tuple[int, ...]) -> LinComb:
    # F_sigma = sum of M_tau over tau >= sigma in the left weak order
    acc = LinComb.monomial(sigma, Fraction(1))
    for tau in all_perms(len(sigma)):
        if tau != sigma and sigma in _left_weak_below(tau):
            acc = acc - _m_in_f(tau)
    return acc


def m_to_f(a: LinComb) -> LinComb:
    """Rewrite an M-expansion in the F basis (triangular recursion)."""
    out = LinComb.zero()
    for sigma, c in a.terms.items():
        out = out + _m_in_f(sigma).scale(c)
    return out


def m_product(a: LinComb, b: LinComb) -> LinComb:
    """Product of M-expansions, computed through the F basis."""
    return f_to_m(f_product(m_to_f(a), m_to_f(b)))


def m_quotient(a: LinComb) -> LinComb:
    """Image of an M-expansion in the 132-quotient, in the X basis."""
    out = LinComb.zero()
    for sigma, c in a.terms.items():
        if contains_132(sigma):
            continue
        out = out + LinComb.monomial(forest_from_max_extension(inverse(sigma)), c)
    return out


def x_to_m(f: Forest) -> LinComb:
    """The M-basis representative of X_F."""
    return LinComb.monomial(inverse(max_linear_extension(f)), Fraction(1))


def quotient_product(f: Forest, g: Forest) -> LinComb:
    """X_F X_G computed through the FQSym quotient."""
    n = sum(len(s) for s in (max_linear_extension(f), max_linear_extension(g)))
    if n > MAX_QUOTIENT_DEGREE:
        raise DegreeGuard(
            f"quotient product needs degree {n} > {MAX_QUOTIENT_DEGREE}; "
            "the factorial-size weak order tables would be too large")
    return m_quotient(m_product(x_to_m(f), x_to_m(g)))


def gamma_fqsym(f: Forest) -> LinComb:
    """Free generating function of the forest poset, in the F basis."""
    from .forests import linear_extensions

    return LinComb({sigma: Fraction(1) for sigma in linear_extensions(f)})
